#pragma once

#include <utility>
#include <vector>

#include "qising/sets.hpp"

namespace qising::fractal {

struct DimensionEstimate {
    double slope = 0;      // box-counting dimension estimate
    double intercept = 0;
    double r_squared = 0;
    double eps_min = 0, eps_max = 0;
    int levels_used = 0;
};

struct GapRecord {
    Interval gap;
    double bridge_ratio;  // min(bridge_left, bridge_right) / |gap|
};

struct ThicknessEstimate {
    double tau = 0;   // +inf sentinel for a single interval
    double nu = 0;    // tau / (1 + tau)
    std::vector<GapRecord> gaps;  // sorted by decreasing gap length
};

/// Least-squares slope of log N(eps) vs log(1/eps) over geometrically spaced
/// scales; boxes live on a lattice anchored at the hull's left endpoint.
/// The two extreme scales are dropped when that improves r^2 by >= 0.005.
DimensionEstimate box_counting(const BandSet& s, double eps_min, double eps_max,
                               int levels);
DimensionEstimate box_counting(const PointSet& s, double eps_min, double eps_max,
                               int levels);

/// Newhouse thickness under the decreasing-gap-length presentation.
ThicknessEstimate thickness(const BandSet& s);

/// True iff m * nu(s) >= 1 (the m-fold sum then fills the hull sum).
bool astels_interval_check(const BandSet& s, int m);

/// log 2 / log(2 + 1/tau); -> 1 as tau -> inf.
double dimension_lower_bound(const ThicknessEstimate& t);

/// Windowed box-counting profile over the hull, windows overlapping by 50%.
std::vector<std::pair<double, DimensionEstimate>> local_dimension_profile(
    const BandSet& s, int window_count);

/// Level-k middle-thirds Cantor approximation on [0,1] (test fixture).
BandSet cantor_middle_thirds(int level);

}  // namespace qising::fractal
