#pragma once

#include <cstddef>
#include <vector>

namespace qising {

struct Interval {
    double lo = 0, hi = 0;
    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

/// Finite union of disjoint closed intervals, sorted ascending.
class BandSet {
public:
    BandSet() = default;
    /// Sorts, merges overlapping or touching-within-tol intervals.
    explicit BandSet(std::vector<Interval> intervals, double merge_tol = 1e-9);

    const std::vector<Interval>& intervals() const { return iv_; }
    std::size_t size() const { return iv_.size(); }
    bool empty() const { return iv_.empty(); }
    double total_length() const;
    Interval hull() const;
    /// Gaps between consecutive intervals (inside the hull).
    std::vector<Interval> gaps() const;
    bool symmetric_about_zero(double tol) const;

private:
    std::vector<Interval> iv_;
};

/// Sorted finite set of reals; near-duplicates deduplicated at tolerance.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<double> pts, double dedupe_tol = 1e-10);

    const std::vector<double>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }

    /// Flagged near-tangency locations (reported separately from roots).
    std::vector<double> flagged;

private:
    std::vector<double> pts_;
};

/// Exact Hausdorff distance between finite unions of closed intervals
/// (points are degenerate intervals). Throws std::domain_error on empty input.
double hausdorff_distance(const BandSet& a, const BandSet& b);
double hausdorff_distance(const PointSet& a, const PointSet& b);
double hausdorff_distance(const PointSet& a, const BandSet& b);
double hausdorff_distance(const BandSet& a, const PointSet& b);

/// Minkowski sum of two interval unions (pairwise sums, merged).
BandSet minkowski_sum(const BandSet& a, const BandSet& b);

}  // namespace qising
