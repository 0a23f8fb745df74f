#include "qising/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace qising::fractal {

namespace {

std::int64_t count_boxes(const std::vector<Interval>& iv, double eps, double anchor) {
    std::int64_t count = 0;
    std::int64_t last = std::numeric_limits<std::int64_t>::min();
    for (const auto& b : iv) {
        auto i0 = static_cast<std::int64_t>(std::floor((b.lo - anchor) / eps));
        auto i1 = static_cast<std::int64_t>(std::floor((b.hi - anchor) / eps));
        i0 = std::max(i0, last + 1);
        if (i1 >= i0) {
            count += i1 - i0 + 1;
            last = i1;
        }
    }
    return count;
}

struct Fit {
    double slope, intercept, r2;
};

Fit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
    double icpt = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0, ym = sy / n;
    for (std::size_t i = 0; i < n; ++i) {
        double e = ys[i] - (slope * xs[i] + icpt);
        ss_res += e * e;
        ss_tot += (ys[i] - ym) * (ys[i] - ym);
    }
    double r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return {slope, icpt, r2};
}

DimensionEstimate box_counting_iv(const std::vector<Interval>& iv, double eps_min,
                                  double eps_max, int levels) {
    if (iv.empty()) throw std::domain_error("box counting of empty set");
    if (!(eps_min < eps_max)) throw std::invalid_argument("need eps_min < eps_max");
    if (levels < 5) throw std::invalid_argument("need at least 5 scale levels");
    const double anchor = iv.front().lo;
    std::vector<double> lx, ly;
    for (int i = 0; i < levels; ++i) {
        double eps = eps_max * std::pow(eps_min / eps_max, double(i) / (levels - 1));
        auto nbox = count_boxes(iv, eps, anchor);
        lx.push_back(std::log(1.0 / eps));
        ly.push_back(std::log(static_cast<double>(nbox)));
    }
    Fit full = least_squares(lx, ly);
    DimensionEstimate out{full.slope, full.intercept, full.r2, eps_min, eps_max, levels};
    if (levels >= 7) {
        std::vector<double> rx(lx.begin() + 1, lx.end() - 1);
        std::vector<double> ry(ly.begin() + 1, ly.end() - 1);
        Fit red = least_squares(rx, ry);
        if (red.r2 >= full.r2 + 0.005) {
            out.slope = red.slope;
            out.intercept = red.intercept;
            out.r_squared = red.r2;
            out.levels_used = levels - 2;
        }
    }
    return out;
}

}  // namespace

DimensionEstimate box_counting(const BandSet& s, double eps_min, double eps_max,
                               int levels) {
    return box_counting_iv(s.intervals(), eps_min, eps_max, levels);
}

DimensionEstimate box_counting(const PointSet& s, double eps_min, double eps_max,
                               int levels) {
    std::vector<Interval> iv;
    iv.reserve(s.size());
    for (double p : s.points()) iv.push_back({p, p});
    return box_counting_iv(iv, eps_min, eps_max, levels);
}

ThicknessEstimate thickness(const BandSet& s) {
    if (s.empty()) throw std::domain_error("thickness of empty set");
    ThicknessEstimate out;
    if (s.size() == 1) {
        out.tau = std::numeric_limits<double>::infinity();
        out.nu = 1.0;
        return out;
    }
    auto gaps = s.gaps();
    std::sort(gaps.begin(), gaps.end(), [](const Interval& a, const Interval& b) {
        return a.length() > b.length();
    });
    const Interval hull = s.hull();
    std::set<double> cuts{hull.lo, hull.hi};
    double tau = std::numeric_limits<double>::infinity();
    for (const auto& g : gaps) {
        auto it = cuts.lower_bound(g.lo);
        double left_bridge = g.lo - *std::prev(it);
        auto jt = cuts.upper_bound(g.hi);
        double right_bridge = *jt - g.hi;
        double ratio = std::min(left_bridge, right_bridge) / g.length();
        tau = std::min(tau, ratio);
        out.gaps.push_back({g, ratio});
        cuts.insert(g.lo);
        cuts.insert(g.hi);
    }
    out.tau = tau;
    out.nu = tau / (1.0 + tau);
    return out;
}

bool astels_interval_check(const BandSet& s, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    return m * thickness(s).nu >= 1.0;
}

double dimension_lower_bound(const ThicknessEstimate& t) {
    if (!(t.tau > 0)) throw std::invalid_argument("thickness must be positive");
    if (std::isinf(t.tau)) return 1.0;
    return std::log(2.0) / std::log(2.0 + 1.0 / t.tau);
}

std::vector<std::pair<double, DimensionEstimate>> local_dimension_profile(
    const BandSet& s, int window_count) {
    if (window_count < 3) throw std::invalid_argument("need at least 3 windows");
    if (s.empty()) throw std::domain_error("profile of empty set");
    const Interval hull = s.hull();
    const double W = 2.0 * hull.length() / (window_count + 1);  // 50% overlap

    // resolution floor: half the smallest band
    double min_feature = W;
    for (const auto& b : s.intervals())
        if (b.length() > 0) min_feature = std::min(min_feature, b.length());

    std::vector<std::pair<double, DimensionEstimate>> out;
    for (int i = 0; i < window_count; ++i) {
        double lo = hull.lo + i * W / 2.0, hi = lo + W;
        std::vector<Interval> clipped;
        for (const auto& b : s.intervals()) {
            double a = std::max(b.lo, lo), z = std::min(b.hi, hi);
            if (a <= z) clipped.push_back({a, z});
        }
        // a window that falls inside a gap sees at most clipped slivers; a
        // local-dimension estimate needs real coverage relative to the
        // window's expected share of the set
        if (clipped.empty()) continue;
        double clipped_len = 0;
        for (const auto& iv : clipped) clipped_len += iv.length();
        double expected_share = s.total_length() * W / hull.length();
        if (clipped_len < expected_share / 8) continue;
        double eps_max = W / 8.0;
        double eps_min = std::max(W / 2048.0, min_feature / 2.0);
        if (!(eps_min < eps_max)) eps_min = eps_max / 16.0;
        out.emplace_back(lo + W / 2.0, box_counting_iv(clipped, eps_min, eps_max, 8));
    }
    return out;
}

BandSet cantor_middle_thirds(int level) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    if (level > 18) throw std::invalid_argument("level too deep");
    std::vector<std::pair<std::int64_t, std::int64_t>> segs{{0, 1}};  // thirds of 3^0
    std::int64_t den = 1;
    for (int l = 0; l < level; ++l) {
        std::vector<std::pair<std::int64_t, std::int64_t>> next;
        next.reserve(segs.size() * 2);
        for (auto [a, b] : segs) {
            next.push_back({3 * a, 3 * a + 1});
            next.push_back({3 * a + 2, 3 * b});
        }
        segs = std::move(next);
        den *= 3;
    }
    std::vector<Interval> iv;
    iv.reserve(segs.size());
    for (auto [a, b] : segs)
        iv.push_back({static_cast<double>(a) / den, static_cast<double>(b) / den});
    return BandSet(std::move(iv), 0.0);
}

}  // namespace qising::fractal
