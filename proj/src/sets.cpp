#include "qising/sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qising {

BandSet::BandSet(std::vector<Interval> intervals, double merge_tol) {
    for (const auto& iv : intervals)
        if (iv.lo > iv.hi) throw std::invalid_argument("interval with lo > hi");
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const auto& iv : intervals) {
        if (!iv_.empty() && iv.lo <= iv_.back().hi + merge_tol)
            iv_.back().hi = std::max(iv_.back().hi, iv.hi);
        else
            iv_.push_back(iv);
    }
}

double BandSet::total_length() const {
    double s = 0;
    for (const auto& iv : iv_) s += iv.length();
    return s;
}

Interval BandSet::hull() const {
    if (iv_.empty()) throw std::domain_error("hull of empty band set");
    return {iv_.front().lo, iv_.back().hi};
}

std::vector<Interval> BandSet::gaps() const {
    std::vector<Interval> g;
    for (std::size_t i = 0; i + 1 < iv_.size(); ++i)
        g.push_back({iv_[i].hi, iv_[i + 1].lo});
    return g;
}

bool BandSet::symmetric_about_zero(double tol) const {
    std::size_t n = iv_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Interval& a = iv_[i];
        const Interval& b = iv_[n - 1 - i];
        if (std::fabs(a.lo + b.hi) > tol || std::fabs(a.hi + b.lo) > tol) return false;
    }
    return true;
}

PointSet::PointSet(std::vector<double> pts, double dedupe_tol) {
    std::sort(pts.begin(), pts.end());
    for (double p : pts) {
        if (pts_.empty() || p - pts_.back() > dedupe_tol) pts_.push_back(p);
    }
}

namespace {

double dist_to_set(double x, const std::vector<Interval>& iv) {
    // iv sorted, disjoint
    auto it = std::lower_bound(iv.begin(), iv.end(), x,
                               [](const Interval& a, double v) { return a.hi < v; });
    double d = 1e308;
    if (it != iv.end()) d = std::min(d, std::max(0.0, it->lo - x));
    if (it != iv.begin()) {
        const Interval& p = *(it - 1);
        d = std::min(d, std::max(0.0, std::max(p.lo - x, x - p.hi)));
    }
    return d;
}

double directed_hausdorff(const std::vector<Interval>& A, const std::vector<Interval>& B) {
    double h = 0;
    for (const auto& iv : A) {
        h = std::max(h, dist_to_set(iv.lo, B));
        h = std::max(h, dist_to_set(iv.hi, B));
    }
    // interior candidates: midpoints of B-gaps covered by A
    for (std::size_t i = 0; i + 1 < B.size(); ++i) {
        double mid = 0.5 * (B[i].hi + B[i + 1].lo);
        auto it = std::lower_bound(A.begin(), A.end(), mid,
                                   [](const Interval& a, double v) { return a.hi < v; });
        if (it != A.end() && it->lo <= mid) h = std::max(h, dist_to_set(mid, B));
    }
    return h;
}

std::vector<Interval> as_intervals(const PointSet& p) {
    std::vector<Interval> iv;
    iv.reserve(p.size());
    for (double x : p.points()) iv.push_back({x, x});
    return iv;
}

double hd(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    if (a.empty() || b.empty()) throw std::domain_error("hausdorff distance of empty set");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace

double hausdorff_distance(const BandSet& a, const BandSet& b) {
    return hd(a.intervals(), b.intervals());
}
double hausdorff_distance(const PointSet& a, const PointSet& b) {
    return hd(as_intervals(a), as_intervals(b));
}
double hausdorff_distance(const PointSet& a, const BandSet& b) {
    return hd(as_intervals(a), b.intervals());
}
double hausdorff_distance(const BandSet& a, const PointSet& b) {
    return hd(a.intervals(), as_intervals(b));
}

BandSet minkowski_sum(const BandSet& a, const BandSet& b) {
    std::vector<Interval> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& ia : a.intervals())
        for (const auto& ib : b.intervals())
            sums.push_back({ia.lo + ib.lo, ia.hi + ib.hi});
    return BandSet(std::move(sums), 1e-12);
}

}  // namespace qising
