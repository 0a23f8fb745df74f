#include "qising/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qising/kernels.hpp"
#include "qising/parallel.hpp"

namespace qising::quantum {

using sequences::Symbol;

void SpectrumParams::validate() const {
    couplings.validate();
    if (generation < 2) throw std::invalid_argument("generation must be >= 2");
    if (grid_resolution < 1000) throw std::invalid_argument("grid_resolution must be >= 1000");
    if (orbit_cap < 1) throw std::invalid_argument("orbit_cap must be >= 1");
}

TraceTriple gamma_line(double E, const CouplingMap& c) {
    c.validate();
    const double pa = c.p_a, pb = c.p_b;
    return {(E * E - (1.0 + pa * pa)) / (2.0 * pa),
            (E * E - (1.0 + pb * pb)) / (2.0 * pb),
            (pa * pa + pb * pb) / (2.0 * pa * pb)};
}

namespace {

std::vector<std::uint8_t> letters_of(const Word& w) {
    std::vector<std::uint8_t> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = w.at(i) == Symbol::B ? 1 : 0;
    return out;
}

}  // namespace

double jacobi_discriminant(double x, const Word& w, const CouplingMap& c) {
    if (w.empty()) throw std::invalid_argument("word must be non-empty");
    c.validate();
    auto letters = letters_of(w);
    double out;
    kernels::scalar_backend().jacobi_disc_sweep(std::span<const double>(&x, 1), letters,
                                                c.p_a, c.p_b, &out);
    return out;
}

namespace {

class DiscFn {
public:
    DiscFn(const std::vector<std::uint8_t>& letters, const CouplingMap& c)
        : letters_(letters), c_(c) {}
    double operator()(double x) const {
        double v;
        kernels::scalar_backend().jacobi_disc_sweep(std::span<const double>(&x, 1),
                                                    letters_, c_.p_a, c_.p_b, &v);
        return v;
    }

private:
    const std::vector<std::uint8_t>& letters_;
    const CouplingMap& c_;
};

double bisect(const DiscFn& f, double lo, double hi, double flo, double level) {
    // root of f - level on [lo, hi] with f(lo) - level = flo
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = f(mid) - level;
        if (v == 0) return mid;
        if (std::signbit(v) == std::signbit(flo)) {
            lo = mid;
            flo = v;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// The discriminant's F_k real zeros (midband points) interlace the bands, and
// exactly one critical point lies between consecutive zeros, so |disc| is
// unimodal on each inter-zero interval and monotone beyond the extreme zeros.
std::vector<double> midband_roots(const SpectrumParams& p,
                                  const std::vector<std::uint8_t>& letters,
                                  double x_lo, double x_hi, int grid) {
    const CouplingMap& c = p.couplings;
    std::vector<double> xs(grid), disc(grid);
    for (int i = 0; i < grid; ++i)
        xs[i] = x_lo + (x_hi - x_lo) * i / (grid - 1);
    const auto& be = kernels::backend();
    parallel_for_chunks(grid, p.parallelism, [&](std::size_t b, std::size_t e) {
        be.jacobi_disc_sweep(std::span<const double>(xs.data() + b, e - b), letters,
                             c.p_a, c.p_b, disc.data() + b);
    });
    DiscFn f(letters, c);
    std::vector<double> roots;
    for (int i = 0; i + 1 < grid; ++i) {
        if (disc[i] == 0)
            roots.push_back(xs[i]);
        else if (disc[i + 1] != 0 && std::signbit(disc[i]) != std::signbit(disc[i + 1]))
            roots.push_back(bisect(f, xs[i], xs[i + 1], disc[i], 0.0));
    }
    if (grid > 0 && disc[grid - 1] == 0) roots.push_back(xs[grid - 1]);
    return roots;
}

// location of the extremum of the (unimodal) discriminant on [lo, hi]
double extremum(const DiscFn& f, double lo, double hi, bool maximize) {
    double a = lo, b = hi;
    for (int it = 0; it < 140 && b - a > 1e-13 * (1 + std::fabs(a)); ++it) {
        double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        double v1 = f(m1), v2 = f(m2);
        if (!maximize) {
            v1 = -v1;
            v2 = -v2;
        }
        if (v1 < v2)
            a = m1;
        else
            b = m2;
    }
    return 0.5 * (a + b);
}

}  // namespace

SigmaResult sigma_k(const SpectrumParams& params) {
    params.validate();
    const Word w = sequences::substitution_word(params.generation);
    const auto letters = letters_of(w);
    const std::int64_t Fk = sequences::fibonacci(params.generation);
    const CouplingMap& c = params.couplings;
    const double jmax = std::max(c.p_a, c.p_b);
    const double x_lo = -0.25, x_hi = (1.0 + jmax) * (1.0 + jmax) + 0.25;

    int grid = std::max<int>(params.grid_resolution, 64 * static_cast<int>(Fk));
    std::vector<double> roots;
    for (int attempt = 0; attempt < 4; ++attempt) {
        roots = midband_roots(params, letters, x_lo, x_hi, grid);
        if (static_cast<std::int64_t>(roots.size()) == Fk) break;
        grid *= 4;
    }
    if (static_cast<std::int64_t>(roots.size()) != Fk)
        throw std::runtime_error(
            "sigma_k: found " + std::to_string(roots.size()) +
            " midband points, expected F_k = " + std::to_string(Fk) +
            " (grid too coarse)");

    DiscFn f(letters, c);
    SigmaResult out;
    int merges = 0;
    std::vector<Interval> bands;
    // leftmost edge: disc is monotone below the first midband point
    {
        double flo = f(x_lo);
        double level = flo > 0 ? 2.0 : -2.0;
        bands.push_back({bisect(f, x_lo, roots.front(), flo - level, level), 0});
    }
    for (std::size_t j = 0; j + 1 < roots.size(); ++j) {
        // disc keeps one sign between consecutive zeros; the extremum there
        // decides whether the gap is open or the bands touch
        double v_probe = f(0.5 * (roots[j] + roots[j + 1]));
        if (v_probe == 0) v_probe = f(roots[j] + 0.75 * (roots[j + 1] - roots[j]));
        bool max_side = v_probe > 0;
        double xe = extremum(f, roots[j], roots[j + 1], max_side);
        double ve = f(xe);
        if (std::fabs(ve) > 2.0) {
            double level = ve > 0 ? 2.0 : -2.0;
            double hi_edge = bisect(f, roots[j], xe, f(roots[j]) - level, level);
            double lo_edge = bisect(f, xe, roots[j + 1], ve - level, level);
            bands.back().hi = hi_edge;
            bands.push_back({lo_edge, 0});
        } else {
            ++merges;  // tangential touching: bands share the extremum point
        }
    }
    // rightmost edge: monotone above the last midband point
    {
        double level = f(x_hi) > 0 ? 2.0 : -2.0;
        bands.back().hi = bisect(f, roots.back(), x_hi, -level, level);
    }
    out.x_bands = BandSet(std::move(bands), 0.0);
    out.touching_merges = merges;

    std::vector<Interval> lam;
    for (const auto& b : out.x_bands.intervals()) {
        // an x-edge within refinement tolerance of 0 is the spectrum bottom:
        // the lambda pair then meets at 0
        double lo = b.lo < 1e-9 ? 0.0 : b.lo;
        double hi = std::max(b.hi, 0.0);
        lam.push_back({-std::sqrt(hi), -std::sqrt(lo)});
        lam.push_back({std::sqrt(lo), std::sqrt(hi)});
    }
    out.lambda_bands = BandSet(std::move(lam), 1e-9);
    return out;
}

BInftyResult b_infty_approx(const SpectrumParams& params) {
    params.validate();
    const CouplingMap& c = params.couplings;
    const double bound = 1e6;

    // bracket: expand until both ends certify escape quickly
    double e_max = 1.0 + std::max(c.p_a, c.p_b) + 0.5;
    for (int tries = 0; tries < 64; ++tries) {
        auto o = tracemap::iterate_orbit(gamma_line(e_max, c), 16, bound);
        if (o.status == tracemap::OrbitStatus::Escaped && o.certified) break;
        e_max *= 1.25;
    }

    const int n = params.grid_resolution;
    std::vector<double> xs(n), ys(n), zs(n);
    const double step = 2.0 * e_max / (n - 1);
    for (int i = 0; i < n; ++i) {
        TraceTriple t = gamma_line(-e_max + step * i, c);
        xs[i] = t.x;
        ys[i] = t.y;
        zs[i] = t.z;
    }
    std::vector<std::int32_t> esc(n);
    std::vector<std::uint8_t> bnd(n), cert(n);
    const auto& be = kernels::backend();
    const int hard_cap = 4 * params.orbit_cap + 64;
    parallel_for_chunks(n, params.parallelism, [&](std::size_t b, std::size_t e) {
        kernels::OrbitSweepOut o{esc.data() + b, bnd.data() + b, cert.data() + b};
        be.orbit_sweep(std::span<const double>(xs.data() + b, e - b),
                       std::span<const double>(ys.data() + b, e - b),
                       std::span<const double>(zs.data() + b, e - b), params.orbit_cap,
                       bound, hard_cap, o);
    });

    std::vector<Interval> iv;
    for (int i = 0; i < n;) {
        if (bnd[i]) {
            int j = i;
            while (j + 1 < n && bnd[j + 1]) ++j;
            iv.push_back({-e_max + step * i - step / 2, -e_max + step * j + step / 2});
            i = j + 1;
        } else {
            ++i;
        }
    }
    BInftyResult out;
    out.bands = BandSet(std::move(iv), 0.0);
    out.grid_step = step;
    out.e_max = e_max;
    return out;
}

BandSet fermion_sum(const BandSet& bands, int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    BandSet acc = bands;
    for (int i = 1; i < N; ++i) acc = minkowski_sum(acc, bands);
    return acc;
}

}  // namespace qising::quantum
