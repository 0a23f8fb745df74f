#include "qising/leeyang.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qising/kernels.hpp"
#include "qising/parallel.hpp"
#include "qising/sequences.hpp"

namespace qising::leeyang {

using sequences::Symbol;
using sequences::Word;

FugacityParams FugacityParams::from_couplings(double p_a, double p_b, double tau) {
    if (!(p_a > 0) || !(p_b > 0)) throw std::invalid_argument("couplings must be positive");
    if (!(tau > 0)) throw std::invalid_argument("temperature must be positive");
    return {std::exp(p_a / tau), std::exp(p_b / tau)};
}

void FugacityParams::validate() const {
    if (!(alpha > 1) || !(beta > 1))
        throw std::domain_error("fugacity parameters require alpha, beta > 1");
}

TraceTriple fugacity_curve(double eta_t, const FugacityParams& f) {
    f.validate();
    const double a = f.alpha, b = f.beta;
    const double ra = std::sqrt(a * a * a * a - 1.0), rb = std::sqrt(b * b * b * b - 1.0);
    return {a * b * eta_t / (2.0 * rb), a * b * eta_t / (2.0 * ra),
            (a * a * b * b - 1.0) / (ra * rb)};
}

TraceTriple trace_seed_curve(double eta_t, const FugacityParams& f) {
    f.validate();
    const double a = f.alpha, b = f.beta;
    const double ra = std::sqrt(a * a * a * a - 1.0), rb = std::sqrt(b * b * b * b - 1.0);
    return {a * a * eta_t / (2.0 * ra), b * b * eta_t / (2.0 * rb),
            (a * a * b * b - 1.0) / (ra * rb)};
}

double g_k(double eta_t, int k, const FugacityParams& f) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    TraceTriple t = trace_seed_curve(eta_t, f);
    double out;
    kernels::scalar_backend().first_coord_sweep(std::span<const double>(&t.x, 1),
                                                std::span<const double>(&t.y, 1),
                                                std::span<const double>(&t.z, 1), k - 1,
                                                &out);
    return out;
}

namespace {

// batched g_k over arbitrary eta~ values
void g_batch(const std::vector<double>& et, int k, const FugacityParams& f,
             std::vector<double>& out, int parallelism) {
    const std::size_t n = et.size();
    std::vector<double> xs(n), ys(n), zs(n);
    const double a = f.alpha, b = f.beta;
    const double ra = std::sqrt(a * a * a * a - 1.0), rb = std::sqrt(b * b * b * b - 1.0);
    const double ca = a * a / (2.0 * ra), cb = b * b / (2.0 * rb);
    const double z0 = (a * a * b * b - 1.0) / (ra * rb);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = ca * et[i];
        ys[i] = cb * et[i];
        zs[i] = z0;
    }
    out.resize(n);
    const auto& be = kernels::backend();
    parallel_for_chunks(n, parallelism, [&](std::size_t lo, std::size_t hi) {
        be.first_coord_sweep(std::span<const double>(xs.data() + lo, hi - lo),
                             std::span<const double>(ys.data() + lo, hi - lo),
                             std::span<const double>(zs.data() + lo, hi - lo), k - 1,
                             out.data() + lo);
    });
}

// value and eta~-derivative of g_k at one point (tangent through the Jacobian)
std::pair<double, double> g_and_dg(double et, int k, const FugacityParams& f) {
    const double a = f.alpha, b = f.beta;
    const double ra = std::sqrt(a * a * a * a - 1.0), rb = std::sqrt(b * b * b * b - 1.0);
    double x = a * a * et / (2.0 * ra), y = b * b * et / (2.0 * rb);
    double z = (a * a * b * b - 1.0) / (ra * rb);
    double vx = a * a / (2.0 * ra), vy = b * b / (2.0 * rb), vz = 0.0;
    for (int i = 0; i < k - 1; ++i) {
        double nx = 2.0 * x * y - z;
        double nvx = 2.0 * (y * vx + x * vy) - vz;
        vz = vy;
        vy = vx;
        vx = nvx;
        z = y;
        y = x;
        x = nx;
    }
    return {x, vx};
}

}  // namespace

PointSet zero_set(int k, const FugacityParams& f, int grid) {
    return zero_set(k, f, ZeroSetOptions{grid, 1});
}

PointSet zero_set(int k, const FugacityParams& f, const ZeroSetOptions& opt) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    f.validate();
    const std::int64_t Fk = sequences::fibonacci(k);
    const std::int64_t n64 = std::max<std::int64_t>({opt.grid, 10000, 48 * Fk});
    const std::size_t n = static_cast<std::size_t>(n64) | 1;  // odd: include 0 exactly

    std::vector<double> et(n);
    for (std::size_t i = 0; i < n; ++i)
        et[i] = -2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    std::vector<double> v;
    g_batch(et, k, f, v, opt.parallelism);

    std::vector<std::pair<double, double>> brackets;  // sign-change cells
    std::vector<double> exact, flagged;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (v[i] == 0.0) exact.push_back(et[i]);
        else if (v[i + 1] != 0.0 && std::signbit(v[i]) != std::signbit(v[i + 1]))
            brackets.emplace_back(et[i], et[i + 1]);
    }
    if (v[n - 1] == 0.0) exact.push_back(et[n - 1]);

    // near-tangency hunt: subdivide cells around strict local minima of |v|
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double ai = std::fabs(v[i]);
        if (ai == 0.0 || ai >= std::fabs(v[i - 1]) || ai > std::fabs(v[i + 1])) continue;
        if (std::signbit(v[i - 1]) != std::signbit(v[i]) ||
            std::signbit(v[i]) != std::signbit(v[i + 1]))
            continue;  // already bracketed
        // plausible dip only if the parabola through the three points can cross zero
        double span = et[i + 1] - et[i - 1];
        double slope = (std::fabs(v[i + 1]) - std::fabs(v[i - 1])) / span;
        double depth_scale = std::fabs(v[i]) - 0.25 * std::fabs(slope) * span;
        if (depth_scale > 0 && std::fabs(v[i]) > 1e-3 * std::max(std::fabs(v[i - 1]), std::fabs(v[i + 1])))
            continue;
        double lo = et[i - 1], hi = et[i + 1];
        bool found = false;
        double best_et = et[i], best_av = ai;
        for (int depth = 0; depth < 3 && !found; ++depth) {
            const int sub = 64;
            std::vector<double> se(sub + 1), sv;
            for (int j = 0; j <= sub; ++j) se[j] = lo + (hi - lo) * j / sub;
            g_batch(se, k, f, sv, 1);
            std::size_t arg = 0;
            for (int j = 0; j <= sub; ++j) {
                if (std::fabs(sv[j]) < best_av) {
                    best_av = std::fabs(sv[j]);
                    best_et = se[j];
                }
                if (std::fabs(sv[j]) < std::fabs(sv[arg])) arg = j;
                if (j > 0 && sv[j - 1] != 0 && sv[j] != 0 &&
                    std::signbit(sv[j - 1]) != std::signbit(sv[j])) {
                    brackets.emplace_back(se[j - 1], se[j]);
                    found = true;
                }
                if (sv[j] == 0.0) {
                    exact.push_back(se[j]);
                    found = true;
                }
            }
            double w = (hi - lo) / sub;
            lo = std::max(lo, se[arg] - w);
            hi = std::min(hi, se[arg] + w);
        }
        if (!found && best_av < 1e-8) flagged.push_back(best_et);
    }

    // batched bisection to 1e-12
    std::vector<double> roots = exact;
    if (!brackets.empty()) {
        std::size_t m = brackets.size();
        std::vector<double> lo(m), hi(m), vlo(m), mid(m), vm;
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = brackets[i].first;
            hi[i] = brackets[i].second;
        }
        g_batch(lo, k, f, vlo, opt.parallelism);
        for (int it = 0; it < 52; ++it) {
            for (std::size_t i = 0; i < m; ++i) mid[i] = 0.5 * (lo[i] + hi[i]);
            g_batch(mid, k, f, vm, opt.parallelism);
            for (std::size_t i = 0; i < m; ++i) {
                if (vm[i] != 0 && std::signbit(vm[i]) == std::signbit(vlo[i])) {
                    lo[i] = mid[i];
                    vlo[i] = vm[i];
                } else {
                    hi[i] = mid[i];
                }
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            double r = 0.5 * (lo[i] + hi[i]);
            // Newton polish with the propagated tangent
            for (int it = 0; it < 3; ++it) {
                auto [g, dg] = g_and_dg(r, k, f);
                if (g == 0 || std::fabs(dg) < 1e-300) break;
                double step = g / dg;
                double r2 = r - step;
                if (r2 < brackets[i].first || r2 > brackets[i].second) break;
                r = r2;
                if (std::fabs(step) < 1e-14) break;
            }
            roots.push_back(r);
        }
    }
    PointSet ps(std::move(roots), 1e-10);
    ps.flagged = std::move(flagged);
    return ps;
}

PointSet zero_set_oracle(int k, const FugacityParams& f, double* max_circle_deviation) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    f.validate();
    const std::int64_t Fk = sequences::fibonacci(k);
    if (Fk > 16) throw std::invalid_argument("oracle limited to F_k <= 16");
    const Word w = sequences::substitution_word(k);
    const int N = static_cast<int>(Fk);

    std::vector<double> K(N);
    for (int i = 0; i < N; ++i)
        K[i] = std::log(w.at(i) == Symbol::A ? f.alpha : f.beta);

    // coefficients of eta^{m+N}, m = sum of spins
    std::vector<double> coeff(2 * N + 1, 0.0);
    double kmax = 0;
    for (double ki : K) kmax += ki;
    for (std::uint64_t cfg = 0; cfg < (1ULL << N); ++cfg) {
        double e = 0;
        int m = 0;
        for (int i = 0; i < N; ++i) {
            double si = (cfg >> i) & 1 ? -1.0 : 1.0;
            double sj = (cfg >> ((i + 1) % N)) & 1 ? -1.0 : 1.0;
            e += K[i] * si * sj;
            m += (cfg >> i) & 1 ? -1 : 1;
        }
        coeff[m + N] += std::exp(e - kmax);  // normalized; roots unchanged
    }

    auto roots = aberth_roots(coeff);
    std::vector<double> etat;
    double worst = 0;
    for (const auto& r : roots) {
        double off = std::fabs(std::abs(r) - 1.0);
        worst = std::max(worst, off);
        if (off > 1e-6)
            throw std::runtime_error("Lee-Yang violation: root off the unit circle by " +
                                     std::to_string(off));
        if (r.imag() > 0) etat.push_back(2.0 * r.real());
    }
    if (max_circle_deviation) *max_circle_deviation = worst;
    return PointSet(std::move(etat), 1e-10);
}

std::vector<double> to_circle(const PointSet& ps) {
    std::vector<double> out;
    out.reserve(ps.size());
    for (double p : ps.points()) {
        if (p < -2.0 || p > 2.0) throw std::domain_error("eta~ outside [-2,2]");
        out.push_back(std::acos(p / 2.0));
    }
    return out;
}

std::vector<ConvergenceStep> convergence_diagnostic(const FugacityParams& f,
                                                    const std::vector<int>& k_list,
                                                    int base_grid) {
    if (k_list.size() < 2) throw std::invalid_argument("need at least two generations");
    for (std::size_t i = 1; i < k_list.size(); ++i)
        if (k_list[i] <= k_list[i - 1])
            throw std::invalid_argument("k_list must be ascending");
    std::vector<PointSet> sets;
    sets.reserve(k_list.size());
    for (int k : k_list) sets.push_back(zero_set(k, f, base_grid));
    std::vector<ConvergenceStep> out;
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
        out.push_back({k_list[i], k_list[i + 1], hausdorff_distance(sets[i], sets[i + 1])});
    return out;
}

std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs,
                                               int max_iter, double tol) {
    using C = std::complex<double>;
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d > 0 && coeffs[d] == 0.0) --d;
    if (d < 1) throw std::invalid_argument("polynomial degree must be >= 1");

    auto eval = [&](C z, C& p, C& dp) {
        p = coeffs[d];
        dp = 0;
        for (int i = d - 1; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + coeffs[i];
        }
    };

    // initial guesses on a circle scaled by the root-magnitude estimate
    double r0 = std::pow(std::fabs(coeffs[0] / coeffs[d]), 1.0 / d);
    if (!(r0 > 0) || !std::isfinite(r0)) r0 = 1.0;
    std::vector<C> z(d);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < d; ++i) {
        double th = 2.0 * pi * (i + 0.5) / d + 0.4;
        z[i] = r0 * C(std::cos(th), std::sin(th));
    }

    for (int it = 0; it < max_iter; ++it) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            C p, dp;
            eval(z[i], p, dp);
            if (p == C(0)) continue;
            C newt = (dp == C(0)) ? C(0) : p / dp;
            C sum = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            C denom = 1.0 - newt * sum;
            C w = (denom == C(0)) ? newt : newt / denom;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst < tol) break;
    }
    return z;
}

}  // namespace qising::leeyang
