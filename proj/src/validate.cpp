#include "qising/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qising/classical.hpp"
#include "qising/fractal.hpp"
#include "qising/leeyang.hpp"
#include "qising/quantum.hpp"
#include "qising/rng.hpp"
#include "qising/sequences.hpp"
#include "qising/sets.hpp"
#include "qising/trace_map.hpp"

namespace qising::validate {

namespace seq = qising::sequences;
namespace tm = qising::tracemap;
namespace cl = qising::classical;
namespace qu = qising::quantum;
namespace ly = qising::leeyang;
namespace fr = qising::fractal;

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

seq::Word random_word(CounterRng& rng, int n) {
    std::vector<bool> bits(n);
    for (int i = 0; i < n; ++i) bits[i] = rng.next_u64() & 1;
    return seq::Word(std::move(bits));
}

// 1. Appendix C oracle equivalence
CheckResult check_oracle_equivalence(std::uint64_t seed) {
    CounterRng rng(seed, 1);
    double worst = 0;
    for (int inst = 0; inst < 30; ++inst) {
        int n = 1 + static_cast<int>(rng.below(12));
        seq::Word w = random_word(rng, n);
        double tau = rng.uniform(0.3, 5.0);
        double Ka = rng.uniform(0.0, 2.0), Kb = rng.uniform(0.0, 2.0);
        double ha = rng.uniform(0.0, 2.0), hb = rng.uniform(0.0, 2.0);
        cl::ThermoParams t{{Ka * tau, Kb * tau, ha * tau, hb * tau}, tau};
        double lp = cl::log_partition(w, t);
        double lb = cl::brute_force_log_partition(w, t);
        worst = std::max(worst, std::fabs(std::expm1(lp - lb)));
    }
    return {"appendix-c oracle equivalence (30 instances, rel err < 1e-10)", worst < 1e-10,
            "worst rel err " + fmt(worst)};
}

// 2. Trace identity
CheckResult check_trace_identity(std::uint64_t seed) {
    CounterRng rng(seed, 2);
    double worst = 0;
    for (int ps = 0; ps < 5; ++ps) {
        cl::ThermoParams t{{rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0),
                            rng.uniform(0.0, 1.5), rng.uniform(0.0, 1.5)},
                           rng.uniform(0.5, 3.0)};
        for (int k = 3; k <= 12; ++k) {
            auto [lhs, rhs] = cl::trace_identity_check(k, t);
            worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(lhs));
        }
    }
    return {"trace identity k=3..12, 5 parameter sets (rel err < 1e-8)", worst < 1e-8,
            "worst rel err " + fmt(worst)};
}

// 3. Fricke-Vogt conservation
CheckResult check_fv_conservation(std::uint64_t seed) {
    CounterRng rng(seed, 3);
    double worst1 = 0, worst20 = 0;
    for (int i = 0; i < 10000; ++i) {
        tm::TraceTriple t{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
        double i0 = tm::fricke_vogt(t);
        tm::TraceTriple u = tm::apply_f(t);
        worst1 = std::max(worst1,
                          std::fabs(tm::fricke_vogt(u) - i0) / std::fmax(1.0, std::fabs(i0)));
        tm::TraceTriple v = t;
        for (int s = 0; s < 20; ++s) {
            v = tm::apply_f(v);
            double norm = std::fmax(std::fabs(v.x), std::fmax(std::fabs(v.y), std::fabs(v.z)));
            if (norm > 1e3) break;
            worst20 = std::max(
                worst20, std::fabs(tm::fricke_vogt(v) - i0) / std::fmax(1.0, std::fabs(i0)));
        }
    }
    bool pass = worst1 < 1e-10 && worst20 < 1e-8;
    return {"Fricke-Vogt conservation (1e4 triples; step < 1e-10, 20-step < 1e-8)", pass,
            "single " + fmt(worst1) + ", 20-step " + fmt(worst20)};
}

double dist(const tm::TraceTriple& a, const tm::TraceTriple& b) {
    return std::fmax(std::fabs(a.x - b.x),
                     std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

// 4. Appendix A structure
CheckResult check_appendix_a(std::uint64_t seed) {
    auto P = tm::singularities();
    bool exact = tm::apply_f(P[0]) == P[0] && tm::apply_f(P[1]) == P[2] &&
                 tm::apply_f(P[2]) == P[3] && tm::apply_f(P[3]) == P[1];
    double worst = 0;
    for (double a : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        tm::TraceTriple t{0, 0, a};
        tm::TraceTriple u = t;
        for (int i = 0; i < 6; ++i) u = tm::apply_f(u);
        worst = std::max(worst, dist(u, t));
    }
    for (double x : {-3.0, -1.0, 0.0, 0.2, 0.7, 1.0, 2.0, 5.0}) {
        tm::TraceTriple lhs = tm::apply_f(tm::rho1_point(x));
        tm::TraceTriple rhs = tm::rho1_point(x / (2 * x - 1));
        worst = std::max(worst, dist(lhs, rhs));
    }
    CounterRng rng(seed, 4);
    for (int i = 0; i < 1000; ++i) {
        tm::TraceTriple t{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        using tm::SymmetryName;
        tm::TraceTriple a = tm::apply_symmetry(SymmetryName::S,
                                               tm::apply_f(tm::apply_symmetry(SymmetryName::S, t)));
        worst = std::max(worst, dist(a, tm::apply_f_inv(t)));
        for (auto s : {SymmetryName::S2, SymmetryName::S3, SymmetryName::S4}) {
            tm::TraceTriple u = tm::apply_symmetry(s, t);
            for (int j = 0; j < 3; ++j) u = tm::apply_f(u);
            tm::TraceTriple v = t;
            for (int j = 0; j < 3; ++j) v = tm::apply_f(v);
            v = tm::apply_symmetry(s, v);
            worst = std::max(worst, dist(u, v));
        }
    }
    bool pass = exact && worst < 1e-12;
    return {"appendix-A structure (cycles exact; f^6, rho1, symmetries < 1e-12)", pass,
            std::string("cycles ") + (exact ? "exact" : "BROKEN") + ", worst " + fmt(worst)};
}

// 5. Df^6 eigendata
CheckResult check_eigendata(std::uint64_t) {
    double worst_cp = 0, worst_kernel = 0;
    for (double a : {0.5, 1.0, 2.0}) {
        tm::Mat3 D = tm::differential_iterate({0, 0, a}, 6);
        double s = std::sqrt(4 * a * a * a * a + 1);
        double lam = -4 * a * a * s + 8 * a * a * a * a + 1;
        // characteristic polynomial p(l) = -l^3 + tr l^2 - m2 l + det
        double tr = D[0][0] + D[1][1] + D[2][2];
        double m2 = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                m2 += D[i][i] * D[j][j] - D[i][j] * D[j][i];
        double det = tm::mat_det(D);
        double p = -lam * lam * lam + tr * lam * lam - m2 * lam + det;
        double scale = std::fabs(lam * lam * lam) + std::fabs(tr * lam * lam) +
                       std::fabs(m2 * lam) + std::fabs(det);
        worst_cp = std::max(worst_cp, std::fabs(p) / scale);

        double v[3] = {1.0, -(s + 2 * a * a - 1) / (2 * a), 0.0};
        double vnorm = std::fmax(std::fabs(v[0]), std::fabs(v[1]));
        double dnorm = 0, rnorm = 0;
        for (int i = 0; i < 3; ++i) {
            double r = -lam * v[i];
            for (int j = 0; j < 3; ++j) {
                r += D[i][j] * v[j];
                dnorm = std::fmax(dnorm, std::fabs(D[i][j]));
            }
            rnorm = std::fmax(rnorm, std::fabs(r));
        }
        worst_kernel = std::max(worst_kernel, rnorm / ((dnorm + std::fabs(lam)) * vnorm));
    }
    bool pass = worst_cp < 1e-8 && worst_kernel < 1e-8;
    return {"Df^6 eigendata at (0,0,a), a in {0.5,1,2} (rel < 1e-8)", pass,
            "charpoly " + fmt(worst_cp) + ", kernel " + fmt(worst_kernel)};
}

// 6. Pure-case free energy
CheckResult check_pure_free_energy(std::uint64_t) {
    const double p = 1.0, q = 0.7;
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        double tau = 0.3 + (5.0 - 0.3) * i / 49.0;
        auto r = cl::free_energy_limit({p, p, q, q}, tau, 1e-10, 0.0);
        double ref = cl::pure_closed_form(p / tau, q / tau, tau);
        worst = std::max(worst, std::fabs(r.value - ref));
    }
    return {"pure-case free energy vs closed form, 50-point tau grid (< 1e-8)",
            worst < 1e-8, "worst abs err " + fmt(worst)};
}

// 7. omega-independence
CheckResult check_omega_independence(std::uint64_t) {
    const double offsets[5] = {0.0, 0.137, 0.318, 0.55, 0.83};
    const std::int64_t N = seq::fibonacci(18);
    double worst_spread = 0;
    bool all_negative = true;
    const cl::ThermoParams sets[3] = {{{1.0, 1.4, 0.0, 0.0}, 1.0},
                                      {{0.7, 1.2, 0.5, 0.9}, 0.7},
                                      {{2.0, 0.6, 0.3, 0.3}, 2.5}};
    for (const auto& t : sets) {
        double lo = 1e308, hi = -1e308;
        for (double off : offsets) {
            double F = cl::free_energy_finite(seq::rotation_word(N, off), t);
            lo = std::min(lo, F);
            hi = std::max(hi, F);
            all_negative = all_negative && F < 0;
        }
        worst_spread = std::max(worst_spread, hi - lo);
    }
    bool pass = worst_spread < 1e-4 && all_negative;
    return {"omega-independence at N=F_18, 5 offsets x 3 parameter sets (< 1e-4)", pass,
            "worst spread " + fmt(worst_spread) +
                (all_negative ? ", all negative" : ", NON-NEGATIVE VALUE")};
}

// 8. Lee-Yang oracle equivalence
CheckResult check_ly_oracle(std::uint64_t) {
    double worst_hd = 0, worst_circle = 0, worst_margin = 1e308;
    const ly::FugacityParams sets[2] = {ly::FugacityParams::from_couplings(1.0, 1.4, 1.2),
                                        ly::FugacityParams::from_couplings(1.0, 1.1, 0.7)};
    for (const auto& f : sets) {
        for (int k : {3, 4, 5, 6}) {
            auto zs = ly::zero_set(k, f, 20000);
            double circ = 0;
            auto orc = ly::zero_set_oracle(k, f, &circ);
            worst_circle = std::max(worst_circle, circ);
            worst_hd = std::max(worst_hd, qising::hausdorff_distance(zs, orc));
            for (double z : zs.points())
                worst_margin = std::min(worst_margin, 2.0 - std::fabs(z));
        }
    }
    bool pass = worst_hd < 1e-8 && worst_circle < 1e-8 && worst_margin > 1e-3;
    return {"Lee-Yang oracle equivalence F_k in {3,5,8,13} (hdist < 1e-8)", pass,
            "hdist " + fmt(worst_hd) + ", circle dev " + fmt(worst_circle) +
                ", edge margin " + fmt(worst_margin)};
}

// 9. zero-set convergence ladder
CheckResult check_ly_convergence(std::uint64_t) {
    bool mono = true;
    std::string detail;
    const ly::FugacityParams sets[2] = {ly::FugacityParams::from_couplings(1.0, 1.2, 1.0),
                                        ly::FugacityParams::from_couplings(1.0, 1.5, 0.8)};
    for (const auto& f : sets) {
        auto steps = ly::convergence_diagnostic(f, {6, 12, 18, 24}, 20000);
        for (std::size_t i = 0; i + 1 < steps.size(); ++i)
            mono = mono && steps[i].hdist >= steps[i + 1].hdist;
        detail += "[";
        for (const auto& s : steps) detail += fmt(s.hdist) + " ";
        detail += "] ";
    }
    return {"zero-set convergence hd(Z_k, Z_{k+6}) non-increasing, k=6,12,18", mono, detail};
}

// 10. band counts and symmetry
CheckResult check_band_counts(std::uint64_t) {
    bool ok = true;
    std::string detail;
    for (double ratio : {1.1, 1.3, 2.0}) {
        for (int k = 2; k <= 10; ++k) {
            qu::SpectrumParams p;
            p.couplings = {1.0, ratio, 0, 0};
            p.generation = k;
            p.grid_resolution = 20000;
            auto s = qu::sigma_k(p);
            bool count_ok =
                static_cast<std::int64_t>(s.x_bands.size()) == seq::fibonacci(k) &&
                s.touching_merges == 0;
            bool sym_ok = s.lambda_bands.symmetric_about_zero(1e-9);
            if (!count_ok || !sym_ok) {
                ok = false;
                detail += "k=" + std::to_string(k) + "@" + fmt(ratio) + " bad; ";
            }
        }
    }
    return {"sigma_k band counts = F_k (k<=10, 3 ratios), lambda symmetry 1e-9", ok,
            ok ? "all exact" : detail};
}

// 11. spectral Hausdorff convergence
CheckResult check_spectral_convergence(std::uint64_t) {
    qu::SpectrumParams base;
    base.couplings = {1.0, 1.1, 0, 0};
    base.grid_resolution = 20000;
    std::vector<qising::BandSet> sig;
    for (int k = 6; k <= 12; ++k) {
        qu::SpectrumParams p = base;
        p.generation = k;
        sig.push_back(qu::sigma_k(p).lambda_bands);
    }
    bool mono = true;
    std::vector<double> ds;
    for (std::size_t i = 0; i + 1 < sig.size(); ++i)
        ds.push_back(qising::hausdorff_distance(sig[i], sig[i + 1]));
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) mono = mono && ds[i] >= ds[i + 1];

    qu::SpectrumParams bp = base;
    bp.generation = 12;
    bp.grid_resolution = 5001;
    bp.orbit_cap = 14;  // matching truncation: B_cap tracks the level-12 band structure
    auto b = qu::b_infty_approx(bp);
    double hd = qising::hausdorff_distance(sig.back(), b.bands);
    bool close = hd < 2.0 * b.grid_step;
    std::string detail = "ladder ";
    for (double d : ds) detail += fmt(d) + " ";
    detail += "| hd(sigma_12,B)=" + fmt(hd) + " vs 2h=" + fmt(2 * b.grid_step);
    return {"spectral Hausdorff: ladder non-increasing k=6..11; hd(sigma_12,B) < 2h",
            mono && close, detail};
}

// 12. fractal fixtures
CheckResult check_fractal_fixtures(std::uint64_t) {
    auto cantor = fr::cantor_middle_thirds(10);
    auto dim = fr::box_counting(cantor, std::pow(3.0, -9), 1.0 / 3.0, 9);
    const double target = std::log(2.0) / std::log(3.0);
    bool dim_ok = std::fabs(dim.slope - target) <= 0.02 && dim.r_squared > 0.995;
    auto th = fr::thickness(cantor);
    bool th_ok = std::fabs(th.tau - 1.0) <= 1e-6;
    bool lb_ok = fr::dimension_lower_bound(th) <= dim.slope + 0.05;

    // lower bound vs measured slope on computed approximants
    qu::SpectrumParams p;
    p.couplings = {1.0, 1.1, 0, 0};
    p.generation = 12;
    p.grid_resolution = 20000;
    auto sig = qu::sigma_k(p).lambda_bands;
    auto th_sig = fr::thickness(sig);
    double min_band = 1e308;
    for (const auto& iv : sig.intervals()) min_band = std::min(min_band, iv.length());
    auto dim_sig = fr::box_counting(sig, std::max(min_band, 1e-6), 0.25, 10);
    bool lb_sig_ok = fr::dimension_lower_bound(th_sig) <= dim_sig.slope + 0.05;

    bool pass = dim_ok && th_ok && lb_ok && lb_sig_ok;
    return {"fractal fixtures: middle-thirds dim 0.6309+-0.02, tau=1+-1e-6, bounds", pass,
            "slope " + fmt(dim.slope) + " r2 " + fmt(dim.r_squared) + " tau-1 " +
                fmt(th.tau - 1.0) + " lb(sigma12) " + fmt(fr::dimension_lower_bound(th_sig)) +
                " <= " + fmt(dim_sig.slope + 0.05)};
}

// 13. thickness / Astels / sum consistency
CheckResult check_thickness_astels(std::uint64_t) {
    qu::SpectrumParams p;
    p.couplings = {1.0, 1.1, 0, 0};
    p.generation = 12;
    p.grid_resolution = 20000;
    auto sig = qu::sigma_k(p).lambda_bands;
    auto th = fr::thickness(sig);
    bool nu_ok = 2.0 * th.nu >= 1.0;
    auto sum2 = qu::fermion_sum(sig, 2);
    double b = sig.hull().hi;
    bool single = sum2.size() == 1;
    double edge_err = single ? std::fmax(std::fabs(sum2.hull().lo + 2 * b),
                                         std::fabs(sum2.hull().hi - 2 * b))
                             : 1e308;
    bool pass = nu_ok && single && edge_err < 1e-9;
    return {"sigma_12 at ratio 1.1: 2 nu >= 1 and 2-fold sum = [-2b, 2b]", pass,
            "nu " + fmt(th.nu) + ", components " + std::to_string(sum2.size()) +
                ", edge err " + fmt(edge_err)};
}

// 14. dimension trend
CheckResult check_dimension_trend(std::uint64_t) {
    std::vector<double> dims;
    std::string detail;
    for (double ratio : {1.05, 1.5, 3.0}) {
        qu::SpectrumParams p;
        p.couplings = {1.0, ratio, 0, 0};
        p.grid_resolution = 200001;
        p.orbit_cap = 20;
        auto b = qu::b_infty_approx(p);
        auto d = fr::box_counting(b.bands, std::max(4 * b.grid_step, 1e-3), 0.2, 12);
        dims.push_back(d.slope);
        detail += fmt(d.slope) + " ";
    }
    bool pass = dims[0] > dims[1] && dims[1] > dims[2];
    for (double d : dims) pass = pass && d > 0 && d < 1;
    return {"box dims of B approximants decreasing over ratios {1.05,1.5,3}, in (0,1)",
            pass, detail};
}

// 15. escape-rate Cauchy property
CheckResult check_escape_rate(std::uint64_t seed) {
    CounterRng rng(seed, 15);
    double worst_agree = 0;
    bool geo = true;
    int found = 0;
    while (found < 20) {
        tm::TraceTriple t{rng.uniform(1.2, 8), rng.uniform(1.2, 8), rng.uniform(-8, 8)};
        if (!tm::certified_escape(t)) continue;
        ++found;
        auto r = tm::escape_rate_detail(t, 1e-12, 64);
        worst_agree = std::max(worst_agree, std::fabs(r.rate_norm - r.rate_first));
        const auto& est = r.norm_estimates;
        for (std::size_t i = 10; i + 2 < est.size() && i < 30; ++i) {
            double g1 = std::fabs(est[i + 1] - est[i]);
            double g2 = std::fabs(est[i + 2] - est[i + 1]);
            if (g1 > 1e-14 && g2 > 0.8 * g1) geo = false;
        }
    }
    bool pass = geo && worst_agree < 1e-6;
    return {"escape-rate Cauchy gaps geometric; norm vs first-coordinate < 1e-6", pass,
            std::string(geo ? "geometric" : "NOT geometric") + ", |r-r1| " +
                fmt(worst_agree)};
}

}  // namespace

std::vector<CheckResult> run_classical(std::uint64_t seed, int) {
    return {check_oracle_equivalence(seed), check_trace_identity(seed)};
}

std::vector<CheckResult> run_all(std::uint64_t seed, int parallelism) {
    (void)parallelism;
    return {check_oracle_equivalence(seed),
            check_trace_identity(seed),
            check_fv_conservation(seed),
            check_appendix_a(seed),
            check_eigendata(seed),
            check_pure_free_energy(seed),
            check_omega_independence(seed),
            check_ly_oracle(seed),
            check_ly_convergence(seed),
            check_band_counts(seed),
            check_spectral_convergence(seed),
            check_fractal_fixtures(seed),
            check_thickness_astels(seed),
            check_dimension_trend(seed),
            check_escape_rate(seed)};
}

bool report(const std::vector<CheckResult>& results) {
    bool all = true;
    int idx = 1;
    for (const auto& r : results) {
        std::printf("%s %2d. %s — %s\n", r.pass ? "PASS" : "FAIL", idx++, r.name.c_str(),
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s: %zu checks\n", all ? "ALL PASS" : "FAILURES PRESENT", results.size());
    return all;
}

}  // namespace qising::validate
