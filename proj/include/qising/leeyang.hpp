#pragma once

#include <complex>
#include <vector>

#include "qising/sets.hpp"
#include "qising/trace_map.hpp"

namespace qising::leeyang {

using tracemap::TraceTriple;

struct FugacityParams {
    double alpha = 2.0;  // exp(p(a)/tau), > 1
    double beta = 3.0;   // exp(p(b)/tau), > 1

    static FugacityParams from_couplings(double p_a, double p_b, double tau);
    void validate() const;
};

/// gamma(eta~) from the complex-fugacity analysis:
///   (alpha beta eta~ / 2 sqrt(beta^4-1), alpha beta eta~ / 2 sqrt(alpha^4-1),
///    (alpha^2 beta^2 - 1)/sqrt((alpha^4-1)(beta^4-1))).
/// Third coordinate is eta~-independent; gamma(0) is periodic of period six.
TraceTriple fugacity_curve(double eta_t, const FugacityParams& f);

/// Half-trace seed line actually used for root finding: the f-orbit of
///   (alpha^2 eta~ / 2 sqrt(alpha^4-1), beta^2 eta~ / 2 sqrt(beta^4-1),
///    (alpha^2 beta^2 - 1)/sqrt((alpha^4-1)(beta^4-1)))
/// reproduces the normalized partition traces: pi . f^{k-1}(seed) is, up to a
/// positive factor, Z^{(F_k)} as a polynomial in eta~.
TraceTriple trace_seed_curve(double eta_t, const FugacityParams& f);

/// g_k(eta~) = first coordinate of f^{k-1}(trace_seed_curve(eta~)), saturated.
double g_k(double eta_t, int k, const FugacityParams& f);

struct ZeroSetOptions {
    int grid = 20000;      // >= 1e4 per contract (auto-raised with F_k)
    int parallelism = 1;
};

/// Zero set Z_k on [-2,2]: sign-change scan + bisection to 1e-12 + Newton
/// polish with the propagated tangent. Near-tangential dips below 1e-8 without
/// a sign change are flagged, not classified.
PointSet zero_set(int k, const FugacityParams& f, int grid);
PointSet zero_set(int k, const FugacityParams& f, const ZeroSetOptions& opt);

/// Brute-force oracle: configuration sum over the F_k ring -> fugacity
/// polynomial -> all roots by the in-house Aberth iteration. Requires
/// F_k <= 16; verifies every root lies on the unit circle (Lee-Yang check).
/// max_circle_deviation, when given, receives max ||eta| - 1| over the roots.
PointSet zero_set_oracle(int k, const FugacityParams& f,
                         double* max_circle_deviation = nullptr);

/// theta = arccos(eta~/2); each zero stands for the pair e^{+-i theta}.
std::vector<double> to_circle(const PointSet& ps);

struct ConvergenceStep {
    int k_from, k_to;
    double hdist;
};
std::vector<ConvergenceStep> convergence_diagnostic(const FugacityParams& f,
                                                    const std::vector<int>& k_list,
                                                    int base_grid = 20000);

/// In-house Aberth-Ehrlich simultaneous root finder, real coefficients
/// c[0] + c[1] z + ... (exposed for tests).
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs,
                                               int max_iter = 200,
                                               double tol = 1e-13);

}  // namespace qising::leeyang
