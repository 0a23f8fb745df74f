#pragma once

#include <array>
#include <cstdint>

#include "qising/sequences.hpp"

namespace qising::classical {

using sequences::CouplingMap;
using sequences::Symbol;
using sequences::Word;

struct ThermoParams {
    CouplingMap couplings;
    double tau = 1.0;  // k_B = 1; formulas use K = J/tau, h = H/tau

    void validate() const;
    double K(Symbol s) const { return couplings.p(s) / tau; }
    double h(Symbol s) const { return couplings.q(s) / tau; }
};

using Mat2 = std::array<std::array<double, 2>, 2>;

/// 2x2 positive matrix with a separated power-of-2 scale: value = m * 2^exp2.
/// Renormalized so max |entry| stays in [1, 2) after every multiplication.
struct ScaledMatrix {
    Mat2 m{{{1, 0}, {0, 1}}};
    std::int64_t exp2 = 0;

    static ScaledMatrix identity() { return {}; }
    void left_multiply(const Mat2& t);  // m <- t * m, then renormalize
    double log_trace() const;           // log(tr), valid for positive matrices
    double log_norm_inf() const;        // log max|entry|
    double log_norm_one() const;        // log sum|entry|
};

struct FreeEnergyResult {
    double value = 0;       // free energy per site (< 0)
    std::int64_t n_used = 0;
    double cauchy_gap = 0;  // last increment
};

/// [[e^{K+h}, e^{-K-h}], [e^{-K+h}, e^{K-h}]]; det = 2 sinh 2K.
Mat2 transfer_matrix(double K, double h);

/// log Z^{(N)} = log Tr prod_{i=N}^{1} T_i with per-step renormalization.
double log_partition(const Word& w, const ThermoParams& t);

/// Exhaustive 2^N spin sum, periodic boundary. |w| <= 20.
double brute_force_partition(const Word& w, const ThermoParams& t);
double brute_force_log_partition(const Word& w, const ThermoParams& t);

/// F^{(N)} = -log Z / (N tau).
double free_energy_finite(const Word& w, const ThermoParams& t);

/// Thermodynamic limit along N = F_8, F_9, ... until the Cauchy gap < tol.
/// Throws qising::classical::ConvergenceError past N = F_30.
FreeEnergyResult free_energy_limit(const CouplingMap& c, double tau, double tol,
                                   double offset);

struct ConvergenceError : std::runtime_error {
    double last_gap;
    ConvergenceError(const std::string& msg, double gap)
        : std::runtime_error(msg), last_gap(gap) {}
};

/// Constant-coefficient oracle: -(1/tau) log lambda_max(transfer_matrix(K,h)).
double pure_closed_form(double K, double h, double tau);

struct TraceIdentity {
    double lhs;  // log Tr T^{(F_k)} via scaled products
    double rhs;  // sum log d_i + log 2 + log|pi f^{k-3}(x3, x2, x1)|
};

/// Both sides of the trace-map identity for the length-F_k prefix, k >= 3.
/// Throws std::domain_error when some K_i = 0 (degenerate determinant).
TraceIdentity trace_identity_check(int k, const ThermoParams& t);

}  // namespace qising::classical
