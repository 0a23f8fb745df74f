#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qising::tracemap {

/// Saturation cap: apply_f never returns coordinates beyond this magnitude
/// (and never a silent infinity).
inline constexpr double kCoordCap = 1e100;

struct TraceTriple {
    double x = 0, y = 0, z = 0;
    bool operator==(const TraceTriple&) const = default;
};

enum class OrbitStatus { Bounded, Escaped };

struct OrbitOutcome {
    OrbitStatus status = OrbitStatus::Bounded;
    int steps_used = 0;
    std::optional<int> escape_index;   // first step at which the certified test held
    std::optional<double> rate_estimate;
    bool certified = true;             // false: escape concluded from magnitude only
};

using Mat3 = std::array<std::array<double, 3>, 3>;

/// f(x,y,z) = (2xy - z, x, y), coordinates saturated at +-kCoordCap.
TraceTriple apply_f(const TraceTriple& t);

/// f^{-1}(x,y,z) = (y, z, 2yz - x), same saturation.
TraceTriple apply_f_inv(const TraceTriple& t);

/// Fricke-Vogt invariant x^2 + y^2 + z^2 - 2xyz - 1.
double fricke_vogt(const TraceTriple& t);

/// Escape cone |x| > 1, |y| > 1, |xy| > |z|; forward-invariant, certifies an
/// unbounded forward orbit.
bool certified_escape(const TraceTriple& t);

/// Iterate f up to n_max steps; Escaped at the first certified step, Bounded if
/// all steps stay within max-norm bound. A norm blow-up without certification
/// runs on to a hard cap and is reported as Escaped with certified = false.
OrbitOutcome iterate_orbit(const TraceTriple& t, int n_max, double bound);

/// Escape rate lim log||f^n(t)|| / phi^n, Cauchy-stabilized to tol.
/// Throws std::domain_error("not escaping") if the orbit never certifies.
double escape_rate(const TraceTriple& t, double tol);

/// Both escape-rate variants (max-norm and first coordinate), for cross-checks.
struct EscapeRatePair {
    double rate_norm;
    double rate_first;
    std::vector<double> norm_estimates;  // successive r_n values
};
EscapeRatePair escape_rate_detail(const TraceTriple& t, double tol, int n_cap = 256);

/// Singularities of the Cayley cubic: P1=(1,1,1), P2=(-1,-1,1), P3=(1,-1,-1), P4=(-1,1,-1).
std::array<TraceTriple, 4> singularities();

/// rho_1(x) = (x, x/(2x-1), x); throws std::domain_error at x = 1/2.
TraceTriple rho1_point(double x);

enum class SymmetryName { S, S2, S3, S4 };
/// s(x,y,z)=(z,y,x); s2=(-x,-y,z); s3=(x,-y,-z); s4=(-x,y,-z).
TraceTriple apply_symmetry(SymmetryName name, const TraceTriple& t);
SymmetryName symmetry_from_string(const std::string& name);

/// Jacobian of f at t: rows (2y, 2x, -1), (1,0,0), (0,1,0).
Mat3 differential(const TraceTriple& t);

Mat3 mat_mul(const Mat3& a, const Mat3& b);
double mat_det(const Mat3& m);

/// D(f^n) at t by the chain rule.
Mat3 differential_iterate(const TraceTriple& t, int n);

/// log |first coordinate of f^n(t)|, evaluated through the log-magnitude
/// representation once coordinates outgrow the floating range (valid on
/// orbits that blow up, where the 2xy term dominates).
double log_abs_first_after(const TraceTriple& t, int n);

}  // namespace qising::tracemap
