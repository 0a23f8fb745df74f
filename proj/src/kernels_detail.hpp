#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

// Per-point reference routines shared by the scalar backend and the vector
// backends' remainder loops. Arithmetic here defines the semantics both paths
// must reproduce bit-for-bit: plain mul/add (no FMA), saturation at +-1e100,
// power-of-2 rescaling every kRescaleEvery factors.

namespace qising::kernels::detail {

inline constexpr double kCap = 1e100;
inline constexpr double kDiscCap = 1e300;
inline constexpr int kRescaleEvery = 32;

inline double clampc(double v) {
    if (v > kCap) return kCap;
    if (v < -kCap) return -kCap;
    return v;
}

struct OrbitResult {
    std::int32_t escape_index;
    std::uint8_t bounded;
    std::uint8_t certified;
};

inline OrbitResult orbit_point(double x, double y, double z, int n_max, double bound,
                               int hard_cap) {
    bool over_bound = false;
    for (int n = 0; n <= hard_cap; ++n) {
        bool cert = std::fabs(x) > 1.0 && std::fabs(y) > 1.0 &&
                    std::fabs(x * y) > std::fabs(z);
        if (cert) return {static_cast<std::int32_t>(n), 0, 1};
        double norm = std::fabs(x);
        norm = std::fmax(norm, std::fabs(y));
        norm = std::fmax(norm, std::fabs(z));
        if (norm > bound) over_bound = true;
        if (!over_bound && n == n_max) return {-1, 1, 1};
        double xn = clampc(2.0 * x * y - z);
        z = y;
        y = x;
        x = xn;
    }
    return {-1, static_cast<std::uint8_t>(over_bound ? 0 : 1), 0};
}

inline double first_coord_point(double x, double y, double z, int iters) {
    for (int i = 0; i < iters; ++i) {
        double xn = clampc(2.0 * x * y - z);
        z = y;
        y = x;
        x = xn;
    }
    return x;
}

// Exponent E of a normal v = 2^E m, m in [1,2), from the raw bits; the vector
// path does the identical integer manipulation.
inline std::int64_t biased_exponent(double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    return static_cast<std::int64_t>((bits >> 52) & 0x7FFULL) - 1023;
}

/// 2^{-E} as an exact double (E in the normal range).
inline double pow2_of(std::int64_t e) {
    return std::bit_cast<double>(static_cast<std::uint64_t>(e + 1023) << 52);
}

inline double jacobi_disc_point(double x, const std::uint8_t* letters, std::size_t n,
                                double Ja, double Jb) {
    const double c0a = (x - 1.0 - Ja * Ja) / Ja, c1a = -1.0 / Ja;
    const double c0b = (x - 1.0 - Jb * Jb) / Jb, c1b = -1.0 / Jb;
    double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    std::int64_t exp_acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool b = letters[i] != 0;
        const double c0 = b ? c0b : c0a;
        const double c1 = b ? c1b : c1a;
        const double J = b ? Jb : Ja;
        double n00 = c0 * m00 + c1 * m10;
        double n01 = c0 * m01 + c1 * m11;
        double n10 = J * m00;
        double n11 = J * m01;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
        if ((i + 1) % kRescaleEvery == 0) {
            double a = std::fmax(std::fmax(std::fabs(m00), std::fabs(m01)),
                                 std::fmax(std::fabs(m10), std::fabs(m11)));
            std::int64_t e = biased_exponent(a);
            double s = pow2_of(-e);  // exact scaling
            m00 *= s;
            m01 *= s;
            m10 *= s;
            m11 *= s;
            exp_acc += e;
        }
    }
    double tr = m00 + m11;
    if (exp_acc == 0) return tr;
    double v = std::ldexp(tr, static_cast<int>(exp_acc));
    if (v > kDiscCap) return kDiscCap;
    if (v < -kDiscCap) return -kDiscCap;
    return v;
}

}  // namespace qising::kernels::detail
