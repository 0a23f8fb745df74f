#include "qising/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "qising/trace_map.hpp"

namespace qising::classical {

namespace {
constexpr double kLn2 = 0.6931471805599453094172321214581766;
}

void ThermoParams::validate() const {
    couplings.validate();
    if (!(tau > 0)) throw std::invalid_argument("temperature must be positive");
}

Mat2 transfer_matrix(double K, double h) {
    return {{{std::exp(K + h), std::exp(-K - h)}, {std::exp(-K + h), std::exp(K - h)}}};
}

void ScaledMatrix::left_multiply(const Mat2& t) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = t[i][0] * m[0][j] + t[i][1] * m[1][j];
    double a = std::fmax(std::fmax(std::fabs(r[0][0]), std::fabs(r[0][1])),
                         std::fmax(std::fabs(r[1][0]), std::fabs(r[1][1])));
    int e = 0;
    std::frexp(a, &e);  // a = f * 2^e, f in [1/2, 1) -> scale by 2^{1-e}
    int shift = 1 - e;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = std::ldexp(r[i][j], shift);
    exp2 -= shift;
}

double ScaledMatrix::log_trace() const {
    return std::log(m[0][0] + m[1][1]) + static_cast<double>(exp2) * kLn2;
}

double ScaledMatrix::log_norm_inf() const {
    double a = std::fmax(std::fmax(std::fabs(m[0][0]), std::fabs(m[0][1])),
                         std::fmax(std::fabs(m[1][0]), std::fabs(m[1][1])));
    return std::log(a) + static_cast<double>(exp2) * kLn2;
}

double ScaledMatrix::log_norm_one() const {
    double a = std::fabs(m[0][0]) + std::fabs(m[0][1]) + std::fabs(m[1][0]) +
               std::fabs(m[1][1]);
    return std::log(a) + static_cast<double>(exp2) * kLn2;
}

namespace {

ScaledMatrix word_product(const Word& w, const ThermoParams& t) {
    const Mat2 Ta = transfer_matrix(t.K(Symbol::A), t.h(Symbol::A));
    const Mat2 Tb = transfer_matrix(t.K(Symbol::B), t.h(Symbol::B));
    ScaledMatrix acc = ScaledMatrix::identity();
    // prod_{i=N}^{1} T_i: left-multiply in site order
    for (std::size_t i = 0; i < w.size(); ++i)
        acc.left_multiply(w.at(i) == Symbol::A ? Ta : Tb);
    return acc;
}

}  // namespace

double log_partition(const Word& w, const ThermoParams& t) {
    if (w.empty()) throw std::invalid_argument("word must be non-empty");
    t.validate();
    return word_product(w, t).log_trace();
}

double brute_force_log_partition(const Word& w, const ThermoParams& t) {
    const std::size_t N = w.size();
    if (N == 0) throw std::invalid_argument("word must be non-empty");
    if (N > 20) throw std::invalid_argument("brute force limited to |w| <= 20");
    t.validate();
    std::vector<double> K(N), h(N);
    for (std::size_t i = 0; i < N; ++i) {
        K[i] = t.K(w.at(i));
        h[i] = t.h(w.at(i));
    }
    const std::uint64_t count = 1ULL << N;
    double max_e = -1e308;
    std::vector<double> energies(count);
    for (std::uint64_t c = 0; c < count; ++c) {
        double e = 0;
        for (std::size_t i = 0; i < N; ++i) {
            double si = (c >> i) & 1 ? -1.0 : 1.0;
            double sj = (c >> ((i + 1) % N)) & 1 ? -1.0 : 1.0;
            e += K[i] * si * sj + h[i] * si;
        }
        energies[c] = e;
        max_e = std::fmax(max_e, e);
    }
    double s = 0;
    for (double e : energies) s += std::exp(e - max_e);
    return max_e + std::log(s);
}

double brute_force_partition(const Word& w, const ThermoParams& t) {
    return std::exp(brute_force_log_partition(w, t));
}

double free_energy_finite(const Word& w, const ThermoParams& t) {
    return -log_partition(w, t) / (static_cast<double>(w.size()) * t.tau);
}

FreeEnergyResult free_energy_limit(const CouplingMap& c, double tau, double tol,
                                   double offset) {
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    ThermoParams t{c, tau};
    t.validate();
    double prev = 0;
    bool have_prev = false;
    double gap = 0;
    for (int k = 8; k <= 30; ++k) {
        std::int64_t N = sequences::fibonacci(k);
        double F = free_energy_finite(sequences::rotation_word(N, offset), t);
        if (have_prev) {
            gap = std::fabs(F - prev);
            if (gap < tol) return {F, N, gap};
        }
        prev = F;
        have_prev = true;
    }
    throw ConvergenceError("free energy did not stabilize by N = F_30", gap);
}

double pure_closed_form(double K, double h, double tau) {
    if (K < 0) throw std::invalid_argument("K must be >= 0");
    // eigenvalues e^K cosh h +- sqrt(e^{2K} sinh^2 h + e^{-2K})
    double lam = std::exp(K) * std::cosh(h) +
                 std::sqrt(std::exp(2 * K) * std::sinh(h) * std::sinh(h) + std::exp(-2 * K));
    return -std::log(lam) / tau;
}

TraceIdentity trace_identity_check(int k, const ThermoParams& t) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    t.validate();
    const double Ka = t.K(Symbol::A), Kb = t.K(Symbol::B);
    if (Ka == 0 || Kb == 0)
        throw std::domain_error("degenerate determinant: K_i = 0");
    const Word w = sequences::substitution_word(k);

    TraceIdentity out;
    out.lhs = log_partition(w, t);

    // sum log d_i over the word: d = sqrt(2 sinh 2K), two-valued
    auto [na, nb] = sequences::letter_counts(w);
    double log_da = 0.5 * std::log(2.0 * std::sinh(2.0 * Ka));
    double log_db = 0.5 * std::log(2.0 * std::sinh(2.0 * Kb));
    double sum_log_d = static_cast<double>(na) * log_da + static_cast<double>(nb) * log_db;

    // seeds x_j = (1/2) Tr prod_{i=F_j}^{1} T_i/d_i from direct products, j = 1,2,3
    const Mat2 Ta = transfer_matrix(Ka, t.h(Symbol::A));
    const Mat2 Tb = transfer_matrix(Kb, t.h(Symbol::B));
    const double da = std::exp(log_da), db = std::exp(log_db);
    Mat2 acc{{{1, 0}, {0, 1}}};
    double x[4] = {0, 0, 0, 0};
    for (int i = 1; i <= 3; ++i) {  // prefix letters u_1 u_2 u_3 = a b a
        const Mat2& T = (i == 2) ? Tb : Ta;
        const double d = (i == 2) ? db : da;
        Mat2 r;
        for (int r0 = 0; r0 < 2; ++r0)
            for (int c0 = 0; c0 < 2; ++c0)
                r[r0][c0] = (T[r0][0] * acc[0][c0] + T[r0][1] * acc[1][c0]) / d;
        acc = r;
        x[i] = 0.5 * (acc[0][0] + acc[1][1]);
    }

    tracemap::TraceTriple triple{x[3], x[2], x[1]};
    out.rhs = sum_log_d + kLn2 + tracemap::log_abs_first_after(triple, k - 3);
    return out;
}

}  // namespace qising::classical
