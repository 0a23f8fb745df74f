#include <doctest.h>

#include <cmath>

#include "qising/quantum.hpp"
#include "qising/rng.hpp"

using namespace qising::quantum;
using namespace qising;
namespace seq = qising::sequences;
namespace tmap = qising::tracemap;

TEST_CASE("gamma line values") {
    CouplingMap pure{1.0, 1.0, 0, 0};
    tmap::TraceTriple p = gamma_line(0.0, pure);
    CHECK(p.x == doctest::Approx(-1.0));
    CHECK(p.y == doctest::Approx(-1.0));
    CHECK(p.z == doctest::Approx(1.0));

    CouplingMap c{1.0, 1.3, 0, 0};
    // third coordinate independent of E
    CHECK(gamma_line(0.3, c).z == gamma_line(2.1, c).z);
    // invariant along the curve: (E^2/4)(1/r - r)^2 with r = p_a/p_b
    double r = c.p_a / c.p_b;
    for (double E : {0.0, 0.4, 1.1, 2.0}) {
        double expected = (E * E / 4.0) * (1 / r - r) * (1 / r - r);
        CHECK(tmap::fricke_vogt(gamma_line(E, c)) == doctest::Approx(expected).epsilon(1e-12));
    }
    // E = 0 image escapes after two steps (generic couplings)
    tmap::TraceTriple q = gamma_line(0.0, c);
    CHECK(tmap::certified_escape(tmap::apply_f(tmap::apply_f(q))));
}

TEST_CASE("jacobi discriminant: constant chain closed form") {
    CouplingMap c{1.0, 1.0, 0, 0};
    seq::Word w = seq::Word::from_string("a");
    for (double x : {-0.5, 0.0, 1.0, 3.7, 4.0, 5.0})
        CHECK(jacobi_discriminant(x, w, c) == doctest::Approx(x - 2.0).epsilon(1e-14));
}

TEST_CASE("jacobi discriminant is a degree-|w| polynomial in x") {
    CouplingMap c{1.0, 1.4, 0, 0};
    seq::Word w = seq::substitution_word(6);  // |w| = 13
    // leading coefficient 1/prod J_n: disc(x)/x^N -> 1/prod J
    double prodJ = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        prodJ *= (w.at(i) == seq::Symbol::A ? c.p_a : c.p_b);
    double X = 1e4;
    double lead = jacobi_discriminant(X, w, c) / std::pow(X, double(w.size()));
    CHECK(lead == doctest::Approx(1.0 / prodJ).epsilon(1e-3));
}

TEST_CASE("iterate-offset calibration: half-disc = pi f^{k-1}(gamma)") {
    // freezes m(k) = k - 1: the half trace of the period-F_k monodromy at
    // x = E^2 equals the first coordinate of f^{k-1}(gamma_line(E))
    CouplingMap c{1.0, 1.3, 0, 0};
    for (int k = 2; k <= 6; ++k) {
        seq::Word w = seq::substitution_word(k);
        for (int i = 0; i <= 40; ++i) {
            double E = 0.02 + 2.4 * i / 40.0;
            tmap::TraceTriple t = gamma_line(E, c);
            for (int s = 0; s < k - 1; ++s) t = tmap::apply_f(t);
            double half_disc = 0.5 * jacobi_discriminant(E * E, w, c);
            CHECK(t.x == doctest::Approx(half_disc).epsilon(1e-10));
        }
    }
}

TEST_CASE("sigma_k: pure case single band [0,4] -> lambda [-2,2]") {
    SpectrumParams p;
    p.couplings = {1.0, 1.0, 0, 0};
    p.generation = 2;
    p.grid_resolution = 4000;
    auto s = sigma_k(p);
    REQUIRE(s.x_bands.size() == 1);
    CHECK(s.x_bands.intervals()[0].lo == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(s.x_bands.intervals()[0].hi == doctest::Approx(4.0).epsilon(1e-9));
    REQUIRE(s.lambda_bands.size() == 1);
    CHECK(s.lambda_bands.intervals()[0].lo == doctest::Approx(-2.0));
    CHECK(s.lambda_bands.intervals()[0].hi == doctest::Approx(2.0));
}

TEST_CASE("sigma_k band count and symmetry") {
    SpectrumParams p;
    p.couplings = {1.0, 1.2, 0, 0};
    p.generation = 8;
    p.grid_resolution = 20000;
    auto s = sigma_k(p);
    CHECK(s.x_bands.size() == 34);  // F_8
    CHECK(s.lambda_bands.symmetric_about_zero(1e-9));
    CHECK(s.lambda_bands.size() == 68);

    // band edges solve |disc| = 2 to tight tolerance
    seq::Word w = seq::substitution_word(8);
    for (const auto& b : s.x_bands.intervals()) {
        CHECK(std::fabs(std::fabs(jacobi_discriminant(b.lo, w, p.couplings)) - 2.0) < 1e-7);
        CHECK(std::fabs(std::fabs(jacobi_discriminant(b.hi, w, p.couplings)) - 2.0) < 1e-7);
    }
}

TEST_CASE("sigma_k cross-validates against the bounded-orbit region") {
    // band edges from the discriminant match the sub-level set of the
    // trace-map iterate at matching truncation (identity above), so points
    // inside sigma_k bands have |pi f^{k-1}(gamma(E))| <= 1
    SpectrumParams p;
    p.couplings = {1.0, 1.3, 0, 0};
    p.generation = 7;
    p.grid_resolution = 20000;
    auto s = sigma_k(p);
    for (const auto& b : s.lambda_bands.intervals()) {
        double E = 0.5 * (b.lo + b.hi);
        tmap::TraceTriple t = gamma_line(E, p.couplings);
        for (int i = 0; i < p.generation - 1; ++i) t = tmap::apply_f(t);
        CHECK(std::fabs(t.x) <= 1.0 + 1e-9);
    }
}

TEST_CASE("b_infty approx: pure case fills [-2,2]") {
    SpectrumParams p;
    p.couplings = {1.0, 1.0, 0, 0};
    p.grid_resolution = 20000;
    p.orbit_cap = 300;
    auto b = b_infty_approx(p);
    REQUIRE_FALSE(b.bands.empty());
    CHECK(b.bands.symmetric_about_zero(2 * b.grid_step));
    CHECK(hausdorff_distance(b.bands, BandSet({{-2, 2}})) < 3 * b.grid_step);
}

TEST_CASE("b_infty approx: symmetric, inside the sigma envelope") {
    SpectrumParams p;
    p.couplings = {1.0, 1.4, 0, 0};
    p.grid_resolution = 20001;
    p.orbit_cap = 14;
    auto b = b_infty_approx(p);
    REQUIRE_FALSE(b.bands.empty());
    CHECK(b.bands.symmetric_about_zero(2 * b.grid_step));
    CHECK(b.grid_step > 0);
}

TEST_CASE("fermion sum") {
    BandSet b({{-1, 1}});
    CHECK(fermion_sum(b, 1).intervals() == b.intervals());
    auto s2 = fermion_sum(b, 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2.intervals()[0] == Interval{-2, 2});

    // two symmetric bands: enumerate pairwise sums
    BandSet c({{-1.0, -0.6}, {0.6, 1.0}});
    auto cs = fermion_sum(c, 2);
    REQUIRE(cs.size() == 3);
    CHECK(cs.intervals()[0] == Interval{-2.0, -1.2});
    CHECK(cs.intervals()[1] == Interval{-0.4, 0.4});
    CHECK(cs.intervals()[2] == Interval{1.2, 2.0});

    // total length non-decreasing in N; symmetric input keeps symmetric sums
    double prev = c.total_length();
    for (int n = 2; n <= 4; ++n) {
        auto s = fermion_sum(c, n);
        CHECK(s.total_length() >= prev - 1e-12);
        prev = s.total_length();
        CHECK(s.symmetric_about_zero(1e-12));
    }
    CHECK_THROWS_AS(fermion_sum(b, 0), std::invalid_argument);
}

TEST_CASE("hdist(sigma_k, B approximant) shrinks as k and cap grow") {
    SpectrumParams base;
    base.couplings = {1.0, 1.1, 0, 0};
    double prev = 1e308;
    for (int k : {6, 9, 12}) {
        SpectrumParams sp = base;
        sp.generation = k;
        sp.grid_resolution = 20000;
        auto sig = sigma_k(sp).lambda_bands;
        SpectrumParams bp = base;
        bp.grid_resolution = 5001;
        bp.orbit_cap = k + 2;  // matching truncation
        auto b = b_infty_approx(bp);
        double hd = hausdorff_distance(sig, b.bands);
        CHECK(hd < prev);
        prev = hd;
    }
}

TEST_CASE("nesting trend: hdist(sigma_k, sigma_{k+1}) non-increasing (6..12)") {
    SpectrumParams base;
    base.couplings = {1.0, 1.2, 0, 0};
    base.grid_resolution = 16000;
    std::vector<BandSet> sig;
    for (int k = 6; k <= 12; ++k) {
        SpectrumParams p = base;
        p.generation = k;
        sig.push_back(sigma_k(p).lambda_bands);
    }
    for (std::size_t i = 0; i + 2 < sig.size(); ++i) {
        double d1 = hausdorff_distance(sig[i], sig[i + 1]);
        double d2 = hausdorff_distance(sig[i + 1], sig[i + 2]);
        CHECK(d1 >= d2);
    }
}
