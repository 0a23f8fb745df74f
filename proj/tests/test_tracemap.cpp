#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qising/rng.hpp"
#include "qising/trace_map.hpp"

using namespace qising::tracemap;
using qising::CounterRng;

namespace {
double dist(const TraceTriple& a, const TraceTriple& b) {
    return std::fmax(std::fabs(a.x - b.x),
                     std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}
}  // namespace

TEST_CASE("apply_f basic values") {
    CHECK(apply_f({1, 1, 1}) == TraceTriple{1, 1, 1});
    CHECK(apply_f({-1, -1, 1}) == TraceTriple{1, -1, -1});
    CHECK(apply_f({0, 0, 5}) == TraceTriple{-5, 0, 0});
}

TEST_CASE("apply_f saturates instead of overflowing") {
    TraceTriple t{1e90, 1e90, 0};
    TraceTriple u = apply_f(t);
    CHECK(u.x == kCoordCap);
    CHECK(std::isfinite(apply_f(u).x));
}

TEST_CASE("inverse identity") {
    TraceTriple t{0.3, 0.7, -0.2};
    CHECK(dist(apply_f_inv(apply_f(t)), t) < 1e-12);
    CHECK(dist(apply_f(apply_f_inv(t)), t) < 1e-12);
    CHECK(apply_f_inv({1, 1, 1}) == TraceTriple{1, 1, 1});
    CHECK(apply_f_inv({1, -1, -1}) == TraceTriple{-1, -1, 1});
    CounterRng rng(99);
    for (int i = 0; i < 200; ++i) {
        TraceTriple r{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(dist(apply_f_inv(apply_f(r)), r) < 1e-12);
    }
}

TEST_CASE("fricke_vogt values and invariance") {
    CHECK(fricke_vogt({1, 1, 1}) == doctest::Approx(0.0));
    CHECK(fricke_vogt({0, 0, 3}) == doctest::Approx(8.0));
    CHECK(fricke_vogt({2, 3, 5}) == doctest::Approx(-23.0));
    CounterRng rng(7);
    for (int i = 0; i < 1000; ++i) {
        TraceTriple t{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
        double i0 = fricke_vogt(t);
        CHECK(std::fabs(fricke_vogt(apply_f(t)) - i0) <=
              1e-10 * std::fmax(1.0, std::fabs(i0)));
    }
}

TEST_CASE("certified escape cone") {
    CHECK(certified_escape({2, 2, 1}));
    CHECK_FALSE(certified_escape({1, 1, 1}));
    CHECK_FALSE(certified_escape({0.5, 10, 0}));
    // forward invariance
    CounterRng rng(11);
    for (int i = 0; i < 500; ++i) {
        TraceTriple t{rng.uniform(1.01, 5), rng.uniform(1.01, 5), rng.uniform(-5, 5)};
        if (!certified_escape(t)) continue;
        TraceTriple u = t;
        for (int s = 0; s < 30; ++s) {
            u = apply_f(u);
            if (std::fabs(u.x) >= kCoordCap) break;
            REQUIRE(certified_escape(u));
        }
    }
}

TEST_CASE("iterate_orbit outcomes") {
    auto bounded = iterate_orbit({0, 0, 0.5}, 100, 1e6);
    CHECK(bounded.status == OrbitStatus::Bounded);
    CHECK(bounded.steps_used == 100);

    auto escaped = iterate_orbit({2, 2, 1}, 100, 1e6);
    CHECK(escaped.status == OrbitStatus::Escaped);
    CHECK(escaped.escape_index.value() == 0);
    CHECK(escaped.certified);

    auto rho = iterate_orbit(rho1_point(2.0), 30, 1e6);
    CHECK(rho.status == OrbitStatus::Bounded);
}

TEST_CASE("escape rate: Cauchy, variant agreement, error for bounded") {
    auto pr = escape_rate_detail({10, 10, 0}, 1e-10);
    CHECK(pr.rate_norm > 0);
    CHECK(std::fabs(pr.rate_norm - pr.rate_first) < 1e-8);
    // shrinking tolerance keeps the value stable
    double r1 = escape_rate({10, 10, 0}, 1e-6);
    double r2 = escape_rate({10, 10, 0}, 1e-12);
    CHECK(std::fabs(r1 - r2) < 1e-5);
    CHECK_THROWS_AS(escape_rate({1, 1, 1}, 1e-8), std::domain_error);
    CHECK_THROWS_AS(escape_rate({0, 0, 0.5}, 1e-8), std::domain_error);
}

TEST_CASE("singularities and cycle") {
    auto P = singularities();
    for (const auto& p : P) CHECK(fricke_vogt(p) == doctest::Approx(0.0));
    CHECK(apply_f(P[0]) == P[0]);
    CHECK(apply_f(P[1]) == P[2]);
    CHECK(apply_f(P[2]) == P[3]);
    CHECK(apply_f(P[3]) == P[1]);
}

TEST_CASE("rho1 curve") {
    CHECK(rho1_point(1.0) == TraceTriple{1, 1, 1});
    CHECK(rho1_point(0.0) == TraceTriple{0, 0, 0});
    CHECK(fricke_vogt(rho1_point(0.0)) == doctest::Approx(-1.0));
    TraceTriple p = rho1_point(2.0);
    CHECK(p.y == doctest::Approx(2.0 / 3.0));
    CHECK(dist(apply_f(apply_f(p)), p) < 1e-12);
    CHECK_THROWS_AS(rho1_point(0.5), std::domain_error);
    // f maps rho1(x) to rho1(x/(2x-1))
    for (double x : {-4.0, -0.3, 0.2, 0.9, 3.0}) {
        CHECK(dist(apply_f(rho1_point(x)), rho1_point(x / (2 * x - 1))) < 1e-12);
    }
}

TEST_CASE("symmetries") {
    CHECK(apply_symmetry(SymmetryName::S, {1, 2, 3}) == TraceTriple{3, 2, 1});
    auto P = singularities();
    CHECK(apply_symmetry(SymmetryName::S2, P[0]) == P[1]);
    CHECK(apply_symmetry(SymmetryName::S3, P[0]) == P[2]);
    CHECK(apply_symmetry(SymmetryName::S4, P[0]) == P[3]);
    CHECK(apply_symmetry(SymmetryName::S3, {1, 2, 3}) == TraceTriple{1, -2, -3});
    CHECK_THROWS_AS(symmetry_from_string("s5"), std::invalid_argument);

    // reversing symmetry s f s = f^{-1}; intertwining f s2 = s3 f etc.
    CounterRng rng(13);
    for (int i = 0; i < 300; ++i) {
        TraceTriple t{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        TraceTriple lhs = apply_symmetry(SymmetryName::S,
                                         apply_f(apply_symmetry(SymmetryName::S, t)));
        CHECK(dist(lhs, apply_f_inv(t)) < 1e-12);
        CHECK(dist(apply_f(apply_symmetry(SymmetryName::S2, t)),
                   apply_symmetry(SymmetryName::S3, apply_f(t))) < 1e-12);
        CHECK(dist(apply_f(apply_symmetry(SymmetryName::S3, t)),
                   apply_symmetry(SymmetryName::S4, apply_f(t))) < 1e-12);
        CHECK(dist(apply_f(apply_symmetry(SymmetryName::S4, t)),
                   apply_symmetry(SymmetryName::S2, apply_f(t))) < 1e-12);
    }
}

TEST_CASE("differential") {
    TraceTriple t{0.4, -1.2, 2.0};
    Mat3 J = differential(t);
    CHECK(J[0][0] == doctest::Approx(-2.4));
    CHECK(J[0][1] == doctest::Approx(0.8));
    CHECK(J[0][2] == doctest::Approx(-1.0));
    CHECK(mat_det(J) == doctest::Approx(-1.0));
    // Df^6 at (0,0,a) carries eigenvalue 1 (direction along the period-6 family)
    for (double a : {0.5, 1.0, 2.0}) {
        Mat3 D = differential_iterate({0, 0, a}, 6);
        // det = (-1)^6 = 1 and char poly has root 1
        CHECK(mat_det(D) == doctest::Approx(1.0).epsilon(1e-10));
        double tr = D[0][0] + D[1][1] + D[2][2];
        double m2 = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) m2 += D[i][i] * D[j][j] - D[i][j] * D[j][i];
        // p(1) = -1 + tr - m2 + det = 0
        CHECK(std::fabs(-1 + tr - m2 + mat_det(D)) <
              1e-9 * (1 + std::fabs(tr) + std::fabs(m2)));
    }
}

TEST_CASE("period-6 family and invariant drift over 20 steps") {
    for (double a : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        TraceTriple t{0, 0, a};
        TraceTriple u = t;
        for (int i = 0; i < 6; ++i) u = apply_f(u);
        CHECK(dist(u, t) < 1e-12);
    }
    CounterRng rng(17);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        TraceTriple t{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        double i0 = fricke_vogt(t);
        TraceTriple u = t;
        bool stayed = true;
        for (int s = 0; s < 20; ++s) {
            u = apply_f(u);
            if (std::fmax(std::fabs(u.x), std::fmax(std::fabs(u.y), std::fabs(u.z))) > 1e3) {
                stayed = false;
                break;
            }
        }
        if (!stayed) continue;
        ++checked;
        CHECK(std::fabs(fricke_vogt(u) - i0) <= 1e-8 * std::fmax(1.0, std::fabs(i0)));
    }
    CHECK(checked > 100);
}
