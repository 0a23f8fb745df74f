#include <doctest.h>

#include <stdexcept>
#include "qising/sets.hpp"

using namespace qising;

TEST_CASE("band set merging and invariants") {
    BandSet b({{2, 3}, {0, 1}, {0.5, 1.5}});
    REQUIRE(b.size() == 2);
    CHECK(b.intervals()[0] == Interval{0, 1.5});
    CHECK(b.hull() == Interval{0, 3});
    CHECK(b.total_length() == doctest::Approx(2.5));
    CHECK(b.gaps().size() == 1);
    CHECK_THROWS_AS(BandSet({{1, 0}}), std::invalid_argument);
}

TEST_CASE("symmetry check") {
    CHECK(BandSet({{-2, -1}, {1, 2}}).symmetric_about_zero(1e-12));
    CHECK(BandSet({{-1, 1}}).symmetric_about_zero(1e-12));
    CHECK_FALSE(BandSet({{-2, -1}, {1, 2.1}}).symmetric_about_zero(1e-3));
}

TEST_CASE("point set dedupe") {
    PointSet p({1.0, 1.0 + 1e-12, 0.0, 2.0});
    CHECK(p.size() == 3);
}

TEST_CASE("hausdorff distance exact cases") {
    PointSet a({0.0}), b({1.0});
    CHECK(hausdorff_distance(a, a) == doctest::Approx(0.0));
    CHECK(hausdorff_distance(a, b) == doctest::Approx(1.0));
    PointSet c({0.0, 2.0});
    CHECK(hausdorff_distance(c, b) == doctest::Approx(1.0));

    BandSet u({{0, 1}}), v({{0, 0.4}, {0.6, 1}});
    // farthest point of u from v is the gap midpoint 0.5
    CHECK(hausdorff_distance(u, v) == doctest::Approx(0.1));
    CHECK(hausdorff_distance(v, u) == doctest::Approx(0.1));

    BandSet w({{-3, -2}, {2, 3}});
    CHECK(hausdorff_distance(u, w) == doctest::Approx(3.0));  // u's left end to -2... max over directions
    CHECK_THROWS_AS(hausdorff_distance(BandSet(), u), std::domain_error);
}

TEST_CASE("minkowski sum") {
    BandSet a({{0, 1}});
    BandSet s = minkowski_sum(a, a);
    REQUIRE(s.size() == 1);
    CHECK(s.intervals()[0] == Interval{0, 2});

    BandSet b({{-2, -1}, {1, 2}});
    BandSet t = minkowski_sum(b, b);
    // pairwise: [-4,-2], [-1,1], [2,4]
    REQUIRE(t.size() == 3);
    CHECK(t.intervals()[1] == Interval{-1, 1});
}
