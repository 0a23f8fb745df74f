#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "qising/kernels.hpp"
#include "qising/rng.hpp"
#include "qising/sequences.hpp"
#include "qising/trace_map.hpp"

using namespace qising;

namespace {

struct SweepData {
    std::vector<double> x, y, z;
};

SweepData random_triples(std::uint64_t seed, int n, double lo, double hi) {
    CounterRng rng(seed);
    SweepData d;
    for (int i = 0; i < n; ++i) {
        d.x.push_back(rng.uniform(lo, hi));
        d.y.push_back(rng.uniform(lo, hi));
        d.z.push_back(rng.uniform(lo, hi));
    }
    return d;
}

}  // namespace

TEST_CASE("orbit sweep matches iterate_orbit semantics") {
    auto d = random_triples(21, 500, -3, 3);
    const int n_max = 50, hard_cap = 4 * 50 + 64;
    std::vector<std::int32_t> esc(d.x.size());
    std::vector<std::uint8_t> bnd(d.x.size()), cert(d.x.size());
    kernels::scalar_backend().orbit_sweep(d.x, d.y, d.z, n_max, 1e6, hard_cap,
                                          {esc.data(), bnd.data(), cert.data()});
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        auto o = tracemap::iterate_orbit({d.x[i], d.y[i], d.z[i]}, n_max, 1e6);
        bool kernel_bounded = bnd[i] != 0;
        CHECK(kernel_bounded == (o.status == tracemap::OrbitStatus::Bounded));
        if (o.escape_index)
            CHECK(esc[i] == *o.escape_index);
        else
            CHECK(esc[i] == -1);
        CHECK((cert[i] != 0) == o.certified);
    }
}

#if defined(__x86_64__)
TEST_CASE("avx2 backend bit-identical to scalar" ) {
    if (!kernels::avx2_supported()) return;
    const auto& sc = kernels::scalar_backend();
    const auto& vx = kernels::avx2_backend();

    SUBCASE("orbit sweep") {
        auto d = random_triples(22, 1003, -4, 4);
        std::size_t n = d.x.size();
        std::vector<std::int32_t> e1(n), e2(n);
        std::vector<std::uint8_t> b1(n), b2(n), c1(n), c2(n);
        sc.orbit_sweep(d.x, d.y, d.z, 64, 1e6, 320, {e1.data(), b1.data(), c1.data()});
        vx.orbit_sweep(d.x, d.y, d.z, 64, 1e6, 320, {e2.data(), b2.data(), c2.data()});
        CHECK(e1 == e2);
        CHECK(b1 == b2);
        CHECK(c1 == c2);
    }

    SUBCASE("first coordinate sweep") {
        auto d = random_triples(23, 1003, -3, 3);
        std::size_t n = d.x.size();
        std::vector<double> o1(n), o2(n);
        for (int iters : {1, 7, 23}) {
            sc.first_coord_sweep(d.x, d.y, d.z, iters, o1.data());
            vx.first_coord_sweep(d.x, d.y, d.z, iters, o2.data());
            for (std::size_t i = 0; i < n; ++i) {
                REQUIRE(std::memcmp(&o1[i], &o2[i], sizeof(double)) == 0);
            }
        }
    }

    SUBCASE("jacobi discriminant sweep") {
        auto w = sequences::substitution_word(10);
        std::vector<std::uint8_t> letters(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            letters[i] = w.at(i) == sequences::Symbol::B ? 1 : 0;
        CounterRng rng(24);
        std::vector<double> xs;
        for (int i = 0; i < 1003; ++i) xs.push_back(rng.uniform(-0.5, 6.0));
        std::vector<double> o1(xs.size()), o2(xs.size());
        sc.jacobi_disc_sweep(xs, letters, 1.0, 1.37, o1.data());
        vx.jacobi_disc_sweep(xs, letters, 1.0, 1.37, o2.data());
        for (std::size_t i = 0; i < xs.size(); ++i)
            REQUIRE(std::memcmp(&o1[i], &o2[i], sizeof(double)) == 0);
    }
}
#endif

TEST_CASE("first coord sweep equals plain trace-map iteration") {
    auto d = random_triples(25, 200, -2, 2);
    std::vector<double> out(d.x.size());
    kernels::scalar_backend().first_coord_sweep(d.x, d.y, d.z, 9, out.data());
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        tracemap::TraceTriple t{d.x[i], d.y[i], d.z[i]};
        for (int s = 0; s < 9; ++s) t = tracemap::apply_f(t);
        CHECK(out[i] == t.x);
    }
}

TEST_CASE("runtime backend selection") {
    const auto& b = kernels::backend();
    CHECK((std::string(b.name) == "scalar" || std::string(b.name) == "avx2"));
}
