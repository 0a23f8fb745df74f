#pragma once

#include <cstdint>
#include <span>
#include <string>

// Batched inner loops for grid sweeps. Scalar reference and AVX2 variants are
// semantically identical (same operation order, no FMA, power-of-2 rescaling on
// a fixed schedule) so backends produce bit-identical results; the equivalence
// suite asserts this.

namespace qising::kernels {

struct OrbitSweepOut {
    // per point: first step at which the escape cone held, -1 if none
    std::int32_t* escape_index = nullptr;
    // per point: 1 = bounded for n_max steps within bound
    std::uint8_t* bounded = nullptr;
    // per point: 1 = escape certified by cone (0 = magnitude-only)
    std::uint8_t* certified = nullptr;
};

struct Backend {
    const char* name;

    // Trace-map orbit classification for a batch of initial triples.
    void (*orbit_sweep)(std::span<const double> x, std::span<const double> y,
                        std::span<const double> z, int n_max, double bound,
                        int hard_cap, OrbitSweepOut out);

    // First coordinate of f^iters per point, coordinates saturated at +-1e100.
    void (*first_coord_sweep)(std::span<const double> x, std::span<const double> y,
                              std::span<const double> z, int iters, double* out);

    // Trace of prod_{n=N}^{1} B(letters[n]) at each grid value, where
    // B(J) = [[(x-1-J^2)/J, -1/J], [J, 0]]. letters: 0 = a, 1 = b.
    // Power-of-2 rescale every 32 factors; result saturated at +-1e300.
    void (*jacobi_disc_sweep)(std::span<const double> xs,
                              std::span<const std::uint8_t> letters, double Ja,
                              double Jb, double* out);
};

/// Active backend: AVX2 when the CPU supports it, scalar otherwise.
/// Override with QISING_KERNEL=scalar|avx2.
const Backend& backend();

const Backend& scalar_backend();
#if defined(__x86_64__)
bool avx2_supported();
const Backend& avx2_backend();
#endif

}  // namespace qising::kernels
