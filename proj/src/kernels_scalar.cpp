#include "qising/kernels.hpp"

#include "kernels_detail.hpp"

namespace qising::kernels {

namespace {

void orbit_sweep_scalar(std::span<const double> x, std::span<const double> y,
                        std::span<const double> z, int n_max, double bound,
                        int hard_cap, OrbitSweepOut out) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto r = detail::orbit_point(x[i], y[i], z[i], n_max, bound, hard_cap);
        out.escape_index[i] = r.escape_index;
        out.bounded[i] = r.bounded;
        out.certified[i] = r.certified;
    }
}

void first_coord_sweep_scalar(std::span<const double> x, std::span<const double> y,
                              std::span<const double> z, int iters, double* o) {
    for (std::size_t i = 0; i < x.size(); ++i)
        o[i] = detail::first_coord_point(x[i], y[i], z[i], iters);
}

void jacobi_disc_sweep_scalar(std::span<const double> xs,
                              std::span<const std::uint8_t> letters, double Ja,
                              double Jb, double* o) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        o[i] = detail::jacobi_disc_point(xs[i], letters.data(), letters.size(), Ja, Jb);
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar", orbit_sweep_scalar, first_coord_sweep_scalar,
                           jacobi_disc_sweep_scalar};
    return b;
}

}  // namespace qising::kernels
