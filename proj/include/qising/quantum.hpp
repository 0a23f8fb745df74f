#pragma once

#include "qising/sequences.hpp"
#include "qising/sets.hpp"
#include "qising/trace_map.hpp"

namespace qising::quantum {

using sequences::CouplingMap;
using sequences::Word;
using tracemap::TraceTriple;

struct SpectrumParams {
    CouplingMap couplings;   // transverse field normalized to 1; q unused
    int generation = 8;      // >= 2
    int grid_resolution = 20000;  // >= 1000
    int orbit_cap = 2000;
    int parallelism = 1;

    void validate() const;
};

/// Energy line into trace-map space:
///   gamma(E) = ((E^2-(1+p_a^2))/2p_a, (E^2-(1+p_b^2))/2p_b, (p_a^2+p_b^2)/2 p_a p_b).
/// Half the period-F_k discriminant at x = E^2 equals the first coordinate of
/// f^{k-1}(gamma(E)).
TraceTriple gamma_line(double E, const CouplingMap& c);

/// Trace of the one-period monodromy of the periodic Jacobi operator with
/// off-diagonals J_n = p(w_n) and diagonal 1 + J_n^2, at spectral parameter x.
double jacobi_discriminant(double x, const Word& w, const CouplingMap& c);

struct SigmaResult {
    BandSet lambda_bands;     // spectrum in lambda, symmetric about 0
    BandSet x_bands;          // bands of {|tr M(x)| <= 2} in x = lambda^2
    int touching_merges = 0;  // x-bands merged at edges closer than 1e-9
};

/// Period-F_k approximant spectrum; band edges refined to 1e-12.
/// Throws std::runtime_error if the band count cannot be reconciled with F_k.
SigmaResult sigma_k(const SpectrumParams& params);

struct BInftyResult {
    BandSet bands;         // closure of bounded-orbit energies, grid intervals
    double grid_step = 0;  // recorded so Hausdorff comparisons stay honest
    double e_max = 0;
};

/// Grid approximation of {E : orbit of gamma(E) stays bounded}.
BInftyResult b_infty_approx(const SpectrumParams& params);

/// N-fold Minkowski sum of a band set with itself.
BandSet fermion_sum(const BandSet& bands, int N);

}  // namespace qising::quantum
