#if defined(__x86_64__)

#include <immintrin.h>

#include <cstring>

#include "qising/kernels.hpp"

#include "kernels_detail.hpp"

// AVX2 variants. Per-lane arithmetic mirrors kernels_detail.hpp op for op
// (mul/add only, no FMA), so results are bit-identical to the scalar backend.

namespace qising::kernels {

namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);
inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(kSignMask, v); }

inline __m256d vclamp(__m256d v) {
    const __m256d cap = _mm256_set1_pd(detail::kCap);
    const __m256d ncap = _mm256_set1_pd(-detail::kCap);
    return _mm256_min_pd(_mm256_max_pd(v, ncap), cap);
}

inline __m256d vstep_x(__m256d x, __m256d y, __m256d z) {
    const __m256d two = _mm256_set1_pd(2.0);
    return vclamp(_mm256_sub_pd(_mm256_mul_pd(_mm256_mul_pd(two, x), y), z));
}

void orbit_sweep_avx2(std::span<const double> xs, std::span<const double> ys,
                      std::span<const double> zs, int n_max, double bound,
                      int hard_cap, OrbitSweepOut out) {
    const std::size_t n = xs.size();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d vbound = _mm256_set1_pd(bound);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(xs.data() + i);
        __m256d y = _mm256_loadu_pd(ys.data() + i);
        __m256d z = _mm256_loadu_pd(zs.data() + i);
        __m256d done = _mm256_setzero_pd();
        __m256d over = _mm256_setzero_pd();
        __m256d bnd = _mm256_setzero_pd();
        __m256d crt = _mm256_setzero_pd();
        __m256d idx = _mm256_set1_pd(-1.0);
        for (int step = 0; step <= hard_cap; ++step) {
            __m256d xy = _mm256_mul_pd(x, y);
            __m256d cert = _mm256_and_pd(
                _mm256_and_pd(_mm256_cmp_pd(vabs(x), one, _CMP_GT_OQ),
                              _mm256_cmp_pd(vabs(y), one, _CMP_GT_OQ)),
                _mm256_cmp_pd(vabs(xy), vabs(z), _CMP_GT_OQ));
            __m256d newly = _mm256_andnot_pd(done, cert);
            idx = _mm256_blendv_pd(idx, _mm256_set1_pd(double(step)), newly);
            crt = _mm256_or_pd(crt, newly);
            done = _mm256_or_pd(done, newly);
            __m256d big = _mm256_or_pd(
                _mm256_or_pd(_mm256_cmp_pd(vabs(x), vbound, _CMP_GT_OQ),
                             _mm256_cmp_pd(vabs(y), vbound, _CMP_GT_OQ)),
                _mm256_cmp_pd(vabs(z), vbound, _CMP_GT_OQ));
            over = _mm256_or_pd(over, _mm256_andnot_pd(done, big));
            if (step == n_max) {
                __m256d nb = _mm256_andnot_pd(over, _mm256_andnot_pd(done, _mm256_castsi256_pd(
                                                        _mm256_set1_epi64x(-1))));
                bnd = _mm256_or_pd(bnd, nb);
                done = _mm256_or_pd(done, nb);
            }
            if (_mm256_movemask_pd(done) == 0xF) break;
            __m256d xn = vstep_x(x, y, z);
            z = y;
            y = x;
            x = xn;
        }
        // lanes never done: magnitude-only escape (or bounded if never over)
        double idxv[4];
        _mm256_storeu_pd(idxv, idx);
        const int mdone = _mm256_movemask_pd(done);
        const int mbnd = _mm256_movemask_pd(bnd);
        const int mover = _mm256_movemask_pd(over);
        for (int l = 0; l < 4; ++l) {
            if (mdone & (1 << l)) {
                out.escape_index[i + l] = static_cast<std::int32_t>(idxv[l]);
                out.bounded[i + l] = (mbnd & (1 << l)) ? 1 : 0;
                out.certified[i + l] = 1;
            } else {
                out.escape_index[i + l] = -1;
                out.bounded[i + l] = (mover & (1 << l)) ? 0 : 1;
                out.certified[i + l] = 0;
            }
        }
    }
    for (; i < n; ++i) {
        auto r = detail::orbit_point(xs[i], ys[i], zs[i], n_max, bound, hard_cap);
        out.escape_index[i] = r.escape_index;
        out.bounded[i] = r.bounded;
        out.certified[i] = r.certified;
    }
}

void first_coord_sweep_avx2(std::span<const double> xs, std::span<const double> ys,
                            std::span<const double> zs, int iters, double* o) {
    const std::size_t n = xs.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(xs.data() + i);
        __m256d y = _mm256_loadu_pd(ys.data() + i);
        __m256d z = _mm256_loadu_pd(zs.data() + i);
        for (int s = 0; s < iters; ++s) {
            __m256d xn = vstep_x(x, y, z);
            z = y;
            y = x;
            x = xn;
        }
        _mm256_storeu_pd(o + i, x);
    }
    for (; i < n; ++i) o[i] = detail::first_coord_point(xs[i], ys[i], zs[i], iters);
}

void jacobi_disc_sweep_avx2(std::span<const double> xs,
                            std::span<const std::uint8_t> letters, double Ja,
                            double Jb, double* o) {
    const std::size_t n = xs.size();
    const std::size_t nl = letters.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(xs.data() + i);
        const __m256d onev = _mm256_set1_pd(1.0);
        __m256d c0a = _mm256_div_pd(
            _mm256_sub_pd(_mm256_sub_pd(x, onev), _mm256_set1_pd(Ja * Ja)),
            _mm256_set1_pd(Ja));
        __m256d c0b = _mm256_div_pd(
            _mm256_sub_pd(_mm256_sub_pd(x, onev), _mm256_set1_pd(Jb * Jb)),
            _mm256_set1_pd(Jb));
        const __m256d c1a = _mm256_set1_pd(-1.0 / Ja);
        const __m256d c1b = _mm256_set1_pd(-1.0 / Jb);
        const __m256d ja = _mm256_set1_pd(Ja);
        const __m256d jb = _mm256_set1_pd(Jb);
        __m256d m00 = onev, m01 = _mm256_setzero_pd();
        __m256d m10 = _mm256_setzero_pd(), m11 = onev;
        __m256i exp_acc = _mm256_setzero_si256();
        for (std::size_t t = 0; t < nl; ++t) {
            const bool b = letters[t] != 0;
            __m256d c0 = b ? c0b : c0a;
            __m256d c1 = b ? c1b : c1a;
            __m256d J = b ? jb : ja;
            __m256d n00 = _mm256_add_pd(_mm256_mul_pd(c0, m00), _mm256_mul_pd(c1, m10));
            __m256d n01 = _mm256_add_pd(_mm256_mul_pd(c0, m01), _mm256_mul_pd(c1, m11));
            __m256d n10 = _mm256_mul_pd(J, m00);
            __m256d n11 = _mm256_mul_pd(J, m01);
            m00 = n00;
            m01 = n01;
            m10 = n10;
            m11 = n11;
            if ((t + 1) % detail::kRescaleEvery == 0) {
                __m256d a = _mm256_max_pd(_mm256_max_pd(vabs(m00), vabs(m01)),
                                          _mm256_max_pd(vabs(m10), vabs(m11)));
                __m256i bits = _mm256_castpd_si256(a);
                __m256i e = _mm256_sub_epi64(
                    _mm256_and_si256(_mm256_srli_epi64(bits, 52),
                                     _mm256_set1_epi64x(0x7FF)),
                    _mm256_set1_epi64x(1023));
                __m256i sbits = _mm256_slli_epi64(
                    _mm256_add_epi64(_mm256_sub_epi64(_mm256_setzero_si256(), e),
                                     _mm256_set1_epi64x(1023)),
                    52);
                __m256d s = _mm256_castsi256_pd(sbits);
                m00 = _mm256_mul_pd(m00, s);
                m01 = _mm256_mul_pd(m01, s);
                m10 = _mm256_mul_pd(m10, s);
                m11 = _mm256_mul_pd(m11, s);
                exp_acc = _mm256_add_epi64(exp_acc, e);
            }
        }
        __m256d tr = _mm256_add_pd(m00, m11);
        double trv[4];
        std::int64_t ev[4];
        _mm256_storeu_pd(trv, tr);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(ev), exp_acc);
        for (int l = 0; l < 4; ++l) {
            double v = trv[l];
            if (ev[l] != 0) {
                v = std::ldexp(v, static_cast<int>(ev[l]));
                if (v > detail::kDiscCap) v = detail::kDiscCap;
                if (v < -detail::kDiscCap) v = -detail::kDiscCap;
            }
            o[i + l] = v;
        }
    }
    for (; i < n; ++i)
        o[i] = detail::jacobi_disc_point(xs[i], letters.data(), nl, Ja, Jb);
}

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

const Backend& avx2_backend() {
    static const Backend b{"avx2", orbit_sweep_avx2, first_coord_sweep_avx2,
                           jacobi_disc_sweep_avx2};
    return b;
}

}  // namespace qising::kernels

#endif  // __x86_64__
