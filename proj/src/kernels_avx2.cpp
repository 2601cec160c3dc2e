// AVX2 variants of the enclosure kernels. This translation unit is compiled
// with -mavx2 -ffp-contract=off on x86-64 and registers its functions in the
// dispatch table; the dispatcher only selects them after a CPUID check.
//
// The lane arithmetic mirrors the scalar reference exactly: plain mul/add in
// the same association order, no FMA, so counts are bit-identical across
// backends (the equivalence tests assert this).

#include "kernels_detail.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace svor::kernels {
namespace {

// Lane mask that drops excluded site indices. Indices are compared as doubles
// (exact for any realistic site count).
inline __m256d keep_mask(__m256d vidx, std::span<const int> exclude) {
    __m256d keep = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (int e : exclude) {
        __m256d ve = _mm256_set1_pd(static_cast<double>(e));
        keep = _mm256_andnot_pd(_mm256_cmp_pd(vidx, ve, _CMP_EQ_OQ), keep);
    }
    return keep;
}

inline bool excluded(std::size_t i, std::span<const int> exclude) {
    for (int e : exclude)
        if (static_cast<std::size_t>(e) == i) return true;
    return false;
}

inline void tally(__m256d value, __m256d vlo, __m256d vhi, __m256d keep, CountResult& r) {
    __m256d gt = _mm256_and_pd(_mm256_cmp_pd(value, vhi, _CMP_GT_OQ), keep);
    __m256d band = _mm256_and_pd(_mm256_cmp_pd(value, vlo, _CMP_GE_OQ),
                                 _mm256_cmp_pd(value, vhi, _CMP_LE_OQ));
    band = _mm256_and_pd(band, keep);
    r.inside += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(gt)));
    r.boundary += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(band)));
}

CountResult cap_count_avx2(const double* xs, const double* ys, const double* zs, std::size_t n,
                           double cx, double cy, double cz, double t, double eps,
                           std::span<const int> exclude) {
    const double hi = t + eps;
    const double lo = t - eps;
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    const __m256d vcz = _mm256_set1_pd(cz);
    const __m256d vhi = _mm256_set1_pd(hi);
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d four = _mm256_set1_pd(4.0);
    __m256d vidx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);

    CountResult r;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(xs + i), vcx),
                          _mm256_mul_pd(_mm256_loadu_pd(ys + i), vcy)),
            _mm256_mul_pd(_mm256_loadu_pd(zs + i), vcz));
        tally(d, vlo, vhi, keep_mask(vidx, exclude), r);
        vidx = _mm256_add_pd(vidx, four);
    }
    for (; i < n; ++i) {
        if (excluded(i, exclude)) continue;
        const double d = xs[i] * cx + ys[i] * cy + zs[i] * cz;
        if (d > hi)
            ++r.inside;
        else if (d >= lo)
            ++r.boundary;
    }
    return r;
}

CountResult disk_count_avx2(const double* us, const double* vs, std::size_t n,
                            double cu, double cv, double tau, double eps,
                            std::span<const int> exclude) {
    const double lo = tau - eps;
    const double hi = tau + eps;
    const __m256d vcu = _mm256_set1_pd(cu);
    const __m256d vcv = _mm256_set1_pd(cv);
    const __m256d vhi = _mm256_set1_pd(hi);
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d four = _mm256_set1_pd(4.0);
    __m256d vidx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);

    CountResult r;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d u = _mm256_loadu_pd(us + i);
        __m256d v = _mm256_loadu_pd(vs + i);
        // u*u + v*v - 2*(cu*u + cv*v), association as in the scalar kernel
        __m256d q = _mm256_add_pd(_mm256_mul_pd(u, u), _mm256_mul_pd(v, v));
        __m256d w = _mm256_add_pd(_mm256_mul_pd(vcu, u), _mm256_mul_pd(vcv, v));
        __m256d g = _mm256_sub_pd(q, _mm256_mul_pd(two, w));

        // disk interior is g < lo; reuse tally() by negating
        __m256d keep = keep_mask(vidx, exclude);
        __m256d lt = _mm256_and_pd(_mm256_cmp_pd(g, vlo, _CMP_LT_OQ), keep);
        __m256d band = _mm256_and_pd(_mm256_cmp_pd(g, vlo, _CMP_GE_OQ),
                                     _mm256_cmp_pd(g, vhi, _CMP_LE_OQ));
        band = _mm256_and_pd(band, keep);
        r.inside += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(lt)));
        r.boundary += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(band)));
        vidx = _mm256_add_pd(vidx, four);
    }
    for (; i < n; ++i) {
        if (excluded(i, exclude)) continue;
        const double g = us[i] * us[i] + vs[i] * vs[i] - 2.0 * (cu * us[i] + cv * vs[i]);
        if (g < lo)
            ++r.inside;
        else if (g <= hi)
            ++r.boundary;
    }
    return r;
}

CountResult halfplane_count_avx2(const double* us, const double* vs, std::size_t n,
                                 double du, double dv, double ou, double ov, double eps,
                                 std::span<const int> exclude) {
    const __m256d vdu = _mm256_set1_pd(du);
    const __m256d vdv = _mm256_set1_pd(dv);
    const __m256d vou = _mm256_set1_pd(ou);
    const __m256d vov = _mm256_set1_pd(ov);
    const __m256d vhi = _mm256_set1_pd(eps);
    const __m256d vlo = _mm256_set1_pd(-eps);
    const __m256d four = _mm256_set1_pd(4.0);
    __m256d vidx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);

    CountResult r;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d h = _mm256_add_pd(
            _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(us + i), vou), vdu),
            _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(vs + i), vov), vdv));
        tally(h, vlo, vhi, keep_mask(vidx, exclude), r);
        vidx = _mm256_add_pd(vidx, four);
    }
    for (; i < n; ++i) {
        if (excluded(i, exclude)) continue;
        const double h = (us[i] - ou) * du + (vs[i] - ov) * dv;
        if (h > eps)
            ++r.inside;
        else if (h >= -eps)
            ++r.boundary;
    }
    return r;
}

struct RegisterAvx2 {
    RegisterAvx2() {
        auto& t = detail::avx2_table();
        t.cap = &cap_count_avx2;
        t.disk = &disk_count_avx2;
        t.halfplane = &halfplane_count_avx2;
    }
} const register_avx2;

} // namespace
} // namespace svor::kernels

#endif // x86-64
