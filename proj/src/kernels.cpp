#include "svoronoi/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "kernels_detail.hpp"

// Scalar reference kernels and the runtime dispatch table. The AVX2 variants
// live in kernels_avx2.cpp (compiled with -mavx2 on x86-64 only) and register
// themselves through detail::avx2_table().

namespace svor::kernels {

namespace {

inline bool excluded(std::size_t i, std::span<const int> exclude) {
    for (int e : exclude)
        if (static_cast<std::size_t>(e) == i) return true;
    return false;
}

CountResult cap_count_scalar(const double* xs, const double* ys, const double* zs, std::size_t n,
                             double cx, double cy, double cz, double t, double eps,
                             std::span<const int> exclude) {
    const double hi = t + eps;
    const double lo = t - eps;
    CountResult r;
    for (std::size_t i = 0; i < n; ++i) {
        if (excluded(i, exclude)) continue;
        const double d = xs[i] * cx + ys[i] * cy + zs[i] * cz;
        if (d > hi)
            ++r.inside;
        else if (d >= lo)
            ++r.boundary;
    }
    return r;
}

CountResult disk_count_scalar(const double* us, const double* vs, std::size_t n,
                              double cu, double cv, double tau, double eps,
                              std::span<const int> exclude) {
    const double lo = tau - eps;
    const double hi = tau + eps;
    CountResult r;
    for (std::size_t i = 0; i < n; ++i) {
        if (excluded(i, exclude)) continue;
        const double g = us[i] * us[i] + vs[i] * vs[i] - 2.0 * (cu * us[i] + cv * vs[i]);
        if (g < lo)
            ++r.inside;
        else if (g <= hi)
            ++r.boundary;
    }
    return r;
}

CountResult halfplane_count_scalar(const double* us, const double* vs, std::size_t n,
                                   double du, double dv, double ou, double ov, double eps,
                                   std::span<const int> exclude) {
    CountResult r;
    for (std::size_t i = 0; i < n; ++i) {
        if (excluded(i, exclude)) continue;
        const double h = (us[i] - ou) * du + (vs[i] - ov) * dv;
        if (h > eps)
            ++r.inside;
        else if (h >= -eps)
            ++r.boundary;
    }
    return r;
}

Backend detect_backend();

Backend& backend_slot() {
    static Backend b = detect_backend();
    return b;
}

const detail::KernelTable& table_for(Backend b) {
    static const detail::KernelTable scalar{&cap_count_scalar, &disk_count_scalar,
                                            &halfplane_count_scalar};
    return b == Backend::avx2 ? detail::avx2_table() : scalar;
}

Backend detect_backend() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && detail::avx2_table().cap) return Backend::avx2;
#endif
    return Backend::scalar;
}

} // namespace

namespace detail {

KernelTable& avx2_table() {
    static KernelTable t;
    return t;
}

} // namespace detail

Backend active_backend() { return backend_slot(); }

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && detail::avx2_table().cap != nullptr;
#else
    return false;
#endif
}

void set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_supported())
        throw std::invalid_argument("avx2 backend not available on this CPU/build");
    backend_slot() = b;
}

CountResult cap_count(const double* xs, const double* ys, const double* zs, std::size_t n,
                      double cx, double cy, double cz, double t, double eps,
                      std::span<const int> exclude) {
    return table_for(backend_slot()).cap(xs, ys, zs, n, cx, cy, cz, t, eps, exclude);
}

CountResult disk_count(const double* us, const double* vs, std::size_t n,
                       double cu, double cv, double tau, double eps,
                       std::span<const int> exclude) {
    return table_for(backend_slot()).disk(us, vs, n, cu, cv, tau, eps, exclude);
}

CountResult halfplane_count(const double* us, const double* vs, std::size_t n,
                            double du, double dv, double ou, double ov, double eps,
                            std::span<const int> exclude) {
    return table_for(backend_slot()).halfplane(us, vs, n, du, dv, ou, ov, eps, exclude);
}

} // namespace svor::kernels
