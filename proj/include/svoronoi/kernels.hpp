#pragma once

#include <cstddef>
#include <span>

namespace svor::kernels {

/// Result of a batched enclosure scan: how many points are strictly inside,
/// and how many sit inside the tie band around the boundary. Callers treat
/// boundary > 0 as a degeneracy.
struct CountResult {
    int inside = 0;
    int boundary = 0;
};

// All kernels scan structure-of-arrays coordinate spans and skip the indices
// listed in `exclude` (ids outside [0,n) are ignored). Scalar and
// SIMD backends are bit-identical: both evaluate the same mul/add expression
// per lane against precomputed [lo, hi] band edges, so counts never differ
// across backends. Kernel translation units are compiled with
// -ffp-contract=off to keep that guarantee.

/// Spherical cap scan: point i counts as inside when
///   x[i]*cx + y[i]*cy + z[i]*cz > t + eps
/// and as boundary when the dot product lands in [t - eps, t + eps].
CountResult cap_count(const double* xs, const double* ys, const double* zs, std::size_t n,
                      double cx, double cy, double cz, double t, double eps,
                      std::span<const int> exclude = {});

/// Planar disk scan around center c with threshold tau = |t|^2 - 2<c,t> for a
/// boundary point t: point i is inside when
///   u[i]^2 + v[i]^2 - 2*(cu*u[i] + cv*v[i]) < tau - eps.
/// The expansion keeps rounding growth linear in |c| for far-away centers.
CountResult disk_count(const double* us, const double* vs, std::size_t n,
                       double cu, double cv, double tau, double eps,
                       std::span<const int> exclude = {});

/// Open half-plane scan: point i is inside when <d, p_i - o> > eps,
/// boundary when |<d, p_i - o>| <= eps.
CountResult halfplane_count(const double* us, const double* vs, std::size_t n,
                            double du, double dv, double ou, double ov, double eps,
                            std::span<const int> exclude = {});

enum class Backend { scalar, avx2 };

/// Backend in use for all three kernels. Defaults to the widest one the CPU
/// supports, detected once at startup.
Backend active_backend();
const char* backend_name(Backend b);
bool avx2_supported();

/// Force a backend (used by equivalence tests and --no-simd). Throws
/// std::invalid_argument if the CPU lacks it.
void set_backend(Backend b);

} // namespace svor::kernels
