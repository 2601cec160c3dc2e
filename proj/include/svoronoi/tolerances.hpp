#pragma once

namespace svor {

/// Epsilon policy for all predicates. One master epsilon, split into named
/// guards that individual call sites read; each can be overridden after
/// construction. All values are for a unit sphere (inputs are normalized on
/// ingest).
struct Tolerances {
    double norm; ///< unit-norm drift allowed on sphere points
    double sep;  ///< minimum angular separation between distinct sites
    double pred; ///< half-width of the tie band in enclosure predicates
    double deg;  ///< degenerate-triple guard (cross products, determinant rows)
    double gp;   ///< general-position determinant floor

    explicit constexpr Tolerances(double eps = 1e-9)
        : norm(eps), sep(eps), pred(eps), deg(eps), gp(eps) {}
};

} // namespace svor
