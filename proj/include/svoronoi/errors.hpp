#pragma once

#include <stdexcept>
#include <string>

namespace svor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Three input points too close to collinear/coincident to carry a circumcenter.
struct DegenerateTriple : Error {
    using Error::Error;
};

/// A site fell inside the tie band of an enclosure predicate. Raised rather
/// than resolved: degeneracies are rejected, never perturbed silently.
struct PredicateDegeneracy : Error {
    using Error::Error;
};

/// Point to invert coincides with the inversion center.
struct CenterInversion : Error {
    using Error::Error;
};

/// Requested inversion center too close to a site.
struct CenterCollision : Error {
    using Error::Error;
};

/// Diagram order outside 1..n-1, or n too small.
struct OrderOutOfRange : Error {
    using Error::Error;
};

/// Site set failed the general-position validation.
struct GeneralPositionViolation : Error {
    using Error::Error;
};

/// Unbounded-edge matching between the two planar diagrams is not a perfect
/// matching. Signals a violated construction assumption; never papered over.
struct GlueMismatch : Error {
    using Error::Error;
};

/// A label class did not form a single closed cycle.
struct CoverViolation : Error {
    using Error::Error;
};

/// A site lies on its own bisector beyond tolerance (impossible in general
/// position).
struct SideAmbiguity : Error {
    using Error::Error;
};

/// A construction self-check failed; indicates a bug or a degeneracy leak.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace svor
