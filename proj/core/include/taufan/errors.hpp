#pragma once

#include <stdexcept>
#include <string>

namespace taufan {

// Base class for every failure the library reports deliberately.
// Anything else escaping is a plain bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- input / construction -------------------------------------------------

// Relation violates admissibility (a term of length < 2, or a path that does
// not parse against the quiver).
struct NotAdmissible : Error {
    using Error::Error;
};

// Paths of the maximal filtration length survive reduction, so the quotient
// is not certified finite dimensional at the configured bound.
struct NotFiniteDimensional : Error {
    explicit NotFiniteDimensional(const std::string& what, int bound)
        : Error(what), length_bound(bound) {}
    int length_bound;
};

// A relation mixes paths with different endpoints.
struct InconsistentRelation : Error {
    using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

// ---- module arithmetic ----------------------------------------------------

// The direct-sum search exhausted its deterministic schedule without either
// splitting the module or certifying indecomposability.
struct DecompositionUncertain : Error {
    using Error::Error;
};

// ---- enumeration ----------------------------------------------------------

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what, int cap_value)
        : Error(what), cap(cap_value) {}
    int cap;
};

// Completion search found no strictly maximal candidate.
struct AmbiguousMaximum : Error {
    using Error::Error;
};

// ---- wall and chamber geometry ---------------------------------------------

// Simples of a perpendicular piece failed the pairing certificate against
// the complement generators.
struct PairingCheckFailed : Error {
    using Error::Error;
};

struct DependentRays : Error {
    using Error::Error;
};

struct DependentProjection : Error {
    using Error::Error;
};

// pi != rho o nu on a ray generator.
struct IdentityCheckFailed : Error {
    using Error::Error;
};

// Checked-mode disagreement between the combinatorial and geometric sides
// of an order test.
struct CrossCheckMismatch : Error {
    using Error::Error;
};

// ---- category tables --------------------------------------------------------

struct CompositionRepresentativeNotFound : Error {
    using Error::Error;
};

struct CompositionAmbiguous : Error {
    using Error::Error;
};

// A key that must not depend on the chosen representative did.
struct RepresentativeDependence : Error {
    using Error::Error;
};

// Functor image requested for a morphism outside the table.
struct MapUndefined : Error {
    using Error::Error;
};

// ---- rendering ---------------------------------------------------------------

struct SVGUnsupportedRank : Error {
    using Error::Error;
};

}  // namespace taufan
