#pragma once

#include <stdexcept>
#include <string>

namespace knotcolor {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (input/validation) or 3 (internal invariant violation).
struct KnotError : std::runtime_error {
    explicit KnotError(const std::string& msg) : std::runtime_error(msg) {}
};

// --- diagram parsing / validation ---
struct MalformedToken : KnotError {
    using KnotError::KnotError;
};
struct LabelUsedOtherThanTwice : KnotError {
    using KnotError::KnotError;
};
struct MultiComponent : KnotError {
    using KnotError::KnotError;
};
struct DisconnectedDiagram : KnotError {
    using KnotError::KnotError;
};
// A PD code whose rotation system does not embed in the sphere (face count
// != crossings + 2). Such codes describe virtual diagrams, which are out of
// scope.
struct NotPlanar : KnotError {
    using KnotError::KnotError;
};
struct ShadingInconsistent : KnotError {
    using KnotError::KnotError;
};

// --- exact linear algebra ---
struct NotSquare : KnotError {
    using KnotError::KnotError;
};
struct IndexOutOfRange : KnotError {
    using KnotError::KnotError;
};
struct NotPrime : KnotError {
    using KnotError::KnotError;
};
struct SolutionSetTooLarge : KnotError {
    using KnotError::KnotError;
};
struct SearchSpaceTooLarge : KnotError {
    using KnotError::KnotError;
};

// --- coloring / Goeritz ---
struct ZeroCrossingDiagram : KnotError {
    using KnotError::KnotError;
};
struct NoShadedRegion : KnotError {
    using KnotError::KnotError;
};
struct InvalidColoring : KnotError {
    using KnotError::KnotError;
};
struct InconsistentDifferences : KnotError {
    using KnotError::KnotError;
};
struct NotInNullspace : KnotError {
    using KnotError::KnotError;
};
struct AuxiliaryMismatch : KnotError {
    using KnotError::KnotError;
};

// --- pretzel ---
struct NotAKnot : KnotError {
    using KnotError::KnotError;
};

}  // namespace knotcolor
