#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladder {

// Base class for every error this library throws on contract violations.
// Callers that only care about "did it work" can catch this one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A path index lies outside [1, m] (first path) or [1, n] (second path).
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// The same cross edge was supplied more than once.
struct DuplicateEdgeError : Error {
    using Error::Error;
};

// An operation was asked about a cross edge the instance does not contain.
struct EdgeNotInInstanceError : Error {
    using Error::Error;
};

// A witness extraction was requested for an instance that has no witness
// (extracting a non-planarity certificate from a planar instance, etc.).
struct NotApplicableError : Error {
    using Error::Error;
};

// A planar embedding was requested for a non-planar instance.
struct NotPlanarError : Error {
    using Error::Error;
};

// An outerplanar embedding was requested for a non-outerplanar instance.
struct NotOuterplanarError : Error {
    using Error::Error;
};

// An embedding to verify does not cover every vertex and edge of the instance.
struct IncompleteEmbeddingError : Error {
    using Error::Error;
};

// The brute-force oracle refused to run: the rotation-system search space
// exceeds the caller's budget.  `search_space` is the computed size,
// saturated at UINT64_MAX when the true product overflows.
struct BudgetExceededError : Error {
    explicit BudgetExceededError(std::uint64_t space)
        : Error("oracle search space " + std::to_string(space) +
                " rotation systems exceeds budget"),
          search_space(space) {}

    std::uint64_t search_space;
};

// A random instance with more cross edges than distinct (l, r) cells exists.
struct TooManyEdgesError : Error {
    using Error::Error;
};

// Malformed textual input.  `line` is 1-based; 0 means "no specific line".
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& what)
        : Error(line_no ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}

    std::size_t line;
};

}  // namespace ladder
