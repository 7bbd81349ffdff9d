#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ontorisk {

/// Base class for all engine errors. CLI maps these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file: bad JSON, wrong types, unknown keys.
struct ParseError : Error {
    using Error::Error;
};

struct ValidationIssue {
    std::string code;      // machine-readable kind, e.g. "node_weight_sum"
    std::string location;  // dimension / node / edge the issue points at
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// An operation that requires a valid ontology was handed an invalid one.
struct ValidationError : Error {
    ValidationError(std::string what, ValidationReport rep)
        : Error(std::move(what)), report(std::move(rep)) {}
    ValidationReport report;
};

/// All-zero weights: nothing to normalize.
struct DegenerateGraphError : Error {
    using Error::Error;
};

/// Ideal dimension with zero nodes where a count ratio is needed.
struct DegenerateIdealError : Error {
    using Error::Error;
};

struct AbsentDimensionError : Error {
    using Error::Error;
};

/// A referenced ideal element lacks omega / phi / rho.
struct IncompleteIdealError : Error {
    using Error::Error;
};

/// A node lacks the per-node constants an operation needs (c0, lambda, ...).
struct IncompleteNodeError : Error {
    using Error::Error;
};

struct MalformedPathError : Error {
    using Error::Error;
};

struct DegenerateShockError : Error {
    using Error::Error;
};

/// Feature vectors that cannot be compared (no shared feature names).
struct SchemaError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    InsufficientDataError(std::string what, long matches)
        : Error(std::move(what)), match_count(matches) {}
    long match_count;
};

struct EmptyDatabaseError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

/// A numeric precondition (named bound) was violated.
struct DomainBoundError : Error {
    using Error::Error;
};

}  // namespace ontorisk
