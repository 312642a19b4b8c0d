#pragma once

#include <stdexcept>
#include <string>

namespace lambdacast {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument for a generator or an algorithm.
struct ParameterError : Error {
    using Error::Error;
};

// A randomized generator exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

// Input too large for an exhaustive oracle.
struct SizeError : Error {
    using Error::Error;
};

// Malformed graph/query file.
struct FormatError : Error {
    using Error::Error;
};

// A protocol attempted to exceed the per-round per-edge token budget.
struct BandwidthViolation : Error {
    using Error::Error;
};

// An edge partition failed validation (disconnected part, missing or
// duplicated edge). `part` is the offending part index, or -1.
struct PackingError : Error {
    PackingError(const std::string& what, int part_index = -1)
        : Error(what), part(part_index) {}
    int part;
};

// Cluster sampling left a node without a sampled neighbor. Retriable
// with a fresh seed.
struct CoverageError : Error {
    CoverageError(const std::string& what, int node)
        : Error(what), uncovered(node) {}
    int uncovered;
};

// A value does not fit its wire encoding (e.g. sparsifier weight field).
struct EncodingError : Error {
    using Error::Error;
};

// Impossible configuration, e.g. a verification bound no partition can meet.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace lambdacast
