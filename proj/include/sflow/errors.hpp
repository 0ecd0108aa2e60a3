#pragma once

#include <stdexcept>
#include <string>

namespace sflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (instance files, rational literals, flags).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally well-formed input that violates a contract, e.g. a gamma
/// that is not a null-homologous cycle or a complex that is not closed.
struct ValidationError : Error {
    using Error::Error;
};

/// A request that cannot be served by the chosen method or arguments.
struct UsageError : Error {
    using Error::Error;
};

/// An exhaustive search whose size guard was exceeded.
struct GuardError : Error {
    using Error::Error;
};

}  // namespace sflow
