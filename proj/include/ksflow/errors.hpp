#pragma once

#include <stdexcept>
#include <string>

namespace ksflow {

/// Base class of all library errors. Configuration mistakes (bad input
/// data, malformed specs) derive from ConfigError; failures occurring
/// while a computation is running derive from RuntimeError.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct RuntimeError : Error {
    using Error::Error;
};

// -- configuration / precondition violations ------------------------------

struct ZeroBasePoint : ConfigError {
    ZeroBasePoint() : ConfigError("KS lift/projection requires a nonzero base point") {}
    explicit ZeroBasePoint(const std::string& what) : ConfigError(what) {}
};

struct DegenerateFiber : ConfigError {
    explicit DegenerateFiber(const std::string& what) : ConfigError(what) {}
};

struct BadIndex : ConfigError {
    explicit BadIndex(const std::string& what) : ConfigError(what) {}
};

struct WrongFamily : ConfigError {
    explicit WrongFamily(const std::string& what) : ConfigError(what) {}
};

struct EmptyShell : ConfigError {
    explicit EmptyShell(const std::string& what) : ConfigError(what) {}
};

struct GridTooSmall : ConfigError {
    explicit GridTooSmall(const std::string& what) : ConfigError(what) {}
};

// -- runtime failures ------------------------------------------------------

struct AtSingularity : RuntimeError {
    explicit AtSingularity(const std::string& what) : RuntimeError(what) {}
};

struct StepRejected : RuntimeError {
    explicit StepRejected(const std::string& what) : RuntimeError(what) {}
};

struct BudgetExceeded : RuntimeError {
    explicit BudgetExceeded(const std::string& what) : RuntimeError(what) {}
};

struct EventOverflow : RuntimeError {
    explicit EventOverflow(const std::string& what) : RuntimeError(what) {}
};

struct LiftFailure : RuntimeError {
    explicit LiftFailure(const std::string& what) : RuntimeError(what) {}
};

struct NoRadiusFound : RuntimeError {
    explicit NoRadiusFound(const std::string& what) : RuntimeError(what) {}
};

} // namespace ksflow
