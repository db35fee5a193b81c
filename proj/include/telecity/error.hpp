#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace telecity {

enum class ErrorKind {
    InvalidParams,
    PreconditionFailed,
    AssumptionViolated,
    NoRoot,
    NonUniqueRoot,
    MixedConditionViolated,
    SingularSystem,
    SolverFailedAtPerturbedPoint,
    LocationUndefined,
    DegenerateRent,
    ParallelCurves,
    OutsideAdmissibleRegion,
    IncompatibleRegimes,
    VariantMismatch,
    EmptyAdmissibleRegion,
    ConfigInvalid,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for every model-level failure; `kind()` is the
/// machine-readable tag surfaced by the CLI and the Python bindings.
class ModelError : public std::runtime_error {
public:
    ModelError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when the bracket scan finds more than one sign change.
class NonUniqueRootError : public ModelError {
public:
    NonUniqueRootError(const std::string& message, std::vector<std::pair<double, double>> brackets)
        : ModelError(ErrorKind::NonUniqueRoot, message), brackets_(std::move(brackets)) {}

    const std::vector<std::pair<double, double>>& brackets() const noexcept { return brackets_; }

private:
    std::vector<std::pair<double, double>> brackets_;
};

} // namespace telecity
