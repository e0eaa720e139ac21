#pragma once

#include <stdexcept>
#include <string>

namespace qlrc {

enum class Errc {
    // invalid input
    InvalidArgument,
    NonPrimeCharacteristic,
    ReducibleModulus,
    NotPrimitive,
    FieldMismatch,
    DivisionByZero,
    EmptyInput,
    LengthMismatch,
    NotQuadraticExtension,
    NotSubcode,
    DivisibilityViolated,
    ParamRangeViolated,
    ExponentOutOfRange,
    NotDualContaining,
    ZeroLocality,
    NonPositiveK,
    WeightTooSmall,
    NegativeBinomialArgs,
    HypothesisViolated,
    // resource limits
    BudgetExceeded,
    SearchBudgetExceeded,
    // negative results
    NotLocallyRecoverable,
    // internal consistency failures; these indicate a bug
    InjectivityViolated,
    WitnessFailed,
    AssertionFailed,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Process exit code for a failure of the given kind: 2 invalid parameters,
// 3 budget exceeded, 4 internal assertion, 1 anything else.
int exit_code(Errc code) noexcept;

}  // namespace qlrc
