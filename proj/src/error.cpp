#include "qlrc/error.h"

namespace qlrc {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotQuadraticExtension: return "NotQuadraticExtension";
    case Errc::NotSubcode: return "NotSubcode";
    case Errc::DivisibilityViolated: return "DivisibilityViolated";
    case Errc::ParamRangeViolated: return "ParamRangeViolated";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::NotDualContaining: return "NotDualContaining";
    case Errc::ZeroLocality: return "ZeroLocality";
    case Errc::NonPositiveK: return "NonPositiveK";
    case Errc::WeightTooSmall: return "WeightTooSmall";
    case Errc::NegativeBinomialArgs: return "NegativeBinomialArgs";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NotLocallyRecoverable: return "NotLocallyRecoverable";
    case Errc::InjectivityViolated: return "InjectivityViolated";
    case Errc::WitnessFailed: return "WitnessFailed";
    case Errc::AssertionFailed: return "AssertionFailed";
    }
    return "Unknown";
}

int exit_code(Errc code) noexcept
{
    switch (code) {
    case Errc::BudgetExceeded:
    case Errc::SearchBudgetExceeded:
        return 3;
    case Errc::InjectivityViolated:
    case Errc::WitnessFailed:
    case Errc::AssertionFailed:
        return 4;
    case Errc::NotLocallyRecoverable:
        return 1;
    default:
        return 2;
    }
}

}  // namespace qlrc
