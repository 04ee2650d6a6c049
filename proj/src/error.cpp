#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::BaseTooSmall: return "BaseTooSmall";
        case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
        case ErrorCode::DuplicateDigit: return "DuplicateDigit";
        case ErrorCode::FirstDigitNonzero: return "FirstDigitNonzero";
        case ErrorCode::TooManyDigits: return "TooManyDigits";
        case ErrorCode::TooFewDigits: return "TooFewDigits";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotFinite: return "NotFinite";
        case ErrorCode::ZeroHasNoTwin: return "ZeroHasNoTwin";
        case ErrorCode::PeriodTooLong: return "PeriodTooLong";
        case ErrorCode::StateNotCounted: return "StateNotCounted";
        case ErrorCode::SimultaneousStateEncountered: return "SimultaneousStateEncountered";
        case ErrorCode::AperiodicInput: return "AperiodicInput";
        case ErrorCode::FiniteRepresentation: return "FiniteRepresentation";
        case ErrorCode::DeadCycle: return "DeadCycle";
        case ErrorCode::MuIsZero: return "MuIsZero";
        case ErrorCode::LevelTooLarge: return "LevelTooLarge";
        case ErrorCode::ANotEmpty: return "ANotEmpty";
        case ErrorCode::NotInF: return "NotInF";
        case ErrorCode::NonSparse: return "NonSparse";
        case ErrorCode::BadBand: return "BadBand";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::Cancelled: return "Cancelled";
    }
    return "Unknown";
}

}  // namespace cantor
