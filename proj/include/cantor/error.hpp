#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class ErrorCode {
    BaseTooSmall,
    DigitOutOfRange,
    DuplicateDigit,
    FirstDigitNonzero,
    TooManyDigits,
    TooFewDigits,
    OutOfRange,
    ParseError,
    NotFinite,
    ZeroHasNoTwin,
    PeriodTooLong,
    StateNotCounted,
    SimultaneousStateEncountered,
    AperiodicInput,
    FiniteRepresentation,
    DeadCycle,
    MuIsZero,
    LevelTooLarge,
    ANotEmpty,
    NotInF,
    NonSparse,
    BadBand,
    Unsupported,
    Cancelled,
};

std::string_view to_string(ErrorCode code);

/// Failure raised by every engine operation. `level()` carries the offending
/// depth k when the failure is tied to one (e.g. the first simultaneous state).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> level = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), level_(level) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> level() const noexcept { return level_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> level_;
};

}  // namespace cantor
