#pragma once

// Command-line front end. `run` parses arguments (without the program name),
// writes the command output to `out` and diagnostics to `err`, and returns
// the process exit code:
//   0 success, 1 verification mismatch, 2 validation error,
//   3 formula mode refused (sigma = i or non-sparse D), 4 horizon-limited or
//   UNKNOWN result, 5 capacity exceeded, 130 cancelled.

#include "cantor/geometry_oracle.hpp"
#include "cantor/measure.hpp"

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

inline constexpr const char* kSchema = "cantor-intersect/1";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Set by the SIGINT handler of the executable; polled by long computations.
std::atomic<bool>& cancel_flag();

/// Level cap: CANTOR_CAP when set and valid, else kDefaultCap.
std::size_t default_cap();

/// JSON documents with the stable field order of the schema.
std::string report_json(const MeasureReport& r, const NaryExpansion* t, int precision);
std::string cover_json(const DigitSet& ds, const CoverBound& c);

/// Rows k = 0..K: C_k colored by case, C_k + trunc_k(t), and the literal
/// intersection C_k ∩ (C_k + t).
std::string render_svg(const DigitSet& ds, const NaryExpansion& t, std::size_t K, const OracleOptions& opts = {});

}  // namespace cantor::cli
