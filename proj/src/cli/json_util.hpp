#pragma once

#include "cantor/measure.hpp"

#include <json.hpp>

namespace cantor::cli {

using Json = nlohmann::ordered_json;

Json exact_json(const ExactLogValue& v, int precision);
Json exponent_json(const LogExponent& e, int precision);
Json digit_set_json(const DigitSet& ds);
Json translation_json(const NaryExpansion& t);
Json membership_json(const FMembership& f);
Json dense_json(const DenseApproximant& a, int precision);
Json report_object(const MeasureReport& r, const NaryExpansion* t, int precision);
Json cover_object(const DigitSet& ds, const CoverBound& c);

/// Header shared by every document: schema tag and command name.
Json document(const char* command);

}  // namespace cantor::cli
