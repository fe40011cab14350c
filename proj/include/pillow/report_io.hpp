#pragma once

// Serialization of verification reports. JSON keys are written in a fixed
// order so equal reports serialize to identical bytes.

#include <string>

#include "pillow/verifier.hpp"

namespace pillow {

/// {parameters, records, summary}; records is an object keyed by "p/q" in
/// canonical slope order. n/a fields are null.
std::string report_to_json(const VerificationReport& r);

/// Inverse of report_to_json. Throws std::runtime_error on malformed input.
VerificationReport report_from_json(const std::string& text);

/// One header row, then one row per slope.
std::string report_to_csv(const VerificationReport& r);

}  // namespace pillow
