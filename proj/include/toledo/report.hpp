#pragma once

#include <string>

#include "toledo/cech.hpp"
#include "toledo/spectrum.hpp"

namespace toledo {

// Serialized forms of the report types.  JSON output is deterministic
// (insertion-ordered keys) so that emitted reports round-trip
// byte-identically through a parser.

std::string report_to_json(const SpectrumReport& r, int indent = 2);
std::string report_to_csv(const SpectrumReport& r);
std::string report_to_table(const SpectrumReport& r);

std::string scan_to_json(const ScanReport& r, int indent = 2);
std::string scan_to_table(const ScanReport& r);

}  // namespace toledo
