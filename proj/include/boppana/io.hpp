#pragma once

// Machine-readable output. Floating-point values that identify enclosure
// endpoints are written as 17-significant-digit decimal strings; other
// floating-point fields are JSON numbers in shortest round-trip form.

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "boppana/alpha.hpp"
#include "boppana/setfamily.hpp"
#include "boppana/verifier.hpp"

namespace boppana {

// printf("%.17g"), which round-trips every double.
std::string format_double(double v);

nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const AlphaCertificate& cert);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const ClosureStats& stats);
nlohmann::json to_json(const SearchReport& report);

inline constexpr const char* kScanHeader = "x,q,D,u_residual";

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);

}  // namespace boppana
