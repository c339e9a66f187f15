#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsalg/group_spec.hpp"
#include "zsalg/verify.hpp"

namespace zsalg {

inline constexpr const char* kVersion = "0.1.0";

struct ChainLevel {
  std::size_t i = 0;
  std::size_t order = 0;
  std::size_t rank = 0;
  std::vector<std::string> gens;

  friend bool operator==(const ChainLevel&, const ChainLevel&) = default;
};

struct TableRow {
  std::size_t n = 0;
  std::size_t dim_rad = 0;
  std::size_t dim_soc = 0;
  std::size_t dim_zs = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Everything the CLI prints for one group. timing_ms is outside the
/// canonical body and ignored by operator==.
struct Report {
  std::string spec;
  std::size_t order = 0;
  std::uint32_t p = 0;
  bool powerful = false;
  std::size_t loewy_length = 0;
  std::vector<ChainLevel> chain;
  std::vector<TableRow> table;  // n = 0..LL, empty for info-only reports
  std::optional<std::size_t> dim_center;
  std::vector<CheckResult> checks;
  std::optional<double> timing_ms;

  friend bool operator==(const Report& a, const Report& b) {
    return a.spec == b.spec && a.order == b.order && a.p == b.p && a.powerful == b.powerful &&
           a.loewy_length == b.loewy_length && a.chain == b.chain && a.table == b.table &&
           a.dim_center == b.dim_center && a.checks == b.checks;
  }
};

struct ReportOptions {
  bool weights = true;  // false: pure linear algebra for every dimension
  bool table = true;    // false: info only
};

/// Chain, Loewy length and (optionally) the per-n dimension table.
Report build_report(const ParsedGroup& g, const ReportOptions& opt);

/// Fixed key order, no timing unless include_timing.
std::string report_to_json(const Report& r, bool include_timing = false);
/// Inverse of report_to_json; throws ParseError on malformed input.
Report report_from_json(const std::string& text);

std::string report_to_csv(const Report& r);
std::string report_to_text(const Report& r);

/// Check names accepted by the verify command, in execution order.
const std::vector<std::string>& check_names();

struct VerifyOptions {
  std::vector<std::string> checks;  // empty: all
  std::size_t morita_k = 2;
};

/// Runs the selected suites on the group algebra. Unknown names throw
/// ParseError.
std::vector<CheckResult> run_checks(const ParsedGroup& g, const VerifyOptions& opt);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& text);

}  // namespace zsalg
