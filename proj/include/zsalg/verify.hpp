#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zsalg/algebra.hpp"
#include "zsalg/jennings.hpp"

namespace zsalg {

/// pass/fail for proved statements; finding for legitimate observations
/// that are not theorem violations; skipped when a hypothesis is absent.
enum class CheckStatus { pass, fail, finding, skipped };

const char* to_string(CheckStatus s) noexcept;
/// Inverse of to_string; throws ParseError on unknown text.
CheckStatus check_status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string details;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Worst status of a batch: fail beats everything, then pass/finding/skipped
/// count as success.
bool all_passed(const std::vector<CheckResult>& results);

/// x commutes with every group element, checked directly on the group
/// table (independent of Algebra::center).
bool commutes_with_group(const Algebra& a, const FpVector& x);

/// Group-theoretic chain equals the ring-theoretic one; weight spans equal
/// radical powers and socles for n = 0..LL; the Loewy-length formula
/// equals the nilpotency index.
std::vector<CheckResult> verify_jennings_oracle(const JenningsBasis& b);

/// Soc^n = J^{LL-n} for n = 0..LL.
CheckResult verify_rigidity(const JenningsBasis& b);

/// The central-monomial theorem at one level s with D_s >= [G, G].
std::vector<CheckResult> verify_main_theorem(const JenningsBasis& b, std::size_t s);
/// verify_main_theorem at every admissible level.
std::vector<CheckResult> verify_main_theorem_all(const JenningsBasis& b);

/// D_2 = D_p, the explicit ZS^n for 1 <= n <= p, Soc^p <= Z, and a search
/// for an element of Soc^{p+1} outside Z. Skipped for non-powerful groups.
std::vector<CheckResult> verify_powerful_theorem(const JenningsBasis& b);

/// Explicit bases of ZS^1 and ZS^2, and Soc^2 <= Z.
std::vector<CheckResult> verify_zs12_explicit(const JenningsBasis& b);

/// dim ZS^2 = 1 + r_1.
CheckResult verify_okuyama(const JenningsBasis& b);

/// dim ZS^n <= dim A - dim J^n for every n.
CheckResult verify_otokita(const Algebra& a);

/// dim ZS^n(A) = dim ZS^n(M_k(A)) for every n.
CheckResult verify_morita(const AlgebraPtr& a, std::size_t k);

struct ScanResult {
  CheckResult result;
  std::vector<std::size_t> failing;  // n where monomials in ZS^n do not span it
};

/// For n = 1..LL, whether the Jennings monomials lying in ZS^n span it.
/// Non-spanning is a finding.
ScanResult jennings_spanning_scan(const JenningsBasis& b);

}  // namespace zsalg
