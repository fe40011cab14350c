#pragma once

// Per-slope checks of the case analysis and the sweep that aggregates them.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pillow/oracle.hpp"
#include "pillow/slope.hpp"

namespace pillow {

enum class Claim {
  classification,  // exactly one class; General inequalities hold for (subcase, k)
  structure,       // |beta| = p+q-2, letters alternate; alpha map has chi 2, 6 punctures
  prefix,          // General: beta begins with w_i(k)
  special_word,    // infinity: beta = z; (1/2, 1): beta begins with b x'
  obstruction,     // s > 1 and (1/2, 1): present; General: absent
  cancellation,    // General: depths k, k and no cancellation through s_i
  surgery,         // infinity, 1/(2k): surgered curve is essential and differs from dD, dD'
  oracle,          // sampled slopes: partner iff infinity or 1/(2k)
};

inline constexpr std::array<Claim, 8> kAllClaims = {Claim::classification, Claim::structure,   Claim::prefix,
                                                    Claim::special_word,   Claim::obstruction, Claim::cancellation,
                                                    Claim::surgery,        Claim::oracle};

std::string claim_name(Claim c);
/// Throws std::invalid_argument for unknown names.
Claim parse_claim(std::string_view name);

class ClaimNotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Whether a claim is checked for slopes of this class (the oracle claim
/// applies to every class; the sweep runs it only on sampled slopes).
bool claim_applies(Claim c, const SlopeClass& cls);

struct ClaimResult {
  Claim claim = Claim::classification;
  Slope slope;
  bool pass = false;
  std::string evidence;  // word, prefix, profile or curve behind the verdict
};

/// Throws ClaimNotApplicable when the claim does not apply to s's class.
ClaimResult check_claim(Claim c, const Slope& s, int oracle_bound = kDefaultOracleBound);

struct CancellationRecord {
  int interior_depth = 0;
  bool si_cancels = false;
  int complementary_depth = 0;
  friend bool operator==(const CancellationRecord&, const CancellationRecord&) = default;
};

struct OracleRecord {
  bool partner_found = false;
  bool expected = false;
  int bound = 0;
  std::string witness;  // word of the partner curve, or "" for none within bound
  friend bool operator==(const OracleRecord&, const OracleRecord&) = default;
};

/// One slope of the sweep. Optional fields are n/a for the slope's class.
struct SlopeRecord {
  Slope slope;
  std::string slope_class;  // describe()
  std::string beta_word;
  std::optional<bool> prefix_ok;
  std::optional<bool> obstruction;
  std::optional<CancellationRecord> cancellation;
  std::optional<std::string> surgered_word;
  std::optional<OracleRecord> oracle;
  std::map<std::string, bool> claims;  // claim name -> pass, for every claim checked
  friend bool operator==(const SlopeRecord&, const SlopeRecord&) = default;
};

struct ClaimTally {
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  friend bool operator==(const ClaimTally&, const ClaimTally&) = default;
};

struct ReportSummary {
  std::int64_t slopes = 0;
  std::map<std::string, ClaimTally> claims;
  std::vector<std::string> failures;  // "p/q:claim", canonical order
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct SweepParameters {
  std::int64_t q_max = 2;
  int oracle_bound = kDefaultOracleBound;
  std::vector<Slope> oracle_sample;
  friend bool operator==(const SweepParameters&, const SweepParameters&) = default;
};

struct VerificationReport {
  SweepParameters parameters;
  std::vector<SlopeRecord> records;  // canonical slope order
  ReportSummary summary;
  bool all_pass() const { return summary.failures.empty(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Infinity, 1/2, 1/4, 1/6, 3/8, 5/12, 3/10, 5/18, 5/22.
std::vector<Slope> default_oracle_sample();

/// Every claim applicable to s (the oracle only when `run_oracle`).
SlopeRecord evaluate_slope(const Slope& s, int oracle_bound, bool run_oracle);

ReportSummary summarize(const std::vector<SlopeRecord>& records);

/// Checks every admissible slope with q <= q_max. Sampled slopes beyond
/// q_max are added. Per-slope failures are recorded, never thrown; `threads`
/// = 0 uses the hardware concurrency.
VerificationReport sweep(std::int64_t q_max, int oracle_bound = kDefaultOracleBound,
                         std::vector<Slope> oracle_sample = default_oracle_sample(), unsigned threads = 0);

}  // namespace pillow
