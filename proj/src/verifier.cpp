#include "pillow/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace pillow {

std::string claim_name(Claim c) {
  switch (c) {
    case Claim::classification: return "classification";
    case Claim::structure: return "structure";
    case Claim::prefix: return "prefix";
    case Claim::special_word: return "special_word";
    case Claim::obstruction: return "obstruction";
    case Claim::cancellation: return "cancellation";
    case Claim::surgery: return "surgery";
    case Claim::oracle: return "oracle";
  }
  return "?";
}

Claim parse_claim(std::string_view name) {
  for (Claim c : kAllClaims)
    if (claim_name(c) == name) return c;
  throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

namespace {

bool is_infinity(const SlopeClass& c) { return std::holds_alternative<slope_class::Infinity>(c); }
bool is_reciprocal(const SlopeClass& c) { return std::holds_alternative<slope_class::ReciprocalEven>(c); }
bool is_gt1(const SlopeClass& c) { return std::holds_alternative<slope_class::GreaterThanOne>(c); }
bool is_half(const SlopeClass& c) { return std::holds_alternative<slope_class::BetweenHalfAndOne>(c); }

/// Free reduction followed by stripping inverse letter pairs at the two ends.
Word cyclic_reduce(const Word& w) {
  const auto& ls = free_reduce(w).letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i].cancels(ls[j - 1])) ++i, --j;
  return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(i), ls.begin() + static_cast<std::ptrdiff_t>(j)));
}

/// Equal as cyclic words up to rotation and inversion.
bool conjugate_or_inverse(const Word& a, const Word& b) {
  const Word ra = cyclic_reduce(a), rb = cyclic_reduce(b);
  if (ra.size() != rb.size()) return false;
  if (ra.empty()) return true;
  for (const Word& cand : {rb, rb.inverse()}) {
    const auto& cl = cand.letters();
    for (std::size_t r = 0; r < cl.size(); ++r) {
      bool same = true;
      for (std::size_t t = 0; t < cl.size() && same; ++t) same = ra[t] == cl[(r + t) % cl.size()];
      if (same) return true;
    }
  }
  return false;
}

struct Context {
  Slope s;
  SlopeClass cls;
  Word beta;
  int bound;
  SlopeRecord* record;  // filled as a side effect when non-null
};

ClaimResult result(Claim c, const Context& ctx, bool pass, std::string evidence) {
  return {c, ctx.s, pass, std::move(evidence)};
}

ClaimResult check_classification(const Context& ctx) {
  const SlopeClass& c = ctx.cls;
  const std::int64_t p = ctx.s.p(), q = ctx.s.q();
  bool ok = false;
  if (is_infinity(c)) ok = ctx.s.is_infinite();
  else if (is_gt1(c)) ok = p > q;
  else if (is_half(c)) ok = q < 2 * p && p < q;
  else if (auto r = std::get_if<slope_class::ReciprocalEven>(&c)) ok = p == 1 && q == 2 * r->k && r->k >= 1;
  else if (auto g = as_general(c)) {
    const std::int64_t lo = 4 * g->k + g->subcase - 1;
    ok = p > 1 && 2 * p < q && g->k >= 1 && g->subcase >= 1 && g->subcase <= 4 && lo * p < 2 * q &&
         2 * q < (lo + 1) * p && ((g->subcase <= 2) == (g->gcase == GeneralCase::a));
  }
  return result(Claim::classification, ctx, ok, describe(c));
}

ClaimResult check_structure(const Context& ctx) {
  const std::int64_t p = ctx.s.p(), q = ctx.s.q();
  const auto& ls = ctx.beta.letters();
  bool ok = static_cast<std::int64_t>(ls.size()) == p + q - 2;
  std::string why = ok ? "" : "length " + std::to_string(ls.size());
  int want_sign = 1;
  Gen next_vertical = Gen::b, next_horizontal = Gen::x;
  for (std::size_t i = 0; i < ls.size() && ok; ++i) {
    const Letter l = ls[i];
    if (l.sign != want_sign) ok = false, why = "sign at " + std::to_string(i);
    const bool vertical = l.gen == Gen::b || l.gen == Gen::z;
    Gen& expect = vertical ? next_vertical : next_horizontal;
    if (l.gen != expect) ok = false, why = "letter at " + std::to_string(i);
    expect = vertical ? (expect == Gen::b ? Gen::z : Gen::b) : (expect == Gen::x ? Gen::y : Gen::x);
    want_sign = -want_sign;
  }
  const ChordMap map = build_alpha_map(ctx.s);
  const int chi = map.euler_characteristic(), mult = map.total_multiplicity();
  if (ok && (chi != 2 || mult != 6)) ok = false, why = "map";
  return result(Claim::structure, ctx, ok,
                "len=" + std::to_string(ls.size()) + " chi=" + std::to_string(chi) + " punctures=" +
                    std::to_string(mult) + (why.empty() ? "" : " bad " + why));
}

ClaimResult check_prefix(const Context& ctx) {
  const auto* g = as_general(ctx.cls);
  const Word w = expected_prefix(g->subcase, g->k);
  const bool ok = has_prefix(ctx.beta, w);
  if (ctx.record) ctx.record->prefix_ok = ok;
  return result(Claim::prefix, ctx, ok, "w" + std::to_string(g->subcase) + "(k=" + std::to_string(g->k) + ")=" + w.str());
}

ClaimResult check_special_word(const Context& ctx) {
  if (is_infinity(ctx.cls)) {
    const bool ok = ctx.beta == Word::parse("z");
    return result(Claim::special_word, ctx, ok, ctx.beta.str());
  }
  const Word w = Word::parse("bx'");
  return result(Claim::special_word, ctx, has_prefix(ctx.beta, w), "begins " + w.str());
}

ClaimResult check_obstruction(const Context& ctx) {
  const Word a = alpha_word(ctx.s);
  const bool present = obstruction_present(a);
  if (ctx.record) ctx.record->obstruction = present;
  const bool expected = !as_general(ctx.cls);
  return result(Claim::obstruction, ctx, present == expected,
                std::string(present ? "present" : "absent") + " in " + a.str());
}

ClaimResult check_cancellation(const Context& ctx) {
  const auto* g = as_general(ctx.cls);
  const PlanarMap pm = build_planar_map(ctx.s);
  const CancellationProfile prof = region_cancellation_analysis(pm);
  if (ctx.record) ctx.record->cancellation = CancellationRecord{prof.interior_depth, prof.crossing_si_cancels, prof.complementary_depth};
  const bool ok = prof.interior_depth == g->k && prof.complementary_depth == g->k && !prof.crossing_si_cancels;
  return result(Claim::cancellation, ctx, ok,
                "interior " + prof.interior_witness.str() + " depth " + std::to_string(prof.interior_depth) +
                    "; s_i " + prof.si_witness.str() + (prof.crossing_si_cancels ? " cancels" : " reduced") +
                    "; complementary " + prof.complementary_witness.str() + " depth " +
                    std::to_string(prof.complementary_depth));
}

ClaimResult check_surgery(const Context& ctx) {
  const Configuration config = surgered_configuration(ctx.s);
  const Word w = config.obstacles.front().word;
  if (ctx.record) ctx.record->surgered_word = w.str();
  const Word xyz = w.xyz();
  const bool ok = config.map.euler_characteristic() == 2 && !cyclic_reduce(xyz).empty() &&
                  !conjugate_or_inverse(xyz, disk_boundary_p().word.xyz()) &&
                  !conjugate_or_inverse(xyz, disk_boundary_p_prime().word.xyz());
  return result(Claim::surgery, ctx, ok, w.str());
}

ClaimResult check_oracle(const Context& ctx) {
  const bool expected = is_infinity(ctx.cls) || is_reciprocal(ctx.cls);
  OracleRecord rec{false, expected, ctx.bound, ""};
  std::string evidence;
  bool ok = false;
  try {
    const auto found = exists_trivial_partner(ctx.s, ctx.bound);
    rec.partner_found = found.has_value();
    if (found) rec.witness = found->word.str();
    ok = rec.partner_found == expected;
    evidence = found ? "partner " + found->word.str() : "none within bound " + std::to_string(ctx.bound);
  } catch (const BoundTooLarge& e) {
    evidence = e.what();
  }
  if (ctx.record) ctx.record->oracle = rec;
  return result(Claim::oracle, ctx, ok, evidence);
}

ClaimResult run_claim(Claim c, const Context& ctx) {
  switch (c) {
    case Claim::classification: return check_classification(ctx);
    case Claim::structure: return check_structure(ctx);
    case Claim::prefix: return check_prefix(ctx);
    case Claim::special_word: return check_special_word(ctx);
    case Claim::obstruction: return check_obstruction(ctx);
    case Claim::cancellation: return check_cancellation(ctx);
    case Claim::surgery: return check_surgery(ctx);
    case Claim::oracle: return check_oracle(ctx);
  }
  throw std::logic_error("run_claim: unknown claim");
}

}  // namespace

bool claim_applies(Claim c, const SlopeClass& cls) {
  switch (c) {
    case Claim::classification:
    case Claim::oracle: return true;
    case Claim::structure: return !is_infinity(cls);
    case Claim::prefix:
    case Claim::cancellation: return as_general(cls) != nullptr;
    case Claim::special_word: return is_infinity(cls) || is_half(cls);
    case Claim::obstruction: return is_gt1(cls) || is_half(cls) || as_general(cls);
    case Claim::surgery: return is_infinity(cls) || is_reciprocal(cls);
  }
  return false;
}

ClaimResult check_claim(Claim c, const Slope& s, int oracle_bound) {
  const SlopeClass cls = classify(s);
  if (!claim_applies(c, cls))
    throw ClaimNotApplicable("claim " + claim_name(c) + " not applicable to class " + describe(cls) + " of " + s.str());
  return run_claim(c, Context{s, cls, beta_word(s), oracle_bound, nullptr});
}

std::vector<Slope> default_oracle_sample() {
  std::vector<Slope> out{Slope::infinity()};
  for (const char* t : {"1/2", "1/4", "1/6", "3/8", "5/12", "3/10", "5/18", "5/22"}) out.push_back(Slope::parse(t));
  return out;
}

SlopeRecord evaluate_slope(const Slope& s, int oracle_bound, bool run_oracle) {
  SlopeRecord rec;
  rec.slope = s;
  const SlopeClass cls = classify(s);
  rec.slope_class = describe(cls);
  const Word beta = beta_word(s);
  rec.beta_word = beta.str();
  const Context ctx{s, cls, beta, oracle_bound, &rec};
  for (Claim c : kAllClaims) {
    if (!claim_applies(c, cls) || (c == Claim::oracle && !run_oracle)) continue;
    bool pass = false;
    try {
      pass = run_claim(c, ctx).pass;
    } catch (const std::exception&) {
      pass = false;  // recorded as a failure of this claim
    }
    rec.claims[claim_name(c)] = pass;
  }
  return rec;
}

ReportSummary summarize(const std::vector<SlopeRecord>& records) {
  ReportSummary sum;
  sum.slopes = static_cast<std::int64_t>(records.size());
  for (Claim c : kAllClaims) sum.claims[claim_name(c)];
  for (const auto& r : records)
    for (const auto& [name, pass] : r.claims) {
      auto& t = sum.claims[name];
      ++t.checked;
      if (pass) ++t.passed;
      else sum.failures.push_back(r.slope.str() + ":" + name);
    }
  return sum;
}

VerificationReport sweep(std::int64_t q_max, int oracle_bound, std::vector<Slope> oracle_sample, unsigned threads) {
  if (oracle_bound < 1) throw std::invalid_argument("sweep: oracle bound must be >= 1");
  std::vector<Slope> slopes = admissible_slopes(q_max);
  std::sort(oracle_sample.begin(), oracle_sample.end());
  oracle_sample.erase(std::unique(oracle_sample.begin(), oracle_sample.end()), oracle_sample.end());
  for (const auto& s : oracle_sample)
    if (!std::binary_search(slopes.begin(), slopes.end(), s)) slopes.push_back(s);
  std::sort(slopes.begin(), slopes.end());

  VerificationReport report;
  report.parameters = {q_max, oracle_bound, oracle_sample};
  report.records.resize(slopes.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(slopes.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < slopes.size();) {
      const bool sampled = std::binary_search(oracle_sample.begin(), oracle_sample.end(), slopes[i]);
      report.records[i] = evaluate_slope(slopes[i], oracle_bound, sampled);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  report.summary = summarize(report.records);
  return report;
}

}  // namespace pillow
