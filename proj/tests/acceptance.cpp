// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "pillow/oracle.hpp"
#include "pillow/pillowcase.hpp"
#include "pillow/verifier.hpp"

using namespace pillow;

namespace {

constexpr std::int64_t kQMax = 400;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<Slope> finite_slopes() {
  std::vector<Slope> out;
  for (const auto& s : admissible_slopes(kQMax))
    if (!s.is_infinite()) out.push_back(s);
  return out;
}

Outcome prefix_sweep() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& s : finite_slopes()) {
    const SlopeClass c = classify(s);
    const auto* g = as_general(c);
    if (!g) continue;
    ++n;
    if (!has_prefix(beta_word(s), expected_prefix(g->subcase, g->k))) o.fail(s.str() + " lacks its prefix");
  }
  if (o.pass) o.detail = std::to_string(n) + " General slopes begin with w_i(k)";
  return o;
}

Outcome classification_totality() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& s : admissible_slopes(kQMax)) {
    ++n;
    const SlopeClass c = classify(s);
    if (s.is_infinite()) {
      if (!std::holds_alternative<slope_class::Infinity>(c)) o.fail("inf misclassified");
      continue;
    }
    const std::int64_t p = s.p(), q = s.q();
    // Independent scan over k and every inequality.
    int hits = 0;
    slope_class::General scanned;
    if (p > 1 && 2 * p < q) {
      for (std::int64_t k = 1; 2 * k * p < q; ++k)
        for (int i = 1; i <= 4; ++i)
          if ((4 * k + i - 1) * p < 2 * q && 2 * q < (4 * k + i) * p) {
            ++hits;
            const bool case_a = 2 * k * p < q && q < (2 * k + 1) * p;
            scanned = {case_a ? GeneralCase::a : GeneralCase::b, i, k};
          }
      if (hits != 1) o.fail(s.str() + ": " + std::to_string(hits) + " (subcase, k) pairs");
      const auto* g = as_general(c);
      if (!g || !(*g == scanned)) o.fail(s.str() + ": scan disagrees with " + describe(c));
      if (g && (g->subcase <= 2) != (g->gcase == GeneralCase::a)) o.fail(s.str() + ": case/subcase mismatch");
    } else {
      const bool ok = (p > q && std::holds_alternative<slope_class::GreaterThanOne>(c)) ||
                      (p < q && 2 * p > q && std::holds_alternative<slope_class::BetweenHalfAndOne>(c)) ||
                      (p == 1 && c == SlopeClass{slope_class::ReciprocalEven{q / 2}});
      if (!ok) o.fail(s.str() + " misclassified as " + describe(c));
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " slopes, one class each, scan agrees";
  return o;
}

Outcome special_classes() {
  Outcome o;
  if (!(beta_word(Slope::infinity()) == Word::parse("z"))) o.fail("beta(inf) != z");
  std::size_t half = 0, gt1 = 0, general = 0;
  const Word bx = Word::parse("bx'");
  for (const auto& s : finite_slopes()) {
    const SlopeClass c = classify(s);
    const bool is_half = std::holds_alternative<slope_class::BetweenHalfAndOne>(c);
    const bool is_gt1 = std::holds_alternative<slope_class::GreaterThanOne>(c);
    const bool is_general = as_general(c) != nullptr;
    if (is_half && !has_prefix(beta_word(s), bx)) o.fail(s.str() + " does not begin with bx'");
    if (!is_half && !is_gt1 && !is_general) continue;
    const bool present = obstruction_present(alpha_word(s));
    if ((is_half || is_gt1) && !present) o.fail(s.str() + " has no obstruction");
    if (is_general && present) o.fail(s.str() + " (General) shows the obstruction");
    half += is_half;
    gt1 += is_gt1;
    general += is_general;
  }
  if (o.pass)
    o.detail = "beta(inf)=z; " + std::to_string(half) + " in (1/2,1), " + std::to_string(gt1) + " above 1, " +
               std::to_string(general) + " General";
  return o;
}

Outcome cancellation_profile() {
  Outcome o;
  std::string seen;
  for (const char* t : {"3/8", "5/12", "3/10", "5/18", "5/22"}) {
    const Slope s = Slope::parse(t);
    const SlopeClass c = classify(s);
    const auto* g = as_general(c);
    const CancellationProfile p = region_cancellation_analysis(build_planar_map(s));
    if (p.interior_depth != g->k || p.complementary_depth != g->k || p.crossing_si_cancels)
      o.fail(std::string(t) + ": depths " + std::to_string(p.interior_depth) + "/" +
             std::to_string(p.complementary_depth) + (p.crossing_si_cancels ? " with" : " without") +
             " s_i cancellation, k=" + std::to_string(g->k));
    seen += std::string(seen.empty() ? "" : "; ") + t + " " + p.interior_witness.str() + " " + p.si_witness.str() +
            " " + p.complementary_witness.str();
  }
  if (o.pass) o.detail = seen;
  return o;
}

Outcome oracle_negative() {
  Outcome o;
  std::string seen;
  for (const char* t : {"3/8", "5/12", "3/10", "5/18", "5/22"}) {
    EnumerationStats st;
    const Slope s = Slope::parse(t);
    try {
      const auto curves = enumerate_disjoint_curves(oracle_configuration(s), kDefaultOracleBound, kDefaultNodeCap, &st);
      for (const auto& v : curves)
        if (v.trivial_word && v.essential) o.fail(std::string(t) + ": trivial partner " + v.word.str());
      seen += std::string(seen.empty() ? "" : ", ") + t + " none (" + std::to_string(curves.size()) + " curves)";
    } catch (const BoundTooLarge& e) {
      o.fail(e.what());
    }
  }
  if (o.pass) o.detail = seen + " within bound " + std::to_string(kDefaultOracleBound);
  return o;
}

Outcome oracle_positive() {
  Outcome o;
  std::string seen;
  for (const char* t : {"inf", "1/2", "1/4", "1/6"}) {
    try {
      const auto found = exists_trivial_partner(Slope::parse(t), kDefaultOracleBound);
      if (!found) o.fail(std::string(t) + ": no partner within bound");
      else if (!found->essential || !is_trivial(found->xyz_word)) o.fail(std::string(t) + ": bad partner");
      else seen += std::string(seen.empty() ? "" : ", ") + t + " " + found->word.str();
    } catch (const BoundTooLarge& e) {
      o.fail(e.what());
    }
  }
  if (o.pass) o.detail = "partners " + seen;
  return o;
}

Outcome free_group_laws() {
  Outcome o;
  std::mt19937_64 rng(1018);
  std::uniform_int_distribution<int> len(0, 64), gen(0, 3), sign(0, 1), narrow(0, 1);
  auto random_word = [&](bool two_letters) {
    Word w;
    for (int i = 0, n = len(rng); i < n; ++i)
      w.push_back({two_letters ? (narrow(rng) ? Gen::z : Gen::y) : static_cast<Gen>(gen(rng)), sign(rng) ? 1 : -1});
    return w;
  };
  constexpr int kWords = 20000;
  for (int i = 0; i < kWords; ++i) {
    const Word u = random_word(i % 2 == 0), v = random_word(i % 3 == 0);
    const Word ru = free_reduce(u);
    if (!(free_reduce(ru) == ru)) o.fail("idempotence: " + u.str());
    if (!(free_reduce(concat(u, v)) == free_reduce(concat(ru, free_reduce(v))))) o.fail("congruence: " + u.str());
    if (!is_trivial(concat(u, u.inverse()))) o.fail("inverse: " + u.str());
    if (ru.size() % 2 != u.size() % 2) o.fail("parity: " + u.str());
    if (!nesting_profile(ru).empty()) o.fail("reduced word has a nesting site: " + ru.str());
  }
  if (o.pass) o.detail = std::to_string(kWords) + " random words of length <= 64";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  std::size_t words = 0, maps = 0;
  for (const auto& s : finite_slopes()) {
    const Word w = beta_word(s);
    ++words;
    if (static_cast<std::int64_t>(w.size()) != s.p() + s.q() - 2) o.fail(s.str() + ": length " + std::to_string(w.size()));
    Gen vertical = Gen::b, horizontal = Gen::x;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter l = w[i];
      if (i > 0 && l.sign == w[i - 1].sign) o.fail(s.str() + ": signs do not alternate");
      const bool is_vertical = l.gen == Gen::b || l.gen == Gen::z;
      Gen& expect = is_vertical ? vertical : horizontal;
      if (l.gen != expect) o.fail(s.str() + ": letters do not alternate");
      expect = is_vertical ? (expect == Gen::b ? Gen::z : Gen::b) : (expect == Gen::x ? Gen::y : Gen::x);
    }
    const SlopeClass c = classify(s);
    if (!as_general(c)) continue;
    const PlanarMap pm = build_planar_map(s);
    ++maps;
    if (pm.map.euler_characteristic() != 2) o.fail(s.str() + ": chi " + std::to_string(pm.map.euler_characteristic()));
    if (pm.map.total_multiplicity() != 6) o.fail(s.str() + ": punctures " + std::to_string(pm.map.total_multiplicity()));
  }
  if (o.pass) o.detail = std::to_string(words) + " words, " + std::to_string(maps) + " planar maps";
  return o;
}

std::string run_verify(const std::string& out) {
  const std::string cmd = std::string(PILLOW_CLI) + " verify --qmax 100 --out " + out + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) return "";
  std::ifstream in(out, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const std::string a = run_verify("acceptance_verify_a.json");
  const std::string b = run_verify("acceptance_verify_b.json");
  if (a.empty() || b.empty()) o.fail("verify --qmax 100 did not exit 0");
  else if (a != b) o.fail("reports differ");
  else o.detail = "two reports of " + std::to_string(a.size()) + " bytes are identical";
  std::remove("acceptance_verify_a.json");
  std::remove("acceptance_verify_b.json");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "prefix sweep, q <= 400", 10, prefix_sweep},
      {2, "classification totality, q <= 400", 1, classification_totality},
      {3, "special classes and obstruction, q <= 400", 10, special_classes},
      {4, "cancellation profile", 30, cancellation_profile},
      {5, "oracle finds no partner for General slopes", 300, oracle_negative},
      {6, "oracle finds partners after surgery", 300, oracle_positive},
      {7, "free group laws", 5, free_group_laws},
      {8, "structural invariants, q <= 400", 10, structural_invariants},
      {9, "verify --qmax 100 is deterministic", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget_s);
    const bool slow = secs > c.budget_s;
    const bool pass = o.pass && !slow;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " [" << timing << "]"
              << (slow ? " over budget" : "") << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
