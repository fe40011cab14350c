// pillow: classify slopes, print crossing words, run the disk checks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pillow/oracle.hpp"
#include "pillow/pillowcase.hpp"
#include "pillow/report_io.hpp"
#include "pillow/verifier.hpp"

using namespace pillow;

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Slope parse_slope(const std::string& text) {
  try {
    return Slope::parse(text);
  } catch (const SlopeError& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
  if (!out) throw UsageError("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_summary(std::ostream& o, const VerificationReport& r) {
  o << "slopes: " << r.summary.slopes << " (q <= " << r.parameters.q_max << ", oracle bound "
    << r.parameters.oracle_bound << ")\n";
  for (const auto& [name, t] : r.summary.claims)
    o << "  " << name << ": " << t.passed << "/" << t.checked << " pass\n";
  o << "failures: " << r.summary.failures.size() << "\n";
  for (const auto& f : r.summary.failures) o << "  " << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope classification, crossing words and disk checks on the pillowcase"};
  app.require_subcommand(1);

  std::string slope_text, out_path, in_path, format = "text";
  int bound = kDefaultOracleBound;
  std::int64_t q_max = 400;
  unsigned threads = 0;
  bool alpha = false;
  std::string json_path;

  auto* classify_cmd = app.add_subcommand("classify", "print the class of a slope");
  classify_cmd->add_option("slope", slope_text, "p/q or inf")->required();

  auto* word_cmd = app.add_subcommand("word", "print the crossing word of the arc");
  word_cmd->add_option("slope", slope_text, "p/q or inf")->required();
  word_cmd->add_flag("--alpha", alpha, "print the word of the closed-up arc instead");

  auto* obstruct_cmd = app.add_subcommand("obstruct", "test the x-y, y-z, z-x obstruction on the closed-up arc");
  obstruct_cmd->add_option("slope", slope_text, "p/q")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "search for a disjoint curve with trivial word");
  oracle_cmd->add_option("slope", slope_text, "p/q or inf")->required();
  oracle_cmd->add_option("--bound", bound, "maximum weight per edge")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "sweep every admissible slope and write a JSON report");
  verify_cmd->add_option("--qmax", q_max, "largest denominator (even)");
  verify_cmd->add_option("--bound", bound, "oracle bound")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path, "report file (default stdout)");
  verify_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");

  auto* render_cmd = app.add_subcommand("render", "draw the arc as SVG");
  render_cmd->add_option("slope", slope_text, "p/q or inf")->required();
  render_cmd->add_option("--out", out_path, "SVG file")->required();
  render_cmd->add_option("--json", json_path, "also write crossing data as JSON");

  auto* report_cmd = app.add_subcommand("report", "summarize a saved report");
  report_cmd->add_option("--in", in_path, "report JSON")->required();
  report_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) {
      std::cout << describe(classify(parse_slope(slope_text))) << "\n";
      return kOk;
    }
    if (*word_cmd) {
      const Slope s = parse_slope(slope_text);
      if (alpha && s.is_infinite()) throw UsageError("the infinite slope has no closed-up arc");
      std::cout << (alpha ? alpha_word(s) : beta_word(s)).str() << "\n";
      return kOk;
    }
    if (*obstruct_cmd) {
      const Slope s = parse_slope(slope_text);
      if (s.is_infinite()) throw UsageError("the infinite slope has no closed-up arc");
      const Word w = alpha_word(s);
      const bool present = obstruction_present(w);
      std::cout << "alpha " << w.str() << "\n"
                << "obstruction " << (present ? "present" : "absent") << "\n";
      return kOk;
    }
    if (*oracle_cmd) {
      const Slope s = parse_slope(slope_text);
      const ClaimResult r = check_claim(Claim::oracle, s, bound);
      std::cout << oracle_configuration(s).name << ": " << r.evidence << "\n";
      return r.pass ? kOk : kClaimFailure;
    }
    if (*verify_cmd) {
      if (q_max < 2 || q_max % 2 != 0) throw UsageError("--qmax must be even and >= 2");
      const VerificationReport r = sweep(q_max, bound, default_oracle_sample(), threads);
      const std::string json = report_to_json(r);
      if (out_path.empty()) std::cout << json;
      else write_file(out_path, json);
      print_summary(std::cerr, r);
      return r.all_pass() ? kOk : kClaimFailure;
    }
    if (*render_cmd) {
      const Slope s = parse_slope(slope_text);
      write_file(out_path, render_svg(s));
      if (!json_path.empty()) write_file(json_path, crossings_json(s) + "\n");
      return kOk;
    }
    if (*report_cmd) {
      const VerificationReport r = report_from_json(read_file(in_path));
      if (format == "csv") std::cout << report_to_csv(r);
      else if (format == "json") std::cout << report_to_json(r);
      else print_summary(std::cout, r);
      return r.all_pass() ? kOk : kClaimFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
