#include "pillow/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace pillow {

namespace {

using Json = nlohmann::ordered_json;

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : Json(nullptr);
}

Json record_json(const SlopeRecord& r) {
  Json j;
  j["class"] = r.slope_class;
  j["beta_word"] = r.beta_word;
  j["prefix_ok"] = optional_json(r.prefix_ok, [](bool b) { return Json(b); });
  j["obstruction"] = optional_json(r.obstruction, [](bool b) { return Json(b); });
  j["cancellation"] = optional_json(r.cancellation, [](const CancellationRecord& c) {
    Json o;
    o["interior_depth"] = c.interior_depth;
    o["si_cancels"] = c.si_cancels;
    o["complementary_depth"] = c.complementary_depth;
    return o;
  });
  j["surgered_word"] = optional_json(r.surgered_word, [](const std::string& s) { return Json(s); });
  j["oracle"] = optional_json(r.oracle, [](const OracleRecord& o) {
    Json v;
    v["verdict"] = o.partner_found ? "partner" : "none within bound";
    v["expected"] = o.expected ? "partner" : "none";
    v["bound"] = o.bound;
    v["witness"] = o.witness;
    return v;
  });
  Json claims = Json::object();
  for (const auto& [name, pass] : r.claims) claims[name] = pass ? "pass" : "fail";
  j["claims"] = std::move(claims);
  return j;
}

template <class T, class F>
std::optional<T> optional_from(const Json& j, F&& f) {
  if (j.is_null()) return std::nullopt;
  return f(j);
}

SlopeRecord record_from(const std::string& key, const Json& j) {
  SlopeRecord r;
  r.slope = Slope::parse(key);
  r.slope_class = j.at("class").get<std::string>();
  r.beta_word = j.at("beta_word").get<std::string>();
  r.prefix_ok = optional_from<bool>(j.at("prefix_ok"), [](const Json& v) { return v.get<bool>(); });
  r.obstruction = optional_from<bool>(j.at("obstruction"), [](const Json& v) { return v.get<bool>(); });
  r.cancellation = optional_from<CancellationRecord>(j.at("cancellation"), [](const Json& v) {
    return CancellationRecord{v.at("interior_depth").get<int>(), v.at("si_cancels").get<bool>(),
                              v.at("complementary_depth").get<int>()};
  });
  r.surgered_word = optional_from<std::string>(j.at("surgered_word"), [](const Json& v) { return v.get<std::string>(); });
  r.oracle = optional_from<OracleRecord>(j.at("oracle"), [](const Json& v) {
    return OracleRecord{v.at("verdict").get<std::string>() == "partner", v.at("expected").get<std::string>() == "partner",
                        v.at("bound").get<int>(), v.at("witness").get<std::string>()};
  });
  for (const auto& [name, verdict] : j.at("claims").items()) r.claims[name] = verdict.get<std::string>() == "pass";
  return r;
}

std::string na(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; }

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  Json j;
  Json params;
  params["q_max"] = r.parameters.q_max;
  params["oracle_bound"] = r.parameters.oracle_bound;
  Json sample = Json::array();
  for (const auto& s : r.parameters.oracle_sample) sample.push_back(s.str());
  params["oracle_sample"] = std::move(sample);
  j["parameters"] = std::move(params);

  Json records = Json::object();
  for (const auto& rec : r.records) records[rec.slope.str()] = record_json(rec);
  j["records"] = std::move(records);

  Json summary;
  summary["slopes"] = r.summary.slopes;
  Json claims = Json::object();
  for (const auto& [name, t] : r.summary.claims) claims[name] = {{"checked", t.checked}, {"passed", t.passed}};
  summary["claims"] = std::move(claims);
  summary["failures"] = r.summary.failures;
  summary["all_pass"] = r.all_pass();
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    VerificationReport r;
    const Json& params = j.at("parameters");
    r.parameters.q_max = params.at("q_max").get<std::int64_t>();
    r.parameters.oracle_bound = params.at("oracle_bound").get<int>();
    for (const auto& s : params.at("oracle_sample")) r.parameters.oracle_sample.push_back(Slope::parse(s.get<std::string>()));
    for (const auto& [key, rec] : j.at("records").items()) r.records.push_back(record_from(key, rec));
    const Json& summary = j.at("summary");
    r.summary.slopes = summary.at("slopes").get<std::int64_t>();
    for (const auto& [name, t] : summary.at("claims").items())
      r.summary.claims[name] = {t.at("checked").get<std::int64_t>(), t.at("passed").get<std::int64_t>()};
    r.summary.failures = summary.at("failures").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  } catch (const SlopeError& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream o;
  o << "slope,class,beta_word,prefix_ok,obstruction,interior_depth,si_cancels,complementary_depth,surgered_word,"
       "oracle_verdict,oracle_bound,failed_claims\n";
  for (const auto& rec : r.records) {
    std::string failed;
    for (const auto& [name, pass] : rec.claims)
      if (!pass) failed += (failed.empty() ? "" : ";") + name;
    o << rec.slope.str() << ',' << rec.slope_class << ',' << rec.beta_word << ',' << na(rec.prefix_ok) << ','
      << na(rec.obstruction) << ',';
    if (rec.cancellation)
      o << rec.cancellation->interior_depth << ',' << (rec.cancellation->si_cancels ? "true" : "false") << ','
        << rec.cancellation->complementary_depth << ',';
    else
      o << "n/a,n/a,n/a,";
    o << rec.surgered_word.value_or("n/a") << ',';
    if (rec.oracle)
      o << (rec.oracle->partner_found ? "partner" : "none within bound") << ',' << rec.oracle->bound << ',';
    else
      o << "n/a,n/a,";
    o << failed << '\n';
  }
  return o.str();
}

}  // namespace pillow
