#pragma once

// JSON and CSV forms of rationals, sets, schedules, machines and reports.
// Rationals are always {"num": "...", "den": "..."} objects on output; input
// also accepts "num/den" strings.  Object keys are emitted sorted, so equal
// reports serialize to identical bytes.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/machine.hpp"
#include "lcelab/natural_set.hpp"
#include "lcelab/rational.hpp"
#include "lcelab/reducibility.hpp"
#include "lcelab/speedability.hpp"
#include "lcelab/uniformize.hpp"

namespace lcelab::io {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) {
  return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline Json to_json(const std::optional<Rational>& q) { return q ? to_json(*q) : Json(nullptr); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    auto part = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    return parse_rational(part(j.at("num")) + "/" + part(j.at("den")));
  }
  throw ConfigError("expected a rational ({\"num\",\"den\"} or \"num/den\"), got " + j.dump());
}

inline std::uint64_t natural_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ConfigError(std::string(what) + ": expected a natural number, got " + j.dump());
  return j.get<std::uint64_t>();
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

/// {kind: "evens" | "odds" | "naturals" | "squares" | "powers" | "explicit", elements?, tail_from?}
inline NaturalSet set_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "evens") return sets::evens();
  if (kind == "odds") return sets::odds();
  if (kind == "naturals") return sets::naturals();
  if (kind == "squares") return sets::squares();
  if (kind == "powers") return sets::powers_of_two();
  if (kind == "explicit") {
    std::vector<std::uint64_t> elements;
    for (const auto& e : field(j, "elements")) elements.push_back(natural_from_json(e, "elements"));
    return sets::explicit_set(std::move(elements), natural_from_json(field(j, "tail_from"), "tail_from"));
  }
  throw ConfigError("unknown set kind \"" + kind + "\"");
}

/// {kind: "geometric", ratio} | {kind: "alternating"} | {kind: "double_exponential"} | {kind: "explicit", gaps}
inline GapSchedule schedule_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "geometric") return schedules::geometric(rational_from_json(field(j, "ratio")));
  if (kind == "alternating") return schedules::alternating();
  if (kind == "double_exponential") return schedules::double_exponential();
  if (kind == "explicit") {
    std::vector<Rational> gaps;
    for (const auto& g : field(j, "gaps")) gaps.push_back(rational_from_json(g));
    return schedules::explicit_gaps(std::move(gaps));
  }
  throw ConfigError("unknown schedule kind \"" + kind + "\"");
}

/// {name, pad_length?, entries: [{code, output, stage?}]}
inline PrefixMachine machine_from_json(const Json& j) {
  std::vector<PrefixMachine::Entry> entries;
  for (const auto& e : field(j, "entries")) {
    PrefixMachine::Entry entry{field(e, "code").get<std::string>(), field(e, "output").get<std::string>(), 0};
    if (e.contains("stage")) entry.stage = natural_from_json(e.at("stage"), "stage");
    entries.push_back(std::move(entry));
  }
  std::optional<std::uint64_t> pad;
  if (j.contains("pad_length") && !j.at("pad_length").is_null()) pad = natural_from_json(j.at("pad_length"), "pad_length");
  return PrefixMachine(j.value("name", std::string("machine")), std::move(entries), pad);
}

inline Json to_json(const PrefixMachine& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back({{"code", e.code}, {"output", e.output}, {"stage", e.stage}});
  Json j{{"name", m.name()}, {"entries", std::move(entries)}};
  if (m.pad_length()) j["pad_length"] = *m.pad_length();
  return j;
}

inline Json to_json(const ViolationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"q", to_json(v.q)}, {"reason", to_string(v.reason)}, {"phi_q", to_json(v.phi_q)},
                          {"bound", to_json(v.bound)}});
  return Json{{"witness", r.witness},
              {"variant", to_string(r.variant)},
              {"samples_checked", r.samples_checked},
              {"skipped", r.skipped},
              {"violations", std::move(violations)},
              {"max_ratio_seen", to_json(r.max_ratio_seen)},
              {"verdict", r.passed() ? "no violation found" : "violated"}};
}

inline Json to_json(const RatioTrace& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"n", e.n}, {"ratio", to_json(e.ratio)}, {"running_min", to_json(e.running_min)}});
  return Json{{"entries", std::move(entries)},
              {"running_min", t.entries.empty() ? Json(nullptr) : to_json(t.running_min())}};
}

/// n,ratio_num,ratio_den,running_min_num,running_min_den
inline std::string to_csv(const RatioTrace& t) {
  std::string out = "n,ratio_num,ratio_den,running_min_num,running_min_den\n";
  for (const auto& e : t.entries) {
    out += std::to_string(e.n) + "," + numerator(e.ratio).str() + "," + denominator(e.ratio).str() + "," +
           numerator(e.running_min).str() + "," + denominator(e.running_min).str() + "\n";
  }
  return out;
}

inline Json to_json(const TotalSpeedupReport& r) {
  Json probes = Json::array();
  for (const auto& q : r.probes) probes.push_back(to_json(q));
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"q", to_json(v.q)}, {"failure", to_string(v.failure)}, {"g_q", to_json(v.g_q)}});
  return Json{{"rho", to_json(r.rho)},
              {"probes", std::move(probes)},
              {"trace", to_json(r.trace)},
              {"violations", std::move(violations)},
              {"verdict", r.evidence() ? "evidence" : "no evidence"}};
}

inline Json to_json(const UschReport& r) {
  Json j{{"constant", r.constant}, {"lengths_checked", r.lengths_checked}, {"verdict", r.passed() ? "pass" : "fail"}};
  if (r.first_failure) {
    j["first_failure"] = {{"n", r.first_failure->n},
                          {"k_a", r.first_failure->k_a ? Json(*r.first_failure->k_a) : Json("infinity")},
                          {"k_b", r.first_failure->k_b}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

}  // namespace lcelab::io
