#pragma once

// Gallery configuration: a JSON list of {name, kind, parameters} entries, each
// turned into a validated DeskReal.
//
//   geometric   {limit, ratio?}             a_n = limit (1 - ratio^n), ratio defaults to 1/2
//   set_real    {set}                       bitwise partial sums of 0.A(0)A(1)...
//   staircase   {limit?, schedule}          a_n = limit - G(n), limit defaults to 1
//   omega_toy   {machine}                   a_s = Omega_s (1 - 2^-s), Omega_s the measure halted by stage s

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/io.hpp"
#include "lcelab/machine.hpp"
#include "lcelab/natural_set.hpp"
#include "lcelab/rational.hpp"

namespace lcelab {

struct GalleryEntry {
  std::string name;
  std::string kind;
  nlohmann::json parameters;
};

namespace reals {

/// Toy Omega of a finite machine.  The stage sums alone would reach the limit
/// at the final stage, so each stage is damped by (1 - 2^-s); the approximation
/// stays strictly below the limit and a_0 = 0.
inline DeskReal omega_toy(const PrefixMachine& m) {
  const Rational limit = measure(m);
  if (limit == 0) throw ConfigError("omega_toy: machine " + m.name() + " has an empty domain");
  return DeskReal("omega(" + m.name() + ")",
                  [m](std::uint64_t s) { return stage_measure(m, s) * (1 - pow2(-static_cast<std::int64_t>(s))); },
                  limit);
}

}  // namespace reals

inline DeskReal build_real(const GalleryEntry& e) {
  const auto& p = e.parameters;
  DeskReal x = [&] {
    if (e.kind == "geometric") {
      Rational ratio = p.contains("ratio") ? io::rational_from_json(p.at("ratio")) : make_rational(1, 2);
      return reals::geometric(io::rational_from_json(io::field(p, "limit")), ratio);
    }
    if (e.kind == "set_real") return reals::set_real(io::set_from_json(io::field(p, "set")));
    if (e.kind == "staircase") {
      Rational limit = p.contains("limit") ? io::rational_from_json(p.at("limit")) : Rational(1);
      GapSchedule schedule = io::schedule_from_json(io::field(p, "schedule"));
      Rational prev = schedule.at(0);
      if (prev <= 0) throw ConfigError("staircase schedule is not positive at 0");
      for (std::uint64_t n = 1; n <= 12; ++n) {
        Rational cur = schedule.at(n);
        if (cur <= 0 || cur >= prev)
          throw ConfigError("staircase schedule is not strictly decreasing and positive at " + std::to_string(n));
        prev = std::move(cur);
      }
      return reals::staircase(limit, std::move(schedule));
    }
    if (e.kind == "omega_toy") return reals::omega_toy(io::machine_from_json(io::field(p, "machine")));
    throw ConfigError("unknown gallery kind \"" + e.kind + "\"");
  }();
  validate_real(x, e.kind == "staircase" ? 12 : 64);
  return e.name.empty() ? x : x.renamed(e.name);
}

/// One DeskReal per entry; errors name the offending entry index.
inline std::vector<DeskReal> build_gallery(const std::vector<GalleryEntry>& config) {
  std::vector<DeskReal> out;
  out.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    try {
      out.push_back(build_real(config[i]));
    } catch (const Error& err) {
      throw ConfigError("gallery entry " + std::to_string(i) + " (" + config[i].name + "): " + err.what());
    } catch (const nlohmann::json::exception& err) {
      throw ConfigError("gallery entry " + std::to_string(i) + " (" + config[i].name + "): " + err.what());
    }
  }
  return out;
}

/// Accepts either a bare array of entries or {"entries": [...]}.
inline std::vector<GalleryEntry> gallery_config_from_json(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_array() ? j : io::field(j, "entries");
  if (!list.is_array()) throw ConfigError("gallery config: expected a list of entries");
  std::vector<GalleryEntry> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& e = list[i];
    if (!e.is_object() || !e.contains("kind"))
      throw ConfigError("gallery entry " + std::to_string(i) + ": expected {name, kind, parameters}");
    out.push_back({e.value("name", std::string()), e.at("kind").get<std::string>(),
                   e.value("parameters", nlohmann::json::object())});
  }
  return out;
}

/// The built-in gallery: one or two reals of every kind, all with limits in (0, 1].
inline std::vector<DeskReal> standard_gallery() {
  std::vector<DeskReal> g;
  g.push_back(reals::geometric(Rational(1)).renamed("geometric_1"));
  g.push_back(reals::geometric(make_rational(3, 4), make_rational(1, 3)).renamed("geometric_3/4"));
  g.push_back(reals::set_real(sets::evens()).renamed("set_evens"));
  g.push_back(reals::set_real(sets::odds()).renamed("set_odds"));
  g.push_back(reals::set_real(sets::explicit_set({0, 3}, 6)).renamed("set_explicit"));
  g.push_back(reals::staircase(Rational(1), schedules::alternating()).renamed("staircase_alternating"));
  g.push_back(reals::omega_toy(PrefixMachine("toy", {{"0", "1"}, {"10", "10"}, {"11", "101"}})).renamed("omega_toy"));
  return g;
}

}  // namespace lcelab
