#pragma once

// Textual names for reals, witnesses, speed-ups and translations, as used on
// the command line.  Fields are separated by ':'; rationals are "num/den".
//
//   reals         geometric:L[:r]  set:evens|odds|naturals  staircase:alternating|double_exponential[:L]
//                 scaled:r:<real>  omega:<machine.json>     gallery:<config.json>#<name>
//   witnesses     identity  linear:k  affine:a:b  constant:v  scaling:r  scaling-back:r  least:a
//   speed-ups     identity  linear:k  shift:k
//   translations  identity  affine:a:b  contraction:t:s

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/gallery.hpp"
#include "lcelab/io.hpp"
#include "lcelab/machine.hpp"
#include "lcelab/reducibility.hpp"
#include "lcelab/speedability.hpp"

namespace lcelab::registry {

inline std::vector<std::string> split(std::string_view text, std::size_t max_parts = std::string_view::npos) {
  std::vector<std::string> parts;
  while (parts.size() + 1 < max_parts) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) break;
    parts.emplace_back(text.substr(0, colon));
    text.remove_prefix(colon + 1);
  }
  parts.emplace_back(text);
  return parts;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline PrefixMachine read_machine(const std::string& path) {
  try {
    return io::machine_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
}

inline std::uint64_t parse_natural(const std::string& text, const char* what) {
  const Rational v = parse_rational(text);
  if (denominator(v) != 1 || v < 0) throw ConfigError(std::string(what) + ": expected a natural, got '" + text + "'");
  return numerator(v).convert_to<std::uint64_t>();
}

namespace detail {
[[noreturn]] inline void unknown(const std::string& what, std::string_view text) {
  throw ConfigError("unknown " + what + " '" + std::string(text) + "'");
}
inline void arity(const std::vector<std::string>& p, std::size_t lo, std::size_t hi, std::string_view text) {
  if (p.size() < lo || p.size() > hi) throw ConfigError("wrong number of fields in '" + std::string(text) + "'");
}
}  // namespace detail

inline DeskReal parse_real(std::string_view text) {
  const auto head = split(text, 2);
  const std::string& kind = head[0];
  if (kind == "scaled") {
    auto p = split(text, 3);
    detail::arity(p, 3, 3, text);
    return reals::scaled(parse_real(p[2]), parse_rational(p[1]));
  }
  if (kind == "omega") {
    detail::arity(head, 2, 2, text);
    return reals::omega_toy(read_machine(head[1]));
  }
  if (kind == "gallery") {
    detail::arity(head, 2, 2, text);
    const auto hash = head[1].rfind('#');
    if (hash == std::string::npos) throw ConfigError("gallery reference needs '#<name>': '" + std::string(text) + "'");
    const auto config = gallery_config_from_json(read_json_file(head[1].substr(0, hash)));
    const std::string name = head[1].substr(hash + 1);
    for (const auto& e : config)
      if (e.name == name) return build_gallery({e}).front();
    throw ConfigError("no gallery entry named '" + name + "'");
  }
  const auto p = split(text);
  if (kind == "geometric") {
    detail::arity(p, 2, 3, text);
    return reals::geometric(parse_rational(p[1]), p.size() == 3 ? parse_rational(p[2]) : make_rational(1, 2));
  }
  if (kind == "set") {
    detail::arity(p, 2, 2, text);
    return reals::set_real(io::set_from_json({{"kind", p[1]}}));
  }
  if (kind == "staircase") {
    detail::arity(p, 2, 3, text);
    const Rational limit = p.size() == 3 ? parse_rational(p[2]) : Rational(1);
    if (p[1] == "alternating") return reals::staircase(limit, schedules::alternating());
    if (p[1] == "double_exponential") return reals::staircase(limit, schedules::double_exponential());
    detail::unknown("staircase schedule", p[1]);
  }
  detail::unknown("real", text);
}

/// `c` overrides the witness's own constant; witnesses without a natural
/// constant require it.
inline TranslationWitness parse_witness(std::string_view text, const std::optional<Rational>& c) {
  const auto p = split(text);
  auto need_c = [&]() -> Rational {
    if (!c) throw ConfigError("witness '" + std::string(text) + "' needs --c");
    return *c;
  };
  TranslationWitness w = [&] {
    if (p[0] == "identity") {
      detail::arity(p, 1, 1, text);
      return witnesses::identity(need_c());
    }
    if (p[0] == "linear") {
      detail::arity(p, 2, 2, text);
      return witnesses::linear(parse_rational(p[1]), need_c());
    }
    if (p[0] == "affine") {
      detail::arity(p, 3, 3, text);
      return witnesses::affine(parse_rational(p[1]), parse_rational(p[2]), need_c());
    }
    if (p[0] == "constant") {
      detail::arity(p, 2, 2, text);
      return witnesses::constant(parse_rational(p[1]), need_c());
    }
    if (p[0] == "scaling" || p[0] == "scaling-back") {
      detail::arity(p, 2, 2, text);
      return scaling_witness(parse_rational(p[1]),
                             p[0] == "scaling" ? ScalingDirection::forward : ScalingDirection::backward);
    }
    if (p[0] == "least") {
      detail::arity(p, 2, 2, text);
      return computable_least_witness(parse_rational(p[1]));
    }
    detail::unknown("witness", text);
  }();
  if (c) w.constant = *c;
  return w;
}

inline SpeedUpFn parse_speedup(std::string_view text) {
  const auto p = split(text);
  if (p[0] == "identity" && p.size() == 1) return speedups::identity();
  if (p[0] == "linear" && p.size() == 2) return speedups::linear(parse_natural(p[1], "linear"));
  if (p[0] == "shift" && p.size() == 2) return speedups::shift(parse_natural(p[1], "shift"));
  detail::unknown("speed-up", text);
}

inline TranslationFn parse_translation(std::string_view text) {
  const auto p = split(text);
  if (p[0] == "identity" && p.size() == 1) return translations::identity();
  if (p[0] == "affine" && p.size() == 3) return translations::affine(parse_rational(p[1]), parse_rational(p[2]));
  if (p[0] == "contraction" && p.size() == 3)
    return translations::contraction(parse_rational(p[1]), parse_rational(p[2]));
  detail::unknown("translation", text);
}

}  // namespace lcelab::registry
