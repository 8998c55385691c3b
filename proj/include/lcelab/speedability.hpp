#pragma once

// Speed-up functions on indices, translation functions on rationals, and the
// conversions between them.  Finite horizons stand in for liminf: a running
// minimum at or below rho is reported as evidence of rho-speedability and
// nothing is ever concluded about nonspeedability.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/rational.hpp"

namespace lcelab {

/// f : N -> N, nondecreasing with n <= f(n).
struct SpeedUpFn {
  std::string name;
  std::function<std::uint64_t(std::uint64_t)> evaluate;

  std::uint64_t operator()(std::uint64_t n) const { return evaluate(n); }
};

/// g : Q -> Q or undefined.
struct TranslationFn {
  std::string name;
  std::function<std::optional<Rational>(const Rational&)> evaluate;
  bool total = true;

  std::optional<Rational> operator()(const Rational& q) const { return evaluate(q); }
};

/// Checks n <= f(n) <= f(n+1) for n <= horizon.
inline void validate_speedup(const SpeedUpFn& f, std::uint64_t horizon) {
  std::uint64_t prev = 0;
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    const std::uint64_t v = f(n);
    if (v < n) throw PreconditionError(f.name + "(" + std::to_string(n) + ") = " + std::to_string(v) + " < n");
    if (n > 0 && v < prev) throw PreconditionError(f.name + " decreases at " + std::to_string(n));
    prev = v;
  }
}

namespace speedups {

inline SpeedUpFn identity() {
  return {"identity", [](std::uint64_t n) { return n; }};
}

/// n -> k n, k >= 1.
inline SpeedUpFn linear(std::uint64_t k) {
  if (k == 0) throw ConfigError("linear speed-up: factor must be at least 1");
  return {"linear(" + std::to_string(k) + ")", [k](std::uint64_t n) { return k * n; }};
}

/// n -> n + k.
inline SpeedUpFn shift(std::uint64_t k) {
  return {"shift(" + std::to_string(k) + ")", [k](std::uint64_t n) { return n + k; }};
}

}  // namespace speedups

namespace translations {

inline TranslationFn identity() {
  return {"identity", [](const Rational& q) -> std::optional<Rational> { return q; }};
}

/// q -> a + b q.  With a = (1 - s) t and b = s this contracts toward t by s.
inline TranslationFn affine(const Rational& a, const Rational& b) {
  return {"affine(" + to_string(a) + "," + to_string(b) + ")",
          [a, b](const Rational& q) -> std::optional<Rational> { return a + b * q; }};
}

/// q -> t - s (t - q): contracts the distance to t by the factor s.
inline TranslationFn contraction(const Rational& target, const Rational& s) {
  TranslationFn g = affine((1 - s) * target, s);
  g.name = "contraction(" + to_string(target) + "," + to_string(s) + ")";
  return g;
}

}  // namespace translations

/// (alpha - a_f(n)) / (alpha - a_n).
inline Rational ratio(const DeskReal& x, const SpeedUpFn& f, std::uint64_t n) {
  const Rational denom = gap(x, n);
  return (Oracle::limit(x) - x.approx_at(f(n))) / denom;
}

struct RatioTrace {
  struct Entry {
    std::uint64_t n;
    Rational ratio;
    Rational running_min;
  };
  std::vector<Entry> entries;

  const Rational& running_min() const {
    if (entries.empty()) throw PreconditionError("empty ratio trace");
    return entries.back().running_min;
  }
  bool evidence(const Rational& rho) const { return !entries.empty() && running_min() <= rho; }

  void push(std::uint64_t n, Rational r) {
    Rational m = entries.empty() ? r : std::min(entries.back().running_min, r);
    entries.push_back({n, std::move(r), std::move(m)});
  }
};

/// Ratios for n = 0..horizon with their running minimum.
inline RatioTrace liminf_record(const DeskReal& x, const SpeedUpFn& f, std::uint64_t horizon) {
  if (horizon < 1) throw ConfigError("liminf_record: horizon must be at least 1");
  RatioTrace trace;
  trace.entries.reserve(horizon + 1);
  for (std::uint64_t n = 0; n <= horizon; ++n) trace.push(n, ratio(x, f, n));
  return trace;
}

/// Least index n >= from with a_n >= target (inclusive) or a_n > target (strict),
/// searching no further than cap.  Approximations are nondecreasing, so the
/// predicate is monotone and galloping plus bisection is exact.
inline std::optional<std::uint64_t> first_index_reaching(const DeskReal& x, const Rational& target,
                                                         std::uint64_t from, std::uint64_t cap, bool strict) {
  auto hit = [&](std::uint64_t n) {
    const Rational a = x.approx_at(n);
    return strict ? a > target : a >= target;
  };
  if (from > cap) return std::nullopt;
  if (hit(from)) return from;
  std::uint64_t lo = from;  // !hit(lo)
  std::uint64_t step = 1;
  std::uint64_t hi;
  for (;;) {
    if (lo >= cap) return std::nullopt;
    hi = std::min(cap, lo + step);
    if (hit(hi)) break;
    lo = hi;
    step *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (hit(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// g(q) = a_f(n(q)) with n(q) the least i such that q <= a_i.
///
/// The search for n(q) only diverges when q >= alpha; the limit oracle stands
/// in for that divergence by returning undefined there.
inline TranslationFn translation_from_speedup(const DeskReal& x, const SpeedUpFn& f) {
  return {"translation(" + f.name + ")",
          [x, f](const Rational& q) -> std::optional<Rational> {
            if (q >= Oracle::limit(x)) return std::nullopt;
            auto n = first_index_reaching(x, q, 0, UINT64_MAX / 2, false);
            return x.approx_at(f(*n));
          },
          false};
}

/// f(i) = least n > i with a_n > g(a_{i+1}), searching up to index search_cap.
inline SpeedUpFn speedup_from_translation(const DeskReal& x, const TranslationFn& g, std::uint64_t search_cap) {
  return {"speedup(" + g.name + ")", [x, g, search_cap](std::uint64_t i) -> std::uint64_t {
            const Rational q = x.approx_at(i + 1);
            auto target = g(q);
            if (!target)
              throw PreconditionError(g.name + " is undefined at a_" + std::to_string(i + 1) + " = " + to_string(q));
            auto n = first_index_reaching(x, *target, i + 1, search_cap, true);
            if (!n)
              throw SearchExhausted("no index n <= " + std::to_string(search_cap) + " with a_n > " + g.name +
                                    "(a_" + std::to_string(i + 1) + ")");
            return *n;
          }};
}

/// k-fold composition g o ... o g.
inline TranslationFn amplify(const TranslationFn& g, std::uint64_t k) {
  if (k < 1) throw ConfigError("amplify: k must be at least 1");
  if (k == 1) return g;
  return {g.name + "^" + std::to_string(k),
          [g, k](const Rational& q) -> std::optional<Rational> {
            std::optional<Rational> v = q;
            for (std::uint64_t i = 0; i < k && v; ++i) v = g(*v);
            return v;
          },
          g.total};
}

enum class ProbeFailure { undefined, not_above_q, not_below_alpha, not_monotone };

inline const char* to_string(ProbeFailure f) {
  switch (f) {
    case ProbeFailure::undefined: return "undefined";
    case ProbeFailure::not_above_q: return "not_above_q";
    case ProbeFailure::not_below_alpha: return "not_below_alpha";
    case ProbeFailure::not_monotone: return "not_monotone";
  }
  return "?";
}

struct TotalSpeedupReport {
  struct ProbeViolation {
    Rational q;
    ProbeFailure failure;
    std::optional<Rational> g_q;
  };
  Rational rho;
  std::vector<Rational> probes;  ///< sorted, distinct; trace index j refers to probes[j]
  RatioTrace trace;
  std::vector<ProbeViolation> violations;

  bool evidence() const { return violations.empty() && trace.evidence(rho); }
};

/// Probe points a_0..a_horizon plus a_0 + (alpha - a_0)(1 - 2^-k), k = 1..horizon.
inline std::vector<Rational> default_probes(const DeskReal& x, std::uint64_t horizon) {
  std::vector<Rational> probes;
  const Rational a0 = x.approx_at(0);
  const Rational& alpha = Oracle::limit(x);
  for (std::uint64_t i = 0; i <= horizon; ++i) probes.push_back(x.approx_at(i));
  for (std::uint64_t k = 1; k <= horizon; ++k)
    probes.push_back(a0 + (alpha - a0) * (1 - pow2(-static_cast<std::int64_t>(k))));
  return probes;
}

/// Checks q < g(q) < alpha and monotonicity of g on the probes together with
/// a_0..a_horizon, and records the ratios (alpha - g(q)) / (alpha - q) in
/// increasing order of q.
inline TotalSpeedupReport check_total_speedup(const DeskReal& x, const TranslationFn& g, const Rational& rho,
                                              std::uint64_t horizon, const std::vector<Rational>& probes) {
  if (rho <= 0 || rho >= 1) throw ConfigError("check_total_speedup: rho must lie in (0,1)");
  if (horizon < 1) throw ConfigError("check_total_speedup: horizon must be at least 1");
  const Rational& alpha = Oracle::limit(x);
  for (const auto& q : probes)
    if (q >= alpha) throw PreconditionError("probe " + to_string(q) + " is not below the limit");

  TotalSpeedupReport report;
  report.rho = rho;
  report.probes = probes;
  for (std::uint64_t i = 0; i <= horizon; ++i) report.probes.push_back(x.approx_at(i));
  std::sort(report.probes.begin(), report.probes.end());
  report.probes.erase(std::unique(report.probes.begin(), report.probes.end()), report.probes.end());

  std::optional<Rational> prev_value;
  for (std::size_t j = 0; j < report.probes.size(); ++j) {
    const Rational& q = report.probes[j];
    auto v = g(q);
    if (!v) {
      report.violations.push_back({q, ProbeFailure::undefined, std::nullopt});
      continue;
    }
    if (*v <= q) report.violations.push_back({q, ProbeFailure::not_above_q, v});
    if (*v >= alpha) report.violations.push_back({q, ProbeFailure::not_below_alpha, v});
    if (prev_value && *v < *prev_value) report.violations.push_back({q, ProbeFailure::not_monotone, v});
    prev_value = v;
    report.trace.push(j, (alpha - *v) / (alpha - q));
  }
  return report;
}

}  // namespace lcelab
