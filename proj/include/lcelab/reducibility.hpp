#pragma once

// Translation witnesses for Solovay-style reductions and their exact checkers.
//
// A witness (f, c) for alpha <= beta must satisfy, for every rational q < beta,
//   f(q) defined,  f(q) < alpha,  alpha - f(q) < c (beta - q)
// and in the weakened variant the bound is c (beta - q) + 2^-|q| for dyadic q.
// Checkers test this on finite sample sets only; a clean report means "no
// violation found on N samples", never that the reduction holds.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/parallel.hpp"
#include "lcelab/rational.hpp"

namespace lcelab {

enum class Totality { partial, total };
enum class Variant { strict, weakened };

inline const char* to_string(Variant v) { return v == Variant::strict ? "strict" : "weakened"; }
inline const char* to_string(Totality t) { return t == Totality::total ? "total" : "partial"; }

struct TranslationWitness {
  using Fn = std::function<std::optional<Rational>(const Rational&)>;

  std::string name;
  Fn translate;
  Rational constant;
  Totality totality = Totality::total;
  Variant variant = Variant::strict;

  std::optional<Rational> operator()(const Rational& q) const { return translate(q); }
};

inline void require_positive_constant(const TranslationWitness& w) {
  if (w.constant <= 0) throw ConfigError("witness " + w.name + ": constant must be positive, got " + to_string(w.constant));
}

enum class ViolationReason { undefined, not_below_alpha, gap_bound_failed };

inline const char* to_string(ViolationReason r) {
  switch (r) {
    case ViolationReason::undefined: return "undefined";
    case ViolationReason::not_below_alpha: return "not_below_alpha";
    case ViolationReason::gap_bound_failed: return "gap_bound_failed";
  }
  return "?";
}

struct Violation {
  Rational q;
  ViolationReason reason;
  std::optional<Rational> phi_q;
  Rational bound;  ///< c (beta - q), plus 2^-|q| in the weakened variant
};

struct ViolationReport {
  std::string witness;
  Variant variant = Variant::strict;
  std::uint64_t samples_checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Violation> violations;
  /// max (alpha - f(q)) / (beta - q) over samples where f(q) is defined.
  std::optional<Rational> max_ratio_seen;

  bool passed() const { return violations.empty(); }
};

/// Evaluates the witness on every sample q < beta; samples at or above beta are skipped.
inline ViolationReport check_witness(const DeskReal& alpha, const DeskReal& beta, const TranslationWitness& w,
                                     const std::vector<Rational>& samples) {
  require_positive_constant(w);
  const Rational& a = Oracle::limit(alpha);
  const Rational& b = Oracle::limit(beta);

  if (w.variant == Variant::weakened) {
    for (const auto& q : samples)
      if (q < b && !is_dyadic(q)) throw DomainError("weakened check: sample " + to_string(q) + " is not dyadic");
  }

  auto partials = map_chunks(samples.size(), [&](std::size_t begin, std::size_t end) {
    ViolationReport r;
    for (std::size_t i = begin; i < end; ++i) {
      const Rational& q = samples[i];
      if (q >= b) {
        ++r.skipped;
        continue;
      }
      ++r.samples_checked;
      Rational bound = w.constant * (b - q);
      if (w.variant == Variant::weakened) bound += pow2(-static_cast<std::int64_t>(dyadic_length(q)));
      auto phi = w(q);
      if (!phi) {
        r.violations.push_back({q, ViolationReason::undefined, std::nullopt, bound});
        continue;
      }
      const Rational diff = a - *phi;
      Rational ratio = diff / (b - q);
      if (!r.max_ratio_seen || ratio > *r.max_ratio_seen) r.max_ratio_seen = std::move(ratio);
      if (diff <= 0)
        r.violations.push_back({q, ViolationReason::not_below_alpha, phi, bound});
      else if (diff >= bound)
        r.violations.push_back({q, ViolationReason::gap_bound_failed, phi, bound});
    }
    return r;
  });

  ViolationReport report;
  report.witness = w.name;
  report.variant = w.variant;
  for (auto& p : partials) {
    report.samples_checked += p.samples_checked;
    report.skipped += p.skipped;
    if (p.max_ratio_seen && (!report.max_ratio_seen || *p.max_ratio_seen > *report.max_ratio_seen))
      report.max_ratio_seen = p.max_ratio_seen;
    std::move(p.violations.begin(), p.violations.end(), std::back_inserter(report.violations));
  }
  std::stable_sort(report.violations.begin(), report.violations.end(), [](const Violation& x, const Violation& y) {
    if (x.q != y.q) return x.q < y.q;
    return x.reason < y.reason;
  });
  return report;
}

namespace witnesses {

/// q -> q.
inline TranslationWitness identity(const Rational& c) {
  return {"identity", [](const Rational& q) -> std::optional<Rational> { return q; }, c};
}

/// q -> k q.
inline TranslationWitness linear(const Rational& k, const Rational& c) {
  return {"linear(" + to_string(k) + ")", [k](const Rational& q) -> std::optional<Rational> { return k * q; }, c};
}

/// q -> a + b q.
inline TranslationWitness affine(const Rational& a, const Rational& b, const Rational& c) {
  return {"affine(" + to_string(a) + "," + to_string(b) + ")",
          [a, b](const Rational& q) -> std::optional<Rational> { return a + b * q; }, c};
}

/// q -> v for every q.
inline TranslationWitness constant(const Rational& v, const Rational& c) {
  return {"constant(" + to_string(v) + ")", [v](const Rational&) -> std::optional<Rational> { return v; }, c};
}

}  // namespace witnesses

enum class ScalingDirection { forward, backward };

/// Witness for r*alpha <= alpha (forward: q -> r q, c = r + 1) or
/// alpha <= r*alpha (backward: q -> q / r, c = 1/r + 1).
///
/// The constant is strictly above r (resp. 1/r) because the reduction
/// inequality is strict: r (alpha - q) < r (alpha - q) never holds.
inline TranslationWitness scaling_witness(const Rational& r, ScalingDirection direction) {
  if (r <= 0) throw ConfigError("scaling_witness: r must be positive, got " + to_string(r));
  const Rational factor = direction == ScalingDirection::forward ? r : 1 / r;
  TranslationWitness w = witnesses::linear(factor, factor + 1);
  w.name = std::string("scaling(") + to_string(r) + (direction == ScalingDirection::forward ? ",forward)" : ",backward)");
  return w;
}

/// The value used for non-dyadic or out-of-range queries by witnesses that are
/// only meaningful on dyadic q in [0,1): clamp to [0,1) and truncate to
/// `precision` bits.
inline Rational dyadic_proxy(const Rational& q, std::uint64_t precision) {
  if (q < 0) return Rational(0);
  if (q >= 1) return 1 - pow2(-static_cast<std::int64_t>(precision));
  if (is_dyadic(q)) return q;
  return truncate(q, precision).value();
}

/// Weakened witness reducing a computable alpha (given exactly) to any real:
/// f(q) = alpha truncated to |q| + 1 bits, or alpha - 2^-(|q|+2) when that
/// truncation is alpha itself.  Then 0 < alpha - f(q) < 2^-|q|.
inline TranslationWitness computable_least_witness(const Rational& alpha, std::uint64_t precision = 64) {
  if (alpha <= 0 || alpha >= 1) throw ConfigError("computable_least_witness: alpha must lie in (0,1)");
  constexpr std::uint64_t kTable = 64;
  auto at_length = [alpha](std::uint64_t len) {
    Rational f = truncate(alpha, len + 1).value();
    if (f == alpha) f = alpha - pow2(-static_cast<std::int64_t>(len) - 2);
    return f;
  };
  std::vector<Rational> table;
  table.reserve(kTable + 1);
  for (std::uint64_t len = 0; len <= kTable; ++len) table.push_back(at_length(len));
  return {"least(" + to_string(alpha) + ")",
          [table = std::move(table), at_length, precision](const Rational& q) -> std::optional<Rational> {
            const auto len = dyadic_length(dyadic_proxy(q, precision));
            return len < table.size() ? table[len] : at_length(len);
          },
          Rational(1), Totality::total, Variant::weakened};
}

/// q -> outer(inner(q)) with constant c_outer * c_inner.
inline TranslationWitness compose(const TranslationWitness& outer, const TranslationWitness& inner) {
  return {outer.name + "o" + inner.name,
          [outer, inner](const Rational& q) -> std::optional<Rational> {
            auto mid = inner(q);
            if (!mid) return std::nullopt;
            return outer(*mid);
          },
          outer.constant * inner.constant,
          outer.totality == Totality::total && inner.totality == Totality::total ? Totality::total
                                                                                  : Totality::partial,
          Variant::strict};
}

/// Default samples below beta: approximation points b_0, b_1, ... for half the
/// budget, then evenly strided points of a dyadic grid k 2^-m below the limit.
inline std::vector<Rational> default_samples(const DeskReal& beta, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  const std::size_t from_approx = count / 2;
  for (std::size_t n = 0; n < from_approx; ++n) out.push_back(beta.approx_at(n));

  const Rational& limit = Oracle::limit(beta);
  const std::size_t from_grid = count - from_approx;
  if (from_grid == 0) return out;
  const Rational lo = std::min(Rational(0), beta.approx_at(0));
  // Smallest m with at least from_grid grid points in [lo, limit).
  std::int64_t m = 0;
  auto points_below = [&](std::int64_t level) {
    const Rational scale = pow2(level);
    Integer first = floor(lo * scale);
    if (Rational(first) < lo * scale) ++first;
    Integer last = floor(limit * scale);
    if (Rational(last) == limit * scale) --last;
    return std::make_pair(first, last);
  };
  for (;; ++m) {
    auto [first, last] = points_below(m);
    if (last - first + 1 >= Integer(from_grid)) break;
  }
  auto [first, last] = points_below(m);
  const Integer span = last - first + 1;
  for (std::size_t i = 0; i < from_grid; ++i) {
    Integer k = first + span * Integer(i) / Integer(from_grid);
    out.push_back(Rational(k) * pow2(-m));
  }
  return out;
}

/// All dyadic q in [0, 1) with |q| <= max_length that lie below beta's limit.
inline std::vector<Rational> dyadic_samples(const DeskReal& beta, std::uint64_t max_length) {
  const Rational& limit = Oracle::limit(beta);
  const std::uint64_t count = std::uint64_t{1} << max_length;
  std::vector<Rational> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    Rational q{Integer(k), Integer(count)};
    if (q >= limit) break;
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace lcelab
