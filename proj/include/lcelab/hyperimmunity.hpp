#pragma once

// Principal and gap functions of sets, the majorizer conversions between them,
// and the finite machinery behind "alpha = 0.A with A computable is total
// Solovay reducible to 0.B iff B is not hyperimmune".

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/natural_set.hpp"
#include "lcelab/parallel.hpp"
#include "lcelab/rational.hpp"
#include "lcelab/reducibility.hpp"

namespace lcelab {

struct MonotoneFn {
  std::string name;
  std::function<std::uint64_t(std::uint64_t)> evaluate;

  std::uint64_t operator()(std::uint64_t n) const { return evaluate(n); }
};

/// k_A(n): least member of A that is >= n.
inline std::uint64_t least_beyond(const NaturalSet& a, std::uint64_t n) {
  const std::uint64_t bound = a.member_at_least(n);
  for (std::uint64_t m = n; m < bound; ++m)
    if (a.contains(m)) return m;
  return bound;
}

/// p_A(n): the (n+1)-st smallest member of A.
inline std::uint64_t principal(const NaturalSet& a, std::uint64_t n) {
  std::uint64_t p = least_beyond(a, 0);
  for (std::uint64_t i = 0; i < n; ++i) p = least_beyond(a, p + 1);
  return p;
}

/// g^(n)(0), the plain n-fold iterate of g at 0.
inline std::uint64_t iterate_from_zero(const MonotoneFn& g, std::uint64_t n) {
  std::uint64_t x = 0;
  for (std::uint64_t i = 0; i < n; ++i) x = g(x);
  return x;
}

/// Majorant of p_A built from a nondecreasing majorant g of k_A:
///   h(0) = g(0),  h(i+1) = g(h(i) + 1).
/// Since p_A(i+1) = k_A(p_A(i) + 1), induction gives h(n) >= p_A(n).  The
/// queried arguments increase, so a decrease in the values exposes a
/// non-monotone g.
inline std::uint64_t majorize_p_from_k(const MonotoneFn& g, std::uint64_t n) {
  std::uint64_t h = g(0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (h == UINT64_MAX) throw PreconditionError(g.name + ": iterate overflows");
    const std::uint64_t next = g(h + 1);
    if (next < h)
      throw PreconditionError(g.name + " is not nondecreasing: g(" + std::to_string(h + 1) + ") = " +
                              std::to_string(next) + " < " + std::to_string(h));
    h = next;
  }
  return h;
}

/// Majorant of k_A from a majorant g of p_A: n -> g(n + 1).
inline std::uint64_t majorize_k_from_p(const MonotoneFn& g, std::uint64_t n) { return g(n + 1); }

/// Checks g(i) <= g(i+1) for i < n.
inline void validate_monotone(const MonotoneFn& g, std::uint64_t n) {
  std::uint64_t prev = g(0);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t cur = g(i);
    if (cur < prev) throw PreconditionError(g.name + " decreases at " + std::to_string(i));
    prev = cur;
  }
}

/// Total witness for 0.A <= 0.B (c = 1) from a majorant g of k_B:
///   f(q) = 0.A truncated to g(|q|) + 1 bits.
/// For dyadic q = 0.sigma < beta we have beta - q >= 2^-k_B(|q|) >= 2^-g(|q|),
/// while alpha - f(q) < 2^-(g(|q|)+1) with f(q) < alpha because A is infinite.
/// Non-dyadic and out-of-range q go through dyadic_proxy at `precision` bits.
inline TranslationWitness total_witness_from_majorizer(const NaturalSet& a, const MonotoneFn& g,
                                                       std::uint64_t precision = 64) {
  return {"majorizer(" + a.name() + "," + g.name + ")",
          [a, g, precision](const Rational& q) -> std::optional<Rational> {
            const auto len = dyadic_length(dyadic_proxy(q, precision));
            return real_from_set(a, g(len) + 1);
          },
          Rational(1), Totality::total, Variant::strict};
}

/// The default d: ceil(log2 c) + 1.
inline std::int64_t default_d(const Rational& c) { return ceil_log2(c) + 1; }

/// Upper bound for k_B(n) extracted from a total witness f for alpha <= 0.B:
///   m(n) = min over |sigma| = n of the positive values alpha - f(0.sigma),
///   bound(n) = d + ceil(log2(1 / m(n))),
/// clamped at 0.  Enumerates all 2^n strings.
inline std::uint64_t k_bound_from_witness(const TranslationWitness& w, const DeskReal& alpha, std::uint64_t n,
                                          std::int64_t d) {
  if (n > 30) throw DomainError("k_bound_from_witness: level " + std::to_string(n) + " too large to enumerate");
  const Rational& a = Oracle::limit(alpha);
  const std::uint64_t count = std::uint64_t{1} << n;
  const Integer den = Integer(1) << static_cast<unsigned>(n);

  auto minima = map_chunks(count, [&](std::size_t begin, std::size_t end) {
    std::optional<Rational> best;
    for (std::size_t k = begin; k < end; ++k) {
      auto f = w(Rational(Integer(k), den));
      if (!f) continue;
      Rational diff = a - *f;
      if (diff > 0 && (!best || diff < *best)) best = std::move(diff);
    }
    return best;
  });
  std::optional<Rational> m;
  for (auto& b : minima)
    if (b && (!m || *b < *m)) m = std::move(b);
  if (!m)
    throw WitnessDegenerate("witness " + w.name + ": no positive alpha - f(0.sigma) at level " + std::to_string(n));
  const std::int64_t bound = d + ceil_log2(1 / *m);
  return bound < 0 ? 0 : static_cast<std::uint64_t>(bound);
}

}  // namespace lcelab
