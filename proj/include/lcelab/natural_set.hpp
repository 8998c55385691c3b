#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcelab/errors.hpp"
#include "lcelab/rational.hpp"

namespace lcelab {

/// An infinite set of naturals given by a membership predicate.
///
/// `member_at_least(n)` returns some member >= n; it bounds every scan so the
/// principal and gap functions are total.  `binary_value` holds the exact
/// value of 0.A(0)A(1)... when it is a known rational (eventually periodic
/// sets), which is what lets such a set serve as a gallery real.
class NaturalSet {
 public:
  using Membership = std::function<bool(std::uint64_t)>;
  using Certificate = std::function<std::uint64_t(std::uint64_t)>;

  NaturalSet(std::string name, Membership contains, Certificate member_at_least,
             std::optional<Rational> binary_value = std::nullopt)
      : name_(std::move(name)),
        contains_(std::move(contains)),
        certificate_(std::move(member_at_least)),
        binary_value_(std::move(binary_value)) {}

  const std::string& name() const { return name_; }
  bool contains(std::uint64_t n) const { return contains_(n); }
  bool operator()(std::uint64_t n) const { return contains_(n); }

  std::uint64_t member_at_least(std::uint64_t n) const {
    const std::uint64_t m = certificate_(n);
    if (m < n || !contains_(m))
      throw InvariantError("set " + name_ + ": certificate for " + std::to_string(n) + " returned " +
                           std::to_string(m) + ", not a member >= n");
    return m;
  }

  const std::optional<Rational>& binary_value() const { return binary_value_; }

 private:
  std::string name_;
  Membership contains_;
  Certificate certificate_;
  std::optional<Rational> binary_value_;
};

namespace sets {

inline NaturalSet naturals() {
  return {"naturals", [](std::uint64_t) { return true; }, [](std::uint64_t n) { return n; }, Rational(1)};
}

inline NaturalSet evens() {
  return {"evens", [](std::uint64_t n) { return n % 2 == 0; },
          [](std::uint64_t n) { return n + (n % 2); }, make_rational(2, 3)};
}

inline NaturalSet odds() {
  return {"odds", [](std::uint64_t n) { return n % 2 == 1; },
          [](std::uint64_t n) { return n | 1; }, make_rational(1, 3)};
}

namespace detail {
inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}
}  // namespace detail

inline NaturalSet squares() {
  return {"squares",
          [](std::uint64_t n) {
            const auto r = detail::isqrt(n);
            return r * r == n;
          },
          [](std::uint64_t n) {
            auto r = detail::isqrt(n);
            if (r * r < n) ++r;
            return r * r;
          }};
}

/// {1, 2, 4, 8, ...}
inline NaturalSet powers_of_two() {
  return {"powers", [](std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; },
          [](std::uint64_t n) {
            std::uint64_t p = 1;
            while (p < n) p <<= 1;
            return p;
          }};
}

/// The listed elements together with every n >= tail_from.
///
/// A finite set has no principal function beyond its size, so explicit sets
/// carry a cofinite tail; 0.A is then a dyadic rational never reached by the
/// bitwise partial sums.
inline NaturalSet explicit_set(std::vector<std::uint64_t> elements, std::uint64_t tail_from) {
  std::set<std::uint64_t> members(elements.begin(), elements.end());
  Rational value = pow2(-static_cast<std::int64_t>(tail_from));
  for (auto m : members)
    if (m < tail_from) value += pow2(-static_cast<std::int64_t>(m) - 1);
  auto contains = [members, tail_from](std::uint64_t n) { return n >= tail_from || members.contains(n); };
  auto certificate = [members, tail_from](std::uint64_t n) {
    if (n >= tail_from) return n;
    auto it = members.lower_bound(n);
    return it != members.end() && *it < tail_from ? *it : tail_from;
  };
  std::string name = "explicit{";
  for (auto m : members) name += std::to_string(m) + ",";
  name += "n>=" + std::to_string(tail_from) + "}";
  return {std::move(name), std::move(contains), std::move(certificate), std::move(value)};
}

}  // namespace sets
}  // namespace lcelab
