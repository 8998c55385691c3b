#pragma once

// Left-c.e. reals at desk scale.
//
// A DeskReal is a nondecreasing rational approximation a_0, a_1, ... together
// with its exact limit.  The limit is an oracle: code that builds witnesses or
// translation functions sees only approx_at(); checkers and reporters read the
// limit through lcelab::Oracle.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lcelab/errors.hpp"
#include "lcelab/natural_set.hpp"
#include "lcelab/rational.hpp"

namespace lcelab {

class DeskReal {
 public:
  using Generator = std::function<Rational(std::uint64_t)>;

  DeskReal(std::string name, Generator approx, Rational limit)
      : name_(std::move(name)), approx_(std::move(approx)), limit_(std::move(limit)) {}

  const std::string& name() const { return name_; }

  /// a_n.
  Rational approx_at(std::uint64_t n) const { return approx_(n); }

  DeskReal renamed(std::string name) const { return DeskReal(std::move(name), approx_, limit_); }

 private:
  friend struct Oracle;

  std::string name_;
  Generator approx_;
  Rational limit_;
};

/// Checker-only access to the limit of a DeskReal.
struct Oracle {
  static const Rational& limit(const DeskReal& x) { return x.limit_; }
};

/// limit - a_n, which must be strictly positive.
inline Rational gap(const DeskReal& x, std::uint64_t n) {
  Rational g = Oracle::limit(x) - x.approx_at(n);
  if (g <= 0)
    throw DegenerateApproximation(x.name() + ": a_" + std::to_string(n) + " = " + to_string(x.approx_at(n)) +
                                  (g == 0 ? " reached" : " exceeds") + " its limit " +
                                  to_string(Oracle::limit(x)));
  return g;
}

/// Checks a_n <= a_{n+1} and a_n < limit for n <= horizon.
inline void validate_real(const DeskReal& x, std::uint64_t horizon) {
  Rational prev = x.approx_at(0);
  gap(x, 0);
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    Rational cur = x.approx_at(n);
    if (cur < prev)
      throw ConfigError(x.name() + ": approximation decreases at index " + std::to_string(n));
    gap(x, n);
    prev = std::move(cur);
  }
}

/// A strictly decreasing, positive gap schedule G with G(n) -> 0.
struct GapSchedule {
  std::string name;
  std::function<Rational(std::uint64_t)> at;
};

namespace schedules {

/// G(n) = r^n.
inline GapSchedule geometric(const Rational& ratio) {
  if (ratio <= 0 || ratio >= 1) throw ConfigError("geometric schedule: ratio must lie in (0,1)");
  return {"geometric(" + to_string(ratio) + ")", [ratio](std::uint64_t n) { return pow(ratio, n); }};
}

/// G(n) = 2^(-2^n).  Only small indices are practical.
inline GapSchedule double_exponential() {
  return {"double_exponential", [](std::uint64_t n) {
            if (n > 24) throw DomainError("double_exponential schedule: index " + std::to_string(n) + " too large");
            return pow2(-(std::int64_t{1} << n));
          }};
}

/// G(2m) = 4^-m, G(2m+1) = 4^-m / 3: consecutive gap ratios alternate 1/3, 3/4.
inline GapSchedule alternating() {
  return {"alternating", [](std::uint64_t n) {
            Rational g = pow2(-2 * static_cast<std::int64_t>(n / 2));
            if (n % 2 == 1) g /= 3;
            return g;
          }};
}

/// The listed gaps, then repeated halving of the last one.
inline GapSchedule explicit_gaps(std::vector<Rational> gaps) {
  if (gaps.empty()) throw ConfigError("explicit schedule: no gaps given");
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] <= 0) throw ConfigError("explicit schedule: gap " + std::to_string(i) + " is not positive");
    if (i > 0 && gaps[i] >= gaps[i - 1])
      throw ConfigError("explicit schedule: gaps not strictly decreasing at " + std::to_string(i));
  }
  auto shared = std::make_shared<const std::vector<Rational>>(std::move(gaps));
  return {"explicit", [shared](std::uint64_t n) {
            const auto& g = *shared;
            if (n < g.size()) return g[n];
            return g.back() * pow2(-static_cast<std::int64_t>(n - g.size() + 1));
          }};
}

}  // namespace schedules

namespace reals {

/// a_n = limit * (1 - ratio^n).
inline DeskReal geometric(const Rational& limit, const Rational& ratio = make_rational(1, 2)) {
  if (limit <= 0) throw ConfigError("geometric: limit must be positive");
  if (ratio <= 0 || ratio >= 1) throw ConfigError("geometric: ratio must lie in (0,1)");
  return DeskReal("geometric(" + to_string(limit) + "," + to_string(ratio) + ")",
                  [limit, ratio](std::uint64_t n) { return limit * (1 - pow(ratio, n)); }, limit);
}

/// 0.A(0)A(1)... approximated by its bitwise partial sums.
inline DeskReal set_real(const NaturalSet& set) {
  if (!set.binary_value())
    throw ConfigError("set_real: the value of 0." + set.name() + " is not a known rational");
  return DeskReal("set_real(" + set.name() + ")", [set](std::uint64_t n) { return real_from_set(set, n); },
                  *set.binary_value());
}

/// a_n = limit - G(n).
inline DeskReal staircase(const Rational& limit, GapSchedule schedule) {
  std::string name = "staircase(" + to_string(limit) + "," + schedule.name + ")";
  return DeskReal(std::move(name), [limit, at = std::move(schedule.at)](std::uint64_t n) { return limit - at(n); },
                  limit);
}

/// r * x for r > 0.
inline DeskReal scaled(const DeskReal& x, const Rational& r) {
  if (r <= 0) throw ConfigError("scaled: factor must be positive");
  return DeskReal(to_string(r) + "*" + x.name(), [x, r](std::uint64_t n) { return r * x.approx_at(n); },
                  r * Oracle::limit(x));
}

/// x + y with approximation a_n + b_n.
inline DeskReal sum(const DeskReal& x, const DeskReal& y) {
  return DeskReal(x.name() + "+" + y.name(), [x, y](std::uint64_t n) { return x.approx_at(n) + y.approx_at(n); },
                  Oracle::limit(x) + Oracle::limit(y));
}

}  // namespace reals
}  // namespace lcelab
