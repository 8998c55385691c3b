#pragma once

// Exact numerics: the Rational scalar and the dyadic-string helpers built on it.
//
// Every inequality in the library is decided on these values; there is no
// floating point on any checking path.

#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "lcelab/errors.hpp"

namespace lcelab {

// Expression templates off: `auto` and brace lists then always hold values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// 2^k for any integer k.
inline Rational pow2(std::int64_t k) {
  if (k >= 0) return Rational(Integer(1) << static_cast<unsigned>(k));
  return Rational(Integer(1), Integer(1) << static_cast<unsigned>(-k));
}

inline Rational pow(const Rational& base, std::uint64_t e) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(base), static_cast<unsigned>(e)),
                  pow(denominator(base), static_cast<unsigned>(e)));
}

/// Largest integer <= x.
inline Integer floor(const Rational& x) {
  Integer q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline bool is_power_of_two(const Integer& v) { return v > 0 && (v & (v - 1)) == 0; }

inline bool is_dyadic(const Rational& q) { return is_power_of_two(denominator(q)); }

/// Smallest integer k with 2^k >= x.  Requires x > 0.
inline std::int64_t ceil_log2(const Rational& x) {
  if (x <= 0) throw DomainError("ceil_log2 of a non-positive value");
  const Integer& p = numerator(x);
  const Integer& q = denominator(x);
  std::int64_t k = static_cast<std::int64_t>(msb(p)) - static_cast<std::int64_t>(msb(q));
  // 2^(k-1) < x < 2^(k+1) at this point; settle the last step exactly.
  while (pow2(k) < x) ++k;
  while (pow2(k - 1) >= x) --k;
  return k;
}

/// "num/den" (or just "num" for integers).
inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

/// Parses "num/den" or "num".  Decimal points are rejected.
inline Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ConfigError("not a rational \"num/den\": '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  Integer d{std::string(den)};
  if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer{n}, d);
}

/// A finite binary string sigma together with the value 0.sigma.
struct DyadicString {
  std::string bits;

  Rational value() const {
    if (bits.empty()) return Rational(0);
    Integer k = 0;
    for (char b : bits) {
      k <<= 1;
      if (b == '1') k += 1;
    }
    return Rational(k, Integer(1) << static_cast<unsigned>(bits.size()));
  }

  std::size_t size() const { return bits.size(); }

  /// The same value with trailing zeros removed, so size() is |q|.
  DyadicString canonical() const {
    auto end = bits.find_last_of('1');
    return DyadicString{end == std::string::npos ? std::string() : bits.substr(0, end + 1)};
  }

  friend bool operator==(const DyadicString&, const DyadicString&) = default;
};

inline void require_unit_interval(const Rational& x, const char* what) {
  if (x < 0 || x >= 1) throw DomainError(std::string(what) + ": " + to_string(x) + " is outside [0,1)");
}

/// |q|: length of the unique sigma ending in 1 with q = 0.sigma; |0| = 0.
inline std::uint64_t dyadic_length(const Rational& q) {
  require_unit_interval(q, "dyadic_length");
  if (!is_dyadic(q)) throw DomainError("dyadic_length: " + to_string(q) + " is not dyadic");
  if (q == 0) return 0;
  return msb(denominator(q));
}

/// The n-bit string of floor(x * 2^n), i.e. x truncated to n binary digits.
inline DyadicString truncate(const Rational& x, std::uint64_t n) {
  require_unit_interval(x, "truncate");
  Integer k = floor(x * pow2(static_cast<std::int64_t>(n)));
  std::string bits(n, '0');
  for (std::uint64_t i = 0; i < n; ++i)
    if (bit_test(k, static_cast<unsigned>(i))) bits[n - 1 - i] = '1';
  return DyadicString{std::move(bits)};
}

/// First n binary digits of a real limit in [0, 1]; 1 = 0.111... gives 1^n.
inline DyadicString limit_prefix(const Rational& x, std::uint64_t n) {
  if (x == 1) return DyadicString{std::string(n, '1')};
  return truncate(x, n);
}

/// Partial sum of 0.A(0)A(1)...: sum over i < n with i in A of 2^-(i+1).
template <std::predicate<std::uint64_t> Membership>
Rational real_from_set(const Membership& contains, std::uint64_t n) {
  Integer k = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    if (contains(i)) bit_set(k, static_cast<unsigned>(n - 1 - i));
  return Rational(k, Integer(1) << static_cast<unsigned>(n));
}

}  // namespace lcelab
