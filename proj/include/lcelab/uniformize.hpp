#pragma once

// Turning a machine B for beta into a machine A for alpha, given a total
// translation witness f for alpha <= beta with constant c.
//
// For every code x of B with sigma = B(x), n = |sigma| and tau the n-bit
// truncation of f(0.sigma), A gets the 2^L codes x.w (L = ceil(log2(c+1)),
// w read as an L-bit unsigned integer) with A(x.w) = y, 0.y = 0.tau + w 2^-n.
// Because alpha|n - 0.tau is a nonnegative multiple of 2^-n below (c+1) 2^-n,
// one pad always hits alpha|n, so K_A(alpha|n) <= K_B(beta|n) + L.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcelab/desk_real.hpp"
#include "lcelab/errors.hpp"
#include "lcelab/machine.hpp"
#include "lcelab/rational.hpp"
#include "lcelab/reducibility.hpp"

namespace lcelab {

/// What to do with pads whose value 0.tau + w 2^-n does not fit in n bits.
enum class OverflowPolicy {
  saturate,  ///< output 1^n, keeping every pad so the domain measure is preserved
  drop,      ///< omit the code
};

/// Pad length ceil(log2(c + 1)).
inline std::uint64_t pad_length_for(const Rational& c) {
  if (c <= 0) throw ConfigError("pad length: constant must be positive");
  return static_cast<std::uint64_t>(ceil_log2(c + 1));
}

/// One code of B whose translated value could not be used.
struct CodeFailure {
  std::string code;
  std::string reason;
};

class ConstructionError : public Error {
 public:
  explicit ConstructionError(std::vector<CodeFailure> failures)
      : Error(describe(failures)), failures_(std::move(failures)) {}

  const std::vector<CodeFailure>& failures() const { return failures_; }

 private:
  static std::string describe(const std::vector<CodeFailure>& failures) {
    std::string s = "uniformize failed for " + std::to_string(failures.size()) + " code(s):";
    for (const auto& f : failures) s += " [" + f.code + ": " + f.reason + "]";
    return s;
  }

  std::vector<CodeFailure> failures_;
};

inline PrefixMachine uniformize(const PrefixMachine& b, const TranslationWitness& f, const Rational& c,
                                OverflowPolicy overflow = OverflowPolicy::saturate) {
  const std::uint64_t pad = pad_length_for(c);
  if (pad > 20) throw ConfigError("uniformize: pad length " + std::to_string(pad) + " is too large");
  const std::uint64_t pads = std::uint64_t{1} << pad;

  std::vector<PrefixMachine::Entry> entries;
  std::vector<CodeFailure> failures;
  b.for_each([&](const std::string& x, const std::string& sigma, std::uint64_t stage) {
    const std::size_t n = sigma.size();
    auto v = f(DyadicString{sigma}.value());
    if (!v) {
      failures.push_back({x, "f(0." + sigma + ") is undefined"});
      return;
    }
    if (*v < 0 || *v >= 1) {
      failures.push_back({x, "f(0." + sigma + ") = " + to_string(*v) + " is outside [0,1)"});
      return;
    }
    const Integer tau = floor(*v * pow2(static_cast<std::int64_t>(n)));
    const Integer top = Integer(1) << static_cast<unsigned>(n);
    for (std::uint64_t w = 0; w < pads; ++w) {
      const Integer y = tau + w;
      std::string out;
      if (y < top) {
        out = std::string(n, '0');
        for (std::size_t i = 0; i < n; ++i)
          if (bit_test(y, static_cast<unsigned>(i))) out[n - 1 - i] = '1';
      } else if (overflow == OverflowPolicy::saturate) {
        out = std::string(n, '1');
      } else {
        continue;
      }
      entries.push_back({x + bits_of(w, pad), std::move(out), stage});
    }
  });
  if (!failures.empty()) throw ConstructionError(std::move(failures));
  return PrefixMachine("uniformize(" + b.name() + "," + f.name + ")", std::move(entries), pad);
}

struct UschReport {
  std::uint64_t constant = 0;
  std::uint64_t lengths_checked = 0;  ///< n with K_B(beta|n) finite
  struct Failure {
    std::uint64_t n;
    std::optional<std::uint64_t> k_a;
    std::uint64_t k_b;
  };
  std::optional<Failure> first_failure;

  bool passed() const { return !first_failure; }
};

/// Checks K_A(alpha|n) <= K_B(beta|n) + c for every n in 1..n_max where
/// K_B(beta|n) is finite.
inline UschReport check_usch(const PrefixMachine& a, const PrefixMachine& b, const DeskReal& alpha,
                             const DeskReal& beta, std::uint64_t c, std::uint64_t n_max) {
  if (n_max < 1) throw ConfigError("check_usch: n_max must be at least 1");
  UschReport report;
  report.constant = c;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    auto k_b = complexity(b, limit_prefix(Oracle::limit(beta), n).bits);
    if (!k_b) continue;
    ++report.lengths_checked;
    auto k_a = complexity(a, limit_prefix(Oracle::limit(alpha), n).bits);
    if (!k_a || *k_a > *k_b + c) {
      report.first_failure = UschReport::Failure{n, k_a, *k_b};
      break;
    }
  }
  return report;
}

}  // namespace lcelab
