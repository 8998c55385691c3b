#pragma once

// Finite prefix-free machines: code -> output tables with Kraft measure and
// machine complexity K_M.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcelab/errors.hpp"
#include "lcelab/rational.hpp"

namespace lcelab {

inline bool is_bit_string(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

/// The n-bit big-endian binary form of v (v < 2^n).
inline std::string bits_of(std::uint64_t v, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if ((v >> i) & 1U) s[n - 1 - i] = '1';
  return s;
}

/// A validated prefix-free table.  Instances only exist in a valid state.
class PrefixMachine {
 public:
  struct Entry {
    std::string code;
    std::string output;
    /// Stage at which the code is seen to halt; used by the toy Omega approximation.
    std::uint64_t stage = 0;
  };

  /// Throws InvariantError naming the offending pair if the codes are not
  /// prefix-free, and ConfigError for non-binary strings or duplicate codes.
  /// A missing stage (0) defaults to the code length, with the empty code at stage 1.
  PrefixMachine(std::string name, std::vector<Entry> entries, std::optional<std::uint64_t> pad_length = {})
      : name_(std::move(name)), pad_length_(pad_length) {
    for (auto& e : entries) {
      if (!is_bit_string(e.code) || !is_bit_string(e.output))
        throw ConfigError("machine " + name_ + ": codes and outputs must be 0/1 strings");
      if (e.stage == 0) e.stage = std::max<std::uint64_t>(1, e.code.size());
      if (!table_.emplace(e.code, std::make_pair(e.output, e.stage)).second)
        throw ConfigError("machine " + name_ + ": duplicate code '" + e.code + "'");
    }
    // In lexicographic order a code that is a prefix of another is followed
    // directly by some extension of it, so adjacent pairs suffice.
    for (auto it = table_.begin(); it != table_.end(); ++it) {
      auto next = std::next(it);
      if (next != table_.end() && next->first.starts_with(it->first))
        throw InvariantError("prefix violation (" + it->first + ", " + next->first + ")");
    }
  }

  const std::string& name() const { return name_; }
  std::optional<std::uint64_t> pad_length() const { return pad_length_; }
  std::size_t size() const { return table_.size(); }

  std::optional<std::string> run(const std::string& code) const {
    auto it = table_.find(code);
    if (it == table_.end()) return std::nullopt;
    return it->second.first;
  }

  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    out.reserve(table_.size());
    for (const auto& [code, v] : table_) out.push_back({code, v.first, v.second});
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [code, v] : table_) fn(code, v.first, v.second);
  }

 private:
  std::string name_;
  std::optional<std::uint64_t> pad_length_;
  std::map<std::string, std::pair<std::string, std::uint64_t>> table_;
};

/// Kraft measure: sum over the domain of 2^-|x|.
inline Rational measure(const PrefixMachine& m) {
  Rational total = 0;
  m.for_each([&](const std::string& code, const std::string&, std::uint64_t) {
    total += pow2(-static_cast<std::int64_t>(code.size()));
  });
  if (total > 1) throw InvariantError("machine " + m.name() + ": Kraft sum exceeds 1");
  return total;
}

/// Measure of the codes halted by stage s.
inline Rational stage_measure(const PrefixMachine& m, std::uint64_t s) {
  Rational total = 0;
  m.for_each([&](const std::string& code, const std::string&, std::uint64_t stage) {
    if (stage <= s) total += pow2(-static_cast<std::int64_t>(code.size()));
  });
  return total;
}

/// The last halting stage (0 for the empty machine).
inline std::uint64_t final_stage(const PrefixMachine& m) {
  std::uint64_t s = 0;
  m.for_each([&](const std::string&, const std::string&, std::uint64_t stage) { s = std::max(s, stage); });
  return s;
}

/// K_M(tau): length of the shortest code printing tau, or nullopt for infinity.
inline std::optional<std::uint64_t> complexity(const PrefixMachine& m, const std::string& tau) {
  std::optional<std::uint64_t> best;
  m.for_each([&](const std::string& code, const std::string& out, std::uint64_t) {
    if (out == tau && (!best || code.size() < *best)) best = code.size();
  });
  return best;
}

}  // namespace lcelab
