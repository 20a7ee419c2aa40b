#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace udooc {

// A binary unique word k = k_1 k_2 ... k_L, stored MSB-first. The paper
// indexes bits from 1; accessors here are 0-based, so bit(i) == k_{i+1}.
// Index conventions live in this class only.
class UniqueWord {
public:
  UniqueWord() = default;
  explicit UniqueWord(std::vector<std::uint8_t> bits);

  // Parses a "0101"-style string. Throws std::invalid_argument on anything
  // that is not a nonempty run of '0'/'1'.
  static UniqueWord parse(std::string_view text);

  std::size_t length() const { return bits_.size(); }
  int bit(std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const;

  // Integer value of bits [first, first+count), MSB-first.
  std::uint32_t window_value(std::size_t first, std::size_t count) const;

  friend auto operator<=>(const UniqueWord&, const UniqueWord&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

struct OverlapVector {
  // entries[j] = r_k(j), 0-based, so entries[0] == 1 always (a word
  // trivially overlaps itself at shift zero).
  std::vector<std::uint8_t> entries;

  friend bool operator==(const OverlapVector&, const OverlapVector&) = default;
};

// r_k(i): 1 iff 0 <= i <= L-1 and the suffix k_{i+1..L} equals the prefix
// k_{1..L-i}. Any integer i is accepted; out-of-range shifts give 0.
int overlap_function(const UniqueWord& k, long long i);

OverlapVector overlap_vector(const UniqueWord& k);

UniqueWord reverse(const UniqueWord& k);
UniqueWord complement(const UniqueWord& k);

// Lexicographically smallest element of {k, rev k, comp k, rev comp k}.
// Constant on each equivalence orbit and idempotent.
UniqueWord canonical_class_representative(const UniqueWord& k);

// N_L: number of distinct overlap vectors over all 2^L words of length L.
// Brute force over the whole length-L cube; L is capped at 24. (For
// reference, ln N_L / (ln L)^2 settles between 1/(2 ln 2) ~ 0.72 and
// 1/(2 ln(3/2)) ~ 1.23 as L grows; this is not computed here.)
// Throws std::invalid_argument outside [1, 24].
std::uint64_t count_overlap_vectors(int length);
std::uint64_t count_overlap_vectors_serial(int length);

}  // namespace udooc
