#include "udooc/uw.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace udooc {

UniqueWord::UniqueWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("unique word must be nonempty");
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("unique word bits must be 0 or 1");
}

UniqueWord UniqueWord::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("unique word must be nonempty");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("unique word may only contain 0 and 1: got '" +
                                  std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return UniqueWord(std::move(bits));
}

std::string UniqueWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::uint32_t UniqueWord::window_value(std::size_t first, std::size_t count) const {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < count; ++i) v = (v << 1) | bits_[first + i];
  return v;
}

int overlap_function(const UniqueWord& k, long long i) {
  const long long L = static_cast<long long>(k.length());
  if (i < 0 || i > L - 1) return 0;
  for (long long j = 0; j + i < L; ++j)
    if (k.bit(static_cast<std::size_t>(j + i)) != k.bit(static_cast<std::size_t>(j))) return 0;
  return 1;
}

OverlapVector overlap_vector(const UniqueWord& k) {
  OverlapVector r;
  r.entries.resize(k.length());
  for (std::size_t i = 0; i < k.length(); ++i)
    r.entries[i] = static_cast<std::uint8_t>(overlap_function(k, static_cast<long long>(i)));
  return r;
}

UniqueWord reverse(const UniqueWord& k) {
  std::vector<std::uint8_t> bits(k.bits().rbegin(), k.bits().rend());
  return UniqueWord(std::move(bits));
}

UniqueWord complement(const UniqueWord& k) {
  std::vector<std::uint8_t> bits(k.bits());
  for (auto& b : bits) b ^= 1;
  return UniqueWord(std::move(bits));
}

UniqueWord canonical_class_representative(const UniqueWord& k) {
  std::array<UniqueWord, 4> orbit = {k, reverse(k), complement(k), reverse(complement(k))};
  return *std::min_element(orbit.begin(), orbit.end());
}

namespace {

// Overlap mask of the L-bit word w: bit i (from the top, i = 0..L-1) set iff
// the length-(L-i) suffix equals the prefix. Bit 0 is always set.
std::uint32_t overlap_mask(std::uint32_t w, int L) {
  std::uint32_t mask = 0;
  for (int i = 0; i < L; ++i) {
    const int len = L - i;
    const std::uint32_t suffix = w & ((len == 32 ? 0 : (1u << len)) - 1u);
    const std::uint32_t prefix = w >> i;
    if (suffix == prefix) mask |= (1u << i);
  }
  return mask;
}

std::uint64_t count_masks(int L, bool parallel) {
  if (L < 1 || L > 24) throw std::invalid_argument("count_overlap_vectors: L must be in [1, 24]");
  const std::uint64_t words = 1ull << L;
  const std::size_t slots = static_cast<std::size_t>(1) << L;
  std::vector<std::uint64_t> seen((slots + 63) / 64, 0);

#ifdef _OPENMP
  if (parallel && L >= 16) {
    const int threads = omp_get_max_threads();
    std::vector<std::vector<std::uint64_t>> local(threads,
                                                  std::vector<std::uint64_t>(seen.size(), 0));
#pragma omp parallel
    {
      auto& mine = local[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (long long w = 0; w < static_cast<long long>(words); ++w) {
        const std::uint32_t m = overlap_mask(static_cast<std::uint32_t>(w), L);
        mine[m >> 6] |= 1ull << (m & 63);
      }
    }
    for (const auto& mine : local)
      for (std::size_t i = 0; i < seen.size(); ++i) seen[i] |= mine[i];
  } else
#endif
  {
    (void)parallel;
    for (std::uint64_t w = 0; w < words; ++w) {
      const std::uint32_t m = overlap_mask(static_cast<std::uint32_t>(w), L);
      seen[m >> 6] |= 1ull << (m & 63);
    }
  }

  std::uint64_t n = 0;
  for (auto word : seen) n += static_cast<std::uint64_t>(__builtin_popcountll(word));
  return n;
}

}  // namespace

std::uint64_t count_overlap_vectors(int length) { return count_masks(length, true); }
std::uint64_t count_overlap_vectors_serial(int length) { return count_masks(length, false); }

}  // namespace udooc
