#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

#include "udooc/digraph.hpp"
#include "udooc/enumeration.hpp"
#include "udooc/errors.hpp"
#include "udooc/uw.hpp"

namespace udooc {

enum class FastPath {
  AllSame,      // k = 0^L or 1^L (Algorithms 1/2)
  NearAllSame,  // k = 0^(L-1)1 or 1^(L-1)0 (Algorithms 3/4)
  General,      // Algorithms 5/6 via the counting state machine
};

// UW-delimited concatenation of codewords: UW . c_1 . UW . ... . c_N . UW.
// An empty message list is framed as a single UW; the header's message
// count disambiguates it from one null message (UW UW).
struct FramedStream {
  UniqueWord uw;
  std::uint64_t message_count = 0;
  std::vector<std::uint8_t> payload;  // one bit per element

  // Container layout: "UDO1", uw length (1 octet), uw bits packed MSB-first
  // and zero-padded to an octet, message count (8-octet big-endian), payload
  // bit count (8-octet big-endian), payload bits packed MSB-first with the
  // final octet zero-padded.
  std::vector<std::uint8_t> to_bytes() const;

  // Parses a container. When trailer_offset is given, extra bytes after the
  // payload are permitted (e.g. a dictionary section) and the offset of the
  // first unread byte is stored; otherwise trailing bytes are an error.
  static FramedStream from_bytes(std::span<const std::uint8_t> bytes,
                                 std::size_t* trailer_offset = nullptr);
};

// Enumerative encoder/decoder state for one unique word. Count tables and
// the per-(state, remaining-length) walk-count memo grow monotonically and
// are guarded by a shared mutex, so all operations are safe to call
// concurrently.
class EncoderContext {
public:
  // Throws std::invalid_argument for L < 2 or L > 24. k in {01, 10} is
  // accepted (the codebook is valid, merely linear-growth).
  explicit EncoderContext(UniqueWord uw);

  const UniqueWord& uw() const { return uw_; }
  FastPath fast_path() const { return path_; }
  const AdjacencySet& adjacency() const { return adj_; }
  bool degenerate_growth() const;  // k in {01, 10}

  // |C_k(d, n)|: length-n codewords with prefix d. Throws
  // std::invalid_argument when d is longer than n.
  mpz_class prefix_count(std::span<const std::uint8_t> d, std::size_t n) const;

  // m-th codeword (m >= 1) in the length-then-lexicographic order; m = 1 is
  // the null codeword. If rho is non-null it receives the progressive
  // metrics rho_0 .. rho_n.
  std::vector<std::uint8_t> encode_index(const mpz_class& m,
                                         std::vector<mpz_class>* rho = nullptr) const;

  // Inverse of encode_index. Throws InvalidCodeword when c is not a valid
  // codeword for this unique word.
  mpz_class decode_codeword(std::span<const std::uint8_t> c) const;

  // Algorithms 5/6 unconditionally (reference path for the fast paths).
  std::vector<std::uint8_t> encode_index_general(const mpz_class& m,
                                                 std::vector<mpz_class>* rho = nullptr) const;
  mpz_class decode_codeword_general(std::span<const std::uint8_t> c) const;

  // Smallest n with F[n] >= m.
  std::size_t codeword_length_for_rank(const mpz_class& m) const;
  mpz_class codeword_count(std::size_t n) const;    // c[n]
  mpz_class cumulative_count(std::size_t n) const;  // F[n]

  // Throws InvalidCodeword if c cannot appear between two unique words.
  void check_codeword(std::span<const std::uint8_t> c) const;

private:
  enum class Shape { MajorityIsUwBit, MajorityIsComplement };

  void ensure_counts(std::size_t n) const;
  void ensure_rank(const mpz_class& m) const;
  void ensure_tails(std::size_t steps) const;
  std::size_t length_for_rank_locked(const mpz_class& m) const;
  Vertex walk_or_throw(std::span<const std::uint8_t> c) const;

  UniqueWord uw_;
  AdjacencySet adj_;
  FastPath path_ = FastPath::General;
  int majority_bit_ = 0;  // leading-bit value for the fast-path shapes
  detail::LccdeSeed seed_;

  mutable std::shared_mutex mu_;
  mutable std::vector<mpz_class> c_;
  mutable std::vector<mpz_class> F_;
  // tails_[s][v] = number of length-s walks from v to the ending vertex;
  // level L-1 is the counting-state indicator of the state machine.
  mutable std::vector<std::vector<mpz_class>> tails_;
};

FramedStream encode_stream(const EncoderContext& ctx, std::span<const mpz_class> indices);

// Parses the payload into codewords by a greedy left-to-right unique-word
// scan and decodes them, in parallel when jobs != 1 (0 = library default).
std::vector<mpz_class> decode_stream(const EncoderContext& ctx, const FramedStream& stream,
                                     int jobs = 0);
std::vector<mpz_class> decode_stream_serial(const EncoderContext& ctx, const FramedStream& stream);

bool is_valid_codeword(const EncoderContext& ctx, std::span<const std::uint8_t> c);

}  // namespace udooc
