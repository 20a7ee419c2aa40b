#include "udooc/codec.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <mutex>
#include <stdexcept>

#include "udooc/bitio.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace udooc {

namespace {

constexpr char kMagic[4] = {'U', 'D', 'O', '1'};

std::vector<std::size_t> kmp_occurrences(std::span<const std::uint8_t> pattern,
                                         std::span<const std::uint8_t> text) {
  const std::size_t m = pattern.size();
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  std::vector<std::size_t> occ;
  for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = fail[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == m) {
      occ.push_back(i + 1 - m);
      k = fail[k - 1];
    }
  }
  return occ;
}

}  // namespace

std::vector<std::uint8_t> FramedStream::to_bytes() const {
  BitWriter w;
  for (char c : kMagic) w.put_byte(static_cast<std::uint8_t>(c));
  w.put_byte(static_cast<std::uint8_t>(uw.length()));
  w.put_bits(uw.bits());
  w.flush();
  w.put_u64_be(message_count);
  w.put_u64_be(payload.size());
  w.put_bits(payload);
  return w.take();
}

FramedStream FramedStream::from_bytes(std::span<const std::uint8_t> bytes,
                                      std::size_t* trailer_offset) {
  BitReader r(bytes);
  try {
    char magic[4];
    for (char& c : magic) c = static_cast<char>(r.get_byte());
    if (std::memcmp(magic, kMagic, 4) != 0) throw FramingError("bad container magic");
    const std::size_t uw_len = r.get_byte();
    if (uw_len == 0) throw FramingError("container declares an empty unique word");
    std::vector<std::uint8_t> uw_bits(uw_len);
    for (auto& b : uw_bits) b = static_cast<std::uint8_t>(r.get_bit());
    while (r.position_bits() % 8 != 0) r.get_bit();  // skip pad

    FramedStream s;
    s.uw = UniqueWord(std::move(uw_bits));
    s.message_count = r.get_u64_be();
    const std::uint64_t payload_bits = r.get_u64_be();
    if (payload_bits > r.remaining_bits()) throw FramingError("container truncated");
    s.payload.resize(payload_bits);
    for (auto& b : s.payload) b = static_cast<std::uint8_t>(r.get_bit());
    while (r.position_bits() % 8 != 0) r.get_bit();  // skip pad

    const std::size_t consumed = static_cast<std::size_t>(r.position_bits() / 8);
    if (trailer_offset)
      *trailer_offset = consumed;
    else if (consumed != bytes.size())
      throw FramingError("trailing bytes after payload");
    return s;
  } catch (const FramingError&) {
    throw;
  } catch (const std::exception& e) {
    throw FramingError(std::string("malformed container: ") + e.what());
  }
}

EncoderContext::EncoderContext(UniqueWord uw) : uw_(std::move(uw)) {
  if (uw_.length() < 2)
    throw std::invalid_argument("a single-bit unique word forbids one symbol everywhere; L >= 2");
  adj_ = adjacency_set(uw_);
  seed_ = detail::lccde_seed(uw_, adj_);

  const auto& bits = uw_.bits();
  const std::size_t L = bits.size();
  const bool head_uniform = std::all_of(bits.begin(), bits.end() - 1,
                                        [&](std::uint8_t b) { return b == bits.front(); });
  if (head_uniform && bits.back() == bits.front())
    path_ = FastPath::AllSame;
  else if (head_uniform)
    path_ = FastPath::NearAllSame;
  else
    path_ = FastPath::General;
  majority_bit_ = bits.front();

  c_.emplace_back(1);
  for (std::size_t n = 1; n < L; ++n) c_.push_back(walk_count(adj_, n + L - 1));
  detail::extend_codeword_counts(seed_, c_, std::max<std::size_t>(2 * L, 64));
  F_ = cumulative(c_);
}

bool EncoderContext::degenerate_growth() const {
  return uw_.length() == 2 && uw_.bit(0) != uw_.bit(1);
}

void EncoderContext::ensure_counts(std::size_t n) const {
  {
    std::shared_lock lock(mu_);
    if (n < c_.size()) return;
  }
  std::unique_lock lock(mu_);
  if (n < c_.size()) return;
  detail::extend_codeword_counts(seed_, c_, std::max(n, 2 * c_.size()));
  for (std::size_t i = F_.size(); i < c_.size(); ++i) F_.push_back(F_[i - 1] + c_[i]);
}

void EncoderContext::ensure_rank(const mpz_class& m) const {
  for (;;) {
    {
      std::shared_lock lock(mu_);
      if (F_.back() >= m) return;
    }
    std::unique_lock lock(mu_);
    if (F_.back() >= m) return;
    const std::size_t target = 2 * c_.size();
    detail::extend_codeword_counts(seed_, c_, target);
    for (std::size_t i = F_.size(); i < c_.size(); ++i) F_.push_back(F_[i - 1] + c_[i]);
  }
}

void EncoderContext::ensure_tails(std::size_t steps) const {
  {
    std::shared_lock lock(mu_);
    if (steps < tails_.size()) return;
  }
  std::unique_lock lock(mu_);
  const Vertex n = adj_.graph.vertex_count();
  if (tails_.empty()) {
    std::vector<mpz_class> level0(n, 0);
    level0[adj_.end_vertex] = 1;
    tails_.push_back(std::move(level0));
  }
  while (tails_.size() <= steps) {
    const auto& prev = tails_.back();
    std::vector<mpz_class> level(n, 0);
    for (Vertex v = 0; v < n; ++v)
      for (int b = 0; b < 2; ++b)
        if (long long j = adj_.graph.successor(v, b); j >= 0)
          level[v] += prev[static_cast<std::size_t>(j)];
    tails_.push_back(std::move(level));
  }
}

std::size_t EncoderContext::length_for_rank_locked(const mpz_class& m) const {
  const auto it = std::lower_bound(F_.begin(), F_.end(), m);
  return static_cast<std::size_t>(it - F_.begin());
}

std::size_t EncoderContext::codeword_length_for_rank(const mpz_class& m) const {
  if (m < 1) throw std::invalid_argument("message index must be >= 1");
  ensure_rank(m);
  std::shared_lock lock(mu_);
  return length_for_rank_locked(m);
}

mpz_class EncoderContext::codeword_count(std::size_t n) const {
  ensure_counts(n);
  std::shared_lock lock(mu_);
  return c_[n];
}

mpz_class EncoderContext::cumulative_count(std::size_t n) const {
  ensure_counts(n);
  std::shared_lock lock(mu_);
  return F_[n];
}

Vertex EncoderContext::walk_or_throw(std::span<const std::uint8_t> c) const {
  long long state = adj_.start_vertex;
  for (std::size_t i = 0; i < c.size(); ++i) {
    state = adj_.graph.successor(static_cast<Vertex>(state), c[i]);
    if (state < 0)
      throw InvalidCodeword("unique word would appear inside UW.c.UW at bit " + std::to_string(i));
  }
  long long tail = state;
  for (std::size_t i = 0; i + 1 < uw_.length(); ++i) {
    tail = adj_.graph.successor(static_cast<Vertex>(tail), uw_.bit(i));
    if (tail < 0) throw InvalidCodeword("codeword cannot be followed by the unique word");
  }
  return static_cast<Vertex>(state);
}

void EncoderContext::check_codeword(std::span<const std::uint8_t> c) const {
  if (c.empty()) return;  // the null codeword is always legal
  walk_or_throw(c);
}

mpz_class EncoderContext::prefix_count(std::span<const std::uint8_t> d, std::size_t n) const {
  if (d.size() > n) throw std::invalid_argument("prefix longer than the codeword length");
  if (d.empty()) return n == 0 ? mpz_class(1) : codeword_count(n);

  const std::size_t steps = (n - d.size()) + uw_.length() - 1;
  ensure_tails(steps);
  long long state = adj_.start_vertex;
  for (auto b : d) {
    state = adj_.graph.successor(static_cast<Vertex>(state), b);
    if (state < 0) return 0;  // dead prefix
  }
  std::shared_lock lock(mu_);
  return tails_[steps][static_cast<std::size_t>(state)];
}

std::vector<std::uint8_t> EncoderContext::encode_index_general(const mpz_class& m,
                                                               std::vector<mpz_class>* rho) const {
  if (m < 1) throw std::invalid_argument("message index must be >= 1");
  if (rho) rho->clear();
  if (m == 1) {
    if (rho) rho->push_back(1);
    return {};
  }
  ensure_rank(m);
  const std::size_t L = uw_.length();
  std::size_t n;
  {
    std::shared_lock lock(mu_);
    n = length_for_rank_locked(m);
  }
  ensure_tails(n + L - 2);

  std::shared_lock lock(mu_);
  mpz_class progressive = m - F_[n - 1];
  if (rho) rho->push_back(progressive);
  std::vector<std::uint8_t> out;
  out.reserve(n);
  const mpz_class zero = 0;
  long long state = adj_.start_vertex;
  for (std::size_t i = 1; i <= n; ++i) {
    const long long s0 = adj_.graph.successor(static_cast<Vertex>(state), 0);
    const mpz_class& dummy = s0 >= 0 ? tails_[n - i + L - 1][static_cast<std::size_t>(s0)] : zero;
    if (progressive <= dummy) {
      out.push_back(0);
      state = s0;
    } else {
      progressive -= dummy;
      out.push_back(1);
      state = adj_.graph.successor(static_cast<Vertex>(state), 1);
    }
    if (state < 0) throw std::logic_error("encode walked into the forbidden edge");
    if (rho) rho->push_back(progressive);
  }
  return out;
}

mpz_class EncoderContext::decode_codeword_general(std::span<const std::uint8_t> c) const {
  if (c.empty()) return 1;
  const std::size_t n = c.size();
  const std::size_t L = uw_.length();
  ensure_counts(n);
  ensure_tails(n + L - 2);

  std::shared_lock lock(mu_);
  mpz_class m = F_[n - 1] + 1;
  long long state = adj_.start_vertex;
  for (std::size_t i = 1; i <= n; ++i) {
    const int bit = c[i - 1];
    if (bit) {
      if (long long s0 = adj_.graph.successor(static_cast<Vertex>(state), 0); s0 >= 0)
        m += tails_[n - i + L - 1][static_cast<std::size_t>(s0)];
    }
    state = adj_.graph.successor(static_cast<Vertex>(state), bit);
    if (state < 0)
      throw InvalidCodeword("unique word would appear inside UW.c.UW at bit " +
                            std::to_string(i - 1));
  }
  lock.unlock();
  // Terminal state must be a counting state: the closing UW must be
  // reachable from it.
  long long tail = state;
  for (std::size_t i = 0; i + 1 < L; ++i) {
    tail = adj_.graph.successor(static_cast<Vertex>(tail), uw_.bit(i));
    if (tail < 0) throw InvalidCodeword("codeword cannot be followed by the unique word");
  }
  return m;
}

std::vector<std::uint8_t> EncoderContext::encode_index(const mpz_class& m,
                                                       std::vector<mpz_class>* rho) const {
  if (path_ == FastPath::General) return encode_index_general(m, rho);
  if (m < 1) throw std::invalid_argument("message index must be >= 1");
  if (rho) rho->clear();
  if (m == 1) {
    if (rho) rho->push_back(1);
    return {};
  }
  ensure_rank(m);

  const std::size_t L = uw_.length();
  std::shared_lock lock(mu_);
  const std::size_t n = length_for_rank_locked(m);
  mpz_class progressive = m - F_[n - 1];
  if (rho) rho->push_back(progressive);
  // remaining = |C_k(d, n)| for the emitted prefix d; dummy = |C_k(d0, n)|.
  // Appending the bit opposite to the UW's repeated bit resets the state, so
  // that branch holds a full shorter count table value (Algorithms 1 and 3);
  // the table value is read as zero when a 1...10-shaped UW would be
  // completed by the appended bit (prefix already ends with L-1 repeats).
  mpz_class remaining = c_[n];
  std::vector<std::uint8_t> out;
  out.reserve(n);
  std::size_t run = 0;
  mpz_class dummy;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t idx = path_ == FastPath::AllSame ? n - i + 1 : n - i;
    const bool blocked = path_ == FastPath::NearAllSame && run >= L - 1;
    if (majority_bit_ == 1) {
      if (blocked) dummy = 0; else dummy = c_[idx];
    } else {
      dummy = remaining;
      if (!blocked) dummy -= c_[idx];
    }
    if (progressive <= dummy) {
      out.push_back(0);
      remaining = dummy;
      run = majority_bit_ == 0 ? run + 1 : 0;
    } else {
      progressive -= dummy;
      out.push_back(1);
      remaining -= dummy;
      run = majority_bit_ == 1 ? run + 1 : 0;
    }
    if (rho) rho->push_back(progressive);
  }
  return out;
}

mpz_class EncoderContext::decode_codeword(std::span<const std::uint8_t> c) const {
  if (path_ == FastPath::General) return decode_codeword_general(c);
  if (c.empty()) return 1;
  walk_or_throw(c);

  const std::size_t n = c.size();
  const std::size_t L = uw_.length();
  ensure_counts(n);
  std::shared_lock lock(mu_);
  mpz_class m = F_[n - 1] + 1;
  mpz_class remaining = c_[n];
  std::size_t run = 0;
  mpz_class dummy;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t idx = path_ == FastPath::AllSame ? n - i + 1 : n - i;
    const bool blocked = path_ == FastPath::NearAllSame && run >= L - 1;
    if (majority_bit_ == 1) {
      if (blocked) dummy = 0; else dummy = c_[idx];
    } else {
      dummy = remaining;
      if (!blocked) dummy -= c_[idx];
    }
    if (c[i - 1]) {
      m += dummy;
      remaining -= dummy;
      run = majority_bit_ == 1 ? run + 1 : 0;
    } else {
      remaining.swap(dummy);
      run = majority_bit_ == 0 ? run + 1 : 0;
    }
  }
  return m;
}

FramedStream encode_stream(const EncoderContext& ctx, std::span<const mpz_class> indices) {
  FramedStream s;
  s.uw = ctx.uw();
  s.message_count = indices.size();
  const auto& uw_bits = ctx.uw().bits();
  s.payload.insert(s.payload.end(), uw_bits.begin(), uw_bits.end());
  for (const auto& m : indices) {
    const auto codeword = ctx.encode_index(m);
    s.payload.insert(s.payload.end(), codeword.begin(), codeword.end());
    s.payload.insert(s.payload.end(), uw_bits.begin(), uw_bits.end());
  }
  return s;
}

namespace {

struct Segment {
  std::size_t offset;
  std::size_t length;
};

std::vector<Segment> parse_segments(const EncoderContext& ctx, const FramedStream& stream) {
  const auto& uw_bits = ctx.uw().bits();
  const std::size_t L = uw_bits.size();
  if (stream.payload.size() < L) throw FramingError("payload shorter than the unique word");
  const auto occ = kmp_occurrences(uw_bits, stream.payload);

  // Greedy position-ordered scan: the first separator sits at 0, each next
  // one is the first occurrence L or more bits further on. Occurrences
  // strictly between separators cannot exist for valid codewords; ones that
  // overlap a separator (all-zero UWs around null codewords) are skipped by
  // the jump.
  std::vector<std::size_t> separators;
  auto it = occ.begin();
  if (it == occ.end() || *it != 0) throw FramingError("payload does not begin with the unique word");
  separators.push_back(0);
  while (separators.back() + L < stream.payload.size()) {
    const std::size_t from = separators.back() + L;
    it = std::lower_bound(it, occ.end(), from);
    if (it == occ.end()) throw FramingError("payload does not end with the unique word");
    separators.push_back(*it);
  }
  if (separators.back() + L != stream.payload.size())
    throw FramingError("payload does not end with the unique word");

  std::vector<Segment> segments;
  segments.reserve(separators.size() - 1);
  for (std::size_t i = 0; i + 1 < separators.size(); ++i)
    segments.push_back(
        Segment{separators[i] + L, separators[i + 1] - (separators[i] + L)});
  if (segments.size() != stream.message_count)
    throw FramingError("message count mismatch: header says " +
                       std::to_string(stream.message_count) + ", payload holds " +
                       std::to_string(segments.size()));
  return segments;
}

std::vector<mpz_class> decode_segments(const EncoderContext& ctx, const FramedStream& stream,
                                       const std::vector<Segment>& segments, int jobs) {
  std::vector<mpz_class> out(segments.size());
  std::size_t max_len = 0;
  for (const auto& seg : segments) max_len = std::max(max_len, seg.length);
  if (max_len > 0) {
    // Pre-extend the shared tables so the parallel phase is read-only.
    ctx.codeword_count(max_len);
    if (ctx.fast_path() == FastPath::General) {
      const std::uint8_t probe_bit = 0;
      ctx.prefix_count(std::span<const std::uint8_t>(&probe_bit, 1), max_len);
    }
  }

  std::atomic<bool> failed{false};
  std::string first_error;
  std::size_t first_error_at = segments.size();
  std::mutex error_mu;

  const bool parallel = jobs != 1 && segments.size() > 1;
#ifdef _OPENMP
  const int thread_count = jobs <= 0 ? omp_get_max_threads() : jobs;
#else
  const int thread_count = 1;
#endif
  (void)thread_count;

#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count) if (parallel)
  for (long long i = 0; i < static_cast<long long>(segments.size()); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      const auto& seg = segments[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = ctx.decode_codeword(
          std::span<const std::uint8_t>(stream.payload.data() + seg.offset, seg.length));
    } catch (const std::exception& e) {
      std::scoped_lock lock(error_mu);
      if (static_cast<std::size_t>(i) < first_error_at) {
        first_error_at = static_cast<std::size_t>(i);
        first_error = e.what();
      }
      failed.store(true, std::memory_order_relaxed);
    }
  }
  if (failed.load())
    throw InvalidCodeword("codeword " + std::to_string(first_error_at) + ": " + first_error);
  return out;
}

}  // namespace

std::vector<mpz_class> decode_stream(const EncoderContext& ctx, const FramedStream& stream,
                                     int jobs) {
  if (stream.uw != ctx.uw())
    throw std::invalid_argument("stream unique word does not match the context");
  return decode_segments(ctx, stream, parse_segments(ctx, stream), jobs);
}

std::vector<mpz_class> decode_stream_serial(const EncoderContext& ctx, const FramedStream& stream) {
  if (stream.uw != ctx.uw())
    throw std::invalid_argument("stream unique word does not match the context");
  const auto segments = parse_segments(ctx, stream);
  std::vector<mpz_class> out;
  out.reserve(segments.size());
  for (const auto& seg : segments)
    out.push_back(ctx.decode_codeword(
        std::span<const std::uint8_t>(stream.payload.data() + seg.offset, seg.length)));
  return out;
}

bool is_valid_codeword(const EncoderContext& ctx, std::span<const std::uint8_t> c) {
  try {
    ctx.check_codeword(c);
    return true;
  } catch (const InvalidCodeword&) {
    return false;
  }
}

}  // namespace udooc
