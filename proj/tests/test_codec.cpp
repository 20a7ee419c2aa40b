#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "udooc/codec.hpp"

using udooc::EncoderContext;
using udooc::FramedStream;
using udooc::UniqueWord;

namespace {

std::vector<std::uint8_t> bits_of(const std::string& s) {
  std::vector<std::uint8_t> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<std::uint8_t>(c - '0'));
  return out;
}

std::string to_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("context rejects L < 2 and flags degenerate words") {
  CHECK_THROWS_AS(EncoderContext(UniqueWord::parse("0")), std::invalid_argument);
  CHECK(EncoderContext(UniqueWord::parse("01")).degenerate_growth());
  CHECK(EncoderContext(UniqueWord::parse("10")).degenerate_growth());
  CHECK_FALSE(EncoderContext(UniqueWord::parse("00")).degenerate_growth());
}

TEST_CASE("fast path detection") {
  CHECK(EncoderContext(UniqueWord::parse("0000")).fast_path() == udooc::FastPath::AllSame);
  CHECK(EncoderContext(UniqueWord::parse("1111")).fast_path() == udooc::FastPath::AllSame);
  CHECK(EncoderContext(UniqueWord::parse("0001")).fast_path() == udooc::FastPath::NearAllSame);
  CHECK(EncoderContext(UniqueWord::parse("11110")).fast_path() == udooc::FastPath::NearAllSame);
  CHECK(EncoderContext(UniqueWord::parse("010")).fast_path() == udooc::FastPath::General);
  CHECK(EncoderContext(UniqueWord::parse("0111")).fast_path() == udooc::FastPath::General);
}

TEST_CASE("prefix counts of Example 3") {
  EncoderContext ctx(UniqueWord::parse("010"));
  CHECK(ctx.prefix_count(bits_of("0"), 4) == 4);
  CHECK(ctx.prefix_count(bits_of("00"), 4) == 2);
  CHECK(ctx.prefix_count(bits_of("010"), 4) == 0);
  CHECK(ctx.prefix_count(bits_of("0110"), 4) == 1);
  CHECK(ctx.prefix_count({}, 5) == ctx.codeword_count(5));
  CHECK_THROWS_AS(ctx.prefix_count(bits_of("00000"), 4), std::invalid_argument);
}

TEST_CASE("prefix count for 00 with d=1, n=3") {
  EncoderContext ctx(UniqueWord::parse("00"));
  CHECK(ctx.prefix_count(bits_of("1"), 3) == 2);  // 101 and 111
}

TEST_CASE("Example 3 encode: index 11 -> 0110 with metrics 3,3,1,1") {
  EncoderContext ctx(UniqueWord::parse("010"));
  std::vector<mpz_class> rho;
  CHECK(to_string(ctx.encode_index(11, &rho)) == "0110");
  REQUIRE(rho.size() == 5);
  CHECK(rho[0] == 3);
  CHECK(rho[1] == 3);
  CHECK(rho[2] == 1);
  CHECK(rho[3] == 1);
}

TEST_CASE("Example 3 encode: indices 9..15 are the seven length-4 codewords") {
  EncoderContext ctx(UniqueWord::parse("010"));
  const char* want[] = {"0000", "0011", "0110", "0111", "1100", "1110", "1111"};
  for (int m = 9; m <= 15; ++m) CHECK(to_string(ctx.encode_index(m)) == want[m - 9]);
}

TEST_CASE("index 1 is the null codeword; inverse gives 1") {
  for (const char* uw : {"00", "010", "0001", "110"}) {
    EncoderContext ctx(UniqueWord::parse(uw));
    CHECK(ctx.encode_index(1).empty());
    CHECK(ctx.decode_codeword({}) == 1);
  }
  CHECK_THROWS_AS(EncoderContext(UniqueWord::parse("00")).encode_index(0), std::invalid_argument);
}

TEST_CASE("decode inverse of Example 3 and Fig. 1 rank") {
  EncoderContext ctx010(UniqueWord::parse("010"));
  CHECK(ctx010.decode_codeword(bits_of("0110")) == 11);
  EncoderContext ctx00(UniqueWord::parse("00"));
  CHECK(ctx00.decode_codeword(bits_of("101")) == 4);
}

TEST_CASE("bijectivity and brute-force level agreement for small words") {
  for (int L = 2; L <= 5; ++L) {
    for (std::uint32_t v = 0; v < (1u << L); ++v) {
      const auto k = oracle::uw_from_value(v, L);
      EncoderContext ctx(k);
      const mpz_class top = ctx.cumulative_count(10);
      mpz_class m = 1;
      std::size_t n = 0;
      std::vector<oracle::Bits> level = {{}};
      std::size_t level_pos = 0;
      for (; m <= top; ++m) {
        if (m > ctx.cumulative_count(n)) {
          ++n;
          level = oracle::brute_force_codewords(k, n);
          level_pos = 0;
          while (level.empty()) {
            ++n;
            level = oracle::brute_force_codewords(k, n);
          }
        }
        const auto code = ctx.encode_index(m);
        CHECK(code == level[level_pos]);
        CHECK(ctx.decode_codeword(code) == m);
        ++level_pos;
      }
    }
  }
}

TEST_CASE("regression: 1..10-shaped fast path with a prefix ending in 1^(L-1)") {
  // The index whose codeword is 111 (all codewords of length 3 for UW 110
  // except 110 itself): the count of the 0-branch must drop to zero once the
  // emitted prefix ends with two ones.
  EncoderContext ctx(UniqueWord::parse("110"));
  CHECK(ctx.fast_path() == udooc::FastPath::NearAllSame);
  CHECK(to_string(ctx.encode_index(14)) == "111");
  CHECK(ctx.decode_codeword(bits_of("111")) == 14);
  CHECK(to_string(ctx.encode_index_general(14)) == "111");
  // complement shape: the all-zero codeword needs the same guard (appending
  // 1 after two zeros would spell 001)
  EncoderContext ctx2(UniqueWord::parse("001"));
  CHECK(to_string(ctx2.encode_index(8)) == "000");
  CHECK(ctx2.decode_codeword(bits_of("000")) == 8);
  CHECK(to_string(ctx2.encode_index(14)) == "111");
  CHECK(ctx2.decode_codeword(bits_of("111")) == 14);
}

TEST_CASE("fast paths agree with the general algorithms") {
  std::mt19937_64 rng(7);
  for (const char* uw : {"1111", "11110", "0000", "00001", "11", "01"}) {
    EncoderContext ctx(UniqueWord::parse(uw));
    std::uniform_int_distribution<std::uint64_t> dist(1, 2'000'000);
    for (int trial = 0; trial < 400; ++trial) {
      const mpz_class m(static_cast<unsigned long>(dist(rng)));
      std::vector<mpz_class> rho_fast, rho_general;
      const auto fast = ctx.encode_index(m, &rho_fast);
      const auto general = ctx.encode_index_general(m, &rho_general);
      CHECK(fast == general);
      CHECK(rho_fast == rho_general);
      CHECK(ctx.decode_codeword(fast) == m);
      CHECK(ctx.decode_codeword_general(fast) == m);
    }
  }
}

TEST_CASE("lexicographic order within a length class") {
  for (const char* uw : {"00", "010", "0011"}) {
    EncoderContext ctx(UniqueWord::parse(uw));
    for (std::size_t n = 1; n <= 8; ++n) {
      const mpz_class lo = ctx.cumulative_count(n - 1);
      const mpz_class hi = ctx.cumulative_count(n);
      std::vector<std::uint8_t> prev;
      for (mpz_class m = lo + 1; m <= hi; ++m) {
        const auto code = ctx.encode_index(m);
        CHECK(code.size() == n);
        if (m > lo + 1) CHECK(prev < code);
        prev = code;
      }
    }
  }
}

TEST_CASE("every encoded codeword passes the separator oracle") {
  std::mt19937_64 rng(99);
  for (const char* uw : {"00", "010", "0110", "00010"}) {
    EncoderContext ctx(UniqueWord::parse(uw));
    const auto k = UniqueWord::parse(uw);
    std::uniform_int_distribution<std::uint64_t> dist(1, 5'000'000);
    for (int trial = 0; trial < 200; ++trial) {
      const auto code = ctx.encode_index(mpz_class(static_cast<unsigned long>(dist(rng))));
      CHECK(oracle::definition1_valid(k, code));
      CHECK(udooc::is_valid_codeword(ctx, code));
    }
  }
}

TEST_CASE("decode rejects invalid codewords") {
  EncoderContext ctx(UniqueWord::parse("010"));
  CHECK_THROWS_AS(ctx.decode_codeword(bits_of("010")), udooc::InvalidCodeword);   // contains UW
  CHECK_THROWS_AS(ctx.decode_codeword(bits_of("100")), udooc::InvalidCodeword);   // left overlap
  CHECK_THROWS_AS(ctx.decode_codeword(bits_of("001")), udooc::InvalidCodeword);   // right overlap
  CHECK(ctx.decode_codeword(bits_of("000")) == 5);
  EncoderContext all_ones(UniqueWord::parse("111"));
  CHECK_THROWS_AS(all_ones.decode_codeword(bits_of("10")), udooc::InvalidCodeword);   // bad head
  CHECK_THROWS_AS(all_ones.decode_codeword(bits_of("011")), udooc::InvalidCodeword);  // bad tail
  CHECK(all_ones.decode_codeword(bits_of("0110")) ==
        all_ones.decode_codeword_general(bits_of("0110")));
}

TEST_CASE("Example 1: stream framing for UW 00") {
  EncoderContext ctx(UniqueWord::parse("00"));
  const std::vector<mpz_class> indices = {2, 3, 4, 8};
  const auto stream = udooc::encode_stream(ctx, indices);
  CHECK(to_string(stream.payload) == "00100110010100111100");
  CHECK(stream.message_count == 4);
  CHECK(udooc::decode_stream(ctx, stream) == indices);
}

TEST_CASE("degenerate and tiny streams") {
  EncoderContext ctx(UniqueWord::parse("00"));
  const auto empty = udooc::encode_stream(ctx, {});
  CHECK(to_string(empty.payload) == "00");
  CHECK(udooc::decode_stream(ctx, empty).empty());

  const std::vector<mpz_class> one_null = {1};
  const auto nulls = udooc::encode_stream(ctx, one_null);
  CHECK(to_string(nulls.payload) == "0000");
  CHECK(udooc::decode_stream(ctx, nulls) == one_null);
}

TEST_CASE("container bytes are bit-exact") {
  EncoderContext ctx(UniqueWord::parse("00"));
  const std::vector<mpz_class> indices = {2, 3, 4, 8};
  const auto bytes = udooc::encode_stream(ctx, indices).to_bytes();
  const std::vector<std::uint8_t> want = {
      'U', 'D', 'O', '1', 0x02, 0x00,
      0, 0, 0, 0, 0, 0, 0, 4,    // message count
      0, 0, 0, 0, 0, 0, 0, 20,   // payload bit count
      0x26, 0x53, 0xC0};         // 00100110 01010011 1100....
  CHECK(bytes == want);
  const auto parsed = FramedStream::from_bytes(bytes);
  CHECK(parsed.uw == ctx.uw());
  CHECK(parsed.message_count == 4);
  CHECK(to_string(parsed.payload) == "00100110010100111100");
}

TEST_CASE("framing errors") {
  EncoderContext ctx(UniqueWord::parse("00"));
  const std::vector<mpz_class> two_indices = {2, 3};
  FramedStream s = udooc::encode_stream(ctx, two_indices);

  FramedStream bad = s;
  bad.payload[0] = 1;  // no leading UW
  CHECK_THROWS_AS(udooc::decode_stream(ctx, bad), udooc::FramingError);

  bad = s;
  bad.payload.back() = 1;  // no trailing UW
  CHECK_THROWS_AS(udooc::decode_stream(ctx, bad), udooc::FramingError);

  bad = s;
  bad.message_count = 3;
  CHECK_THROWS_AS(udooc::decode_stream(ctx, bad), udooc::FramingError);

  auto bytes = s.to_bytes();
  bytes[0] = 'X';
  CHECK_THROWS_AS(FramedStream::from_bytes(bytes), udooc::FramingError);
  bytes = s.to_bytes();
  bytes.push_back(0);
  CHECK_THROWS_AS(FramedStream::from_bytes(bytes), udooc::FramingError);
  std::size_t trailer = 0;
  CHECK(FramedStream::from_bytes(bytes, &trailer).message_count == 2);
  CHECK(trailer == bytes.size() - 1);
}

TEST_CASE("stream round trip over random indices, serial and parallel") {
  std::mt19937_64 rng(123);
  for (const char* uw : {"00", "0001", "010", "000001"}) {
    EncoderContext ctx(UniqueWord::parse(uw));
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
    std::vector<mpz_class> indices;
    indices.reserve(1000);
    for (int i = 0; i < 1000; ++i)
      indices.emplace_back(static_cast<unsigned long>(dist(rng)));
    const auto stream = udooc::encode_stream(ctx, indices);
    const auto round = udooc::decode_stream(ctx, stream);
    CHECK(round == indices);
    CHECK(udooc::decode_stream_serial(ctx, stream) == round);
    CHECK(udooc::decode_stream(ctx, stream, 2) == round);
    // bytes survive a container round trip
    const auto parsed = FramedStream::from_bytes(stream.to_bytes());
    CHECK(parsed.payload == stream.payload);
  }
}

TEST_CASE("general path at large indices keeps order and legality") {
  EncoderContext ctx(UniqueWord::parse("010011"));
  const auto k = UniqueWord::parse("010011");
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ull);
  for (int trial = 0; trial < 200; ++trial) {
    const mpz_class m(static_cast<unsigned long>(dist(rng)));
    const auto code = ctx.encode_index(m);
    CHECK(ctx.decode_codeword(code) == m);
    CHECK(oracle::definition1_valid(k, code));
    const auto next = ctx.encode_index(m + 1);
    if (next.size() == code.size()) CHECK(code < next);  // Lemma-1 order
  }
}

TEST_CASE("concurrent encode/decode on a cold context") {
  for (const char* uw : {"010", "0001"}) {
    EncoderContext ctx(UniqueWord::parse(uw));  // tables grow under contention
    constexpr long kCount = 4000;
    std::vector<mpz_class> decoded(kCount);
    std::vector<std::size_t> lengths(kCount);
#pragma omp parallel for schedule(dynamic, 16)
    for (long m = 1; m <= kCount; ++m) {
      const auto code = ctx.encode_index(m * 37 + 5);
      decoded[m - 1] = ctx.decode_codeword(code);
      lengths[m - 1] = code.size();
    }
    EncoderContext fresh(UniqueWord::parse(uw));
    for (long m = 1; m <= kCount; ++m) {
      CHECK(decoded[m - 1] == m * 37 + 5);
      CHECK(lengths[m - 1] == fresh.encode_index(m * 37 + 5).size());
    }
  }
}

TEST_CASE("invalid codeword inside a stream is reported") {
  EncoderContext ctx(UniqueWord::parse("010"));
  FramedStream s;
  s.uw = ctx.uw();
  s.message_count = 1;
  s.payload = bits_of("010" "100" "010");  // segment 100 overlaps the left UW
  CHECK_THROWS_AS(udooc::decode_stream(ctx, s), udooc::InvalidCodeword);
}

}  // TEST_SUITE
