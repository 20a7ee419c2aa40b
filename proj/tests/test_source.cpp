#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "udooc/source.hpp"

using udooc::EncoderContext;
using udooc::SourceModel;
using udooc::UniqueWord;

namespace {

std::vector<char> chars_of(const std::string& s) { return {s.begin(), s.end()}; }

// Repository corpus, overridable via UDOOC_ALICE.
std::string alice_path() {
  if (const char* env = std::getenv("UDOOC_ALICE")) return env;
  return "data/alice.txt";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("source") {

TEST_CASE("normalize_text") {
  CHECK(udooc::normalize_text(std::string("Ab, c")) == chars_of("ab  c"));
  CHECK(udooc::normalize_text(std::string("WONDERLAND")) == chars_of("wonderland"));
  CHECK(udooc::normalize_text(std::string("")).empty());
  CHECK(udooc::normalize_text(std::string("a\r\nb")) == chars_of("a  b"));
}

TEST_CASE("empirical model") {
  const auto m = udooc::empirical_model(chars_of("aab"), 1);
  REQUIRE(m.size() == 2);
  CHECK(m.symbols[0] == "a");
  CHECK(m.probs[0] == doctest::Approx(2.0 / 3.0));
  CHECK(m.probs[1] == doctest::Approx(1.0 / 3.0));

  const auto m2 = udooc::empirical_model(chars_of("aab "), 2);
  REQUIRE(m2.size() == 2);
  CHECK(m2.probs[0] == doctest::Approx(0.5));
  CHECK(m2.symbols[0] == "aa");  // tie broken lexicographically
  CHECK(m2.symbols[1] == "b ");

  // tail padding with spaces
  const auto m3 = udooc::empirical_model(chars_of("aaaab"), 3);
  CHECK(m3.symbols[0] == "aaa");
  CHECK(m3.symbols[1] == "ab ");

  CHECK_THROWS_AS(udooc::empirical_model({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(udooc::empirical_model(chars_of("a"), 0), std::invalid_argument);
}

TEST_CASE("product model") {
  SourceModel uniform26;
  for (char c = 'a'; c <= 'z'; ++c) {
    uniform26.symbols.emplace_back(1, c);
    uniform26.probs.push_back(1.0 / 26.0);
  }
  const auto g2 = udooc::product_model(uniform26, 2);
  CHECK(g2.size() == 676);
  for (double p : g2.probs) CHECK(p == doctest::Approx(1.0 / 676.0));

  SourceModel coin;
  coin.symbols = {"0", "1"};
  coin.probs = {0.5, 0.5};
  const auto g3 = udooc::product_model(coin, 3);
  CHECK(g3.size() == 8);
  for (double p : g3.probs) CHECK(p == doctest::Approx(0.125));

  SourceModel skewed;
  skewed.symbols = {"x", "y"};
  skewed.probs = {0.9, 0.1};
  const auto g4 = udooc::product_model(skewed, 4);
  CHECK(g4.probs[0] == doctest::Approx(std::pow(0.9, 4)));  // q1 = p1^t

  SourceModel big;
  for (int i = 0; i < 300; ++i) {
    big.symbols.push_back("s" + std::to_string(i));
    big.probs.push_back(1.0 / 300.0);
  }
  CHECK_THROWS_AS(udooc::product_model(big, 3), std::invalid_argument);
}

TEST_CASE("entropy") {
  SourceModel uniform26;
  for (char c = 'a'; c <= 'z'; ++c) {
    uniform26.symbols.emplace_back(1, c);
    uniform26.probs.push_back(1.0 / 26.0);
  }
  CHECK(udooc::entropy(uniform26) == doctest::Approx(std::log2(26.0)).epsilon(1e-12));

  SourceModel degenerate;
  degenerate.symbols = {"a"};
  degenerate.probs = {1.0};
  CHECK(udooc::entropy(degenerate) == 0.0);
}

TEST_CASE("average length of a single-symbol source is the UW length") {
  EncoderContext ctx(UniqueWord::parse("0001"));
  SourceModel one;
  one.symbols = {"a"};
  one.probs = {1.0};
  CHECK(udooc::average_length(ctx, one) == doctest::Approx(4.0));
}

TEST_CASE("codeword length assignment is monotone in rank") {
  for (const char* uw : {"00", "010", "0001"}) {
    EncoderContext ctx(UniqueWord::parse(uw));
    const auto lengths = udooc::codeword_lengths_by_rank(ctx, 500);
    for (std::size_t i = 1; i < lengths.size(); ++i) CHECK(lengths[i - 1] <= lengths[i]);
    CHECK(lengths[0] == 0);  // rank 1 is the null codeword
  }
}

TEST_CASE("average length via table equals direct expectation over codewords") {
  EncoderContext ctx(UniqueWord::parse("010"));
  SourceModel m;
  const double probs[] = {0.4, 0.3, 0.2, 0.05, 0.05};
  for (int i = 0; i < 5; ++i) {
    m.symbols.push_back(std::string(1, static_cast<char>('a' + i)));
    m.probs.push_back(probs[i]);
  }
  double direct = 3.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    direct += m.probs[i] * static_cast<double>(ctx.encode_index(static_cast<long>(i + 1)).size());
  CHECK(udooc::average_length(ctx, m) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("probability CSV loader") {
  CHECK_THROWS(udooc::load_probability_csv("/nonexistent/file.csv"));
  const auto m = udooc::load_probability_csv("data/english_oxford.csv");
  REQUIRE(m.size() == 26);
  CHECK(m.symbols[0] == "e");
  CHECK(m.probs[0] == doctest::Approx(0.1116).epsilon(1e-3));
  CHECK(udooc::entropy(m) == doctest::Approx(4.246).epsilon(1e-3));
}

TEST_CASE("Alice corpus: entropy and per-letter lengths drop as t grows") {
  const auto raw = read_file(alice_path());
  if (raw.empty()) {
    MESSAGE("corpus not found at ", alice_path(), "; skipping");
    return;
  }
  const auto stream = udooc::normalize_text(raw);
  const auto m1 = udooc::empirical_model(stream, 1);
  CHECK(m1.size() == 27);
  CHECK(udooc::entropy(m1) == doctest::Approx(3.914).epsilon(0.006));

  EncoderContext c00(UniqueWord::parse("00"));
  EncoderContext c0001(UniqueWord::parse("0001"));
  double prev00 = 1e9, prev0001 = 1e9;
  for (int t = 1; t <= 3; ++t) {
    const auto mt = udooc::empirical_model(stream, t);
    const double l00 = udooc::per_letter_length(c00, mt, t);
    const double l0001 = udooc::per_letter_length(c0001, mt, t);
    CHECK(l00 < prev00 + 1e-9);
    CHECK(l0001 < prev0001 + 1e-9);
    prev00 = l00;
    prev0001 = l0001;
  }
}

}  // TEST_SUITE
