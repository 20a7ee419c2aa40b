// Command-line front end: enumeration reports, graph export, enumerative
// encode/decode, UW-framed stream packing, and text compression with the
// ranked-block dictionary carried in the container.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "udooc/baselines.hpp"
#include "udooc/bounds.hpp"
#include "udooc/codec.hpp"
#include "udooc/enumeration.hpp"
#include "udooc/source.hpp"
#include "udooc/uw.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string s = ss.str();
  return {s.begin(), s.end()};
}

void write_binary(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path);
}

std::vector<std::uint8_t> parse_bits(const std::string& s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw CLI::ValidationError("bits", "expected a 0/1 string");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

udooc::UniqueWord parse_uw_cli(const std::string& text) {
  try {
    return udooc::UniqueWord::parse(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--uw", e.what());
  }
}

void warn_if_degenerate(const udooc::UniqueWord& uw) {
  if (uw.length() == 2 && uw.bit(0) != uw.bit(1))
    std::cerr << "warning: UW " << uw.to_string()
              << " has linear codeword growth (g = 1); long codewords ahead\n";
}

std::vector<char> load_corpus(const std::string& path) {
  const auto raw = read_binary(path);
  return udooc::normalize_text(raw);
}

// ---- compression container: core stream followed by a dictionary section

constexpr char kDictMagic[4] = {'D', 'I', 'C', 'T'};

struct Dictionary {
  int t = 1;
  std::uint64_t symbol_count = 0;  // original normalized stream length
  std::vector<std::string> blocks; // rank order
};

std::vector<std::uint8_t> dictionary_bytes(const Dictionary& d) {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kDictMagic, kDictMagic + 4);
  out.push_back(static_cast<std::uint8_t>(d.t));
  for (int i = 7; i >= 0; --i)
    out.push_back(static_cast<std::uint8_t>(d.symbol_count >> (8 * i)));
  const std::uint32_t count = static_cast<std::uint32_t>(d.blocks.size());
  for (int i = 3; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(count >> (8 * i)));
  for (const auto& b : d.blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Dictionary parse_dictionary(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 17 || !std::equal(kDictMagic, kDictMagic + 4, bytes.begin()))
    throw udooc::FramingError("missing dictionary section");
  Dictionary d;
  d.t = bytes[4];
  std::size_t at = 5;
  for (int i = 0; i < 8; ++i) d.symbol_count = (d.symbol_count << 8) | bytes[at++];
  std::uint32_t count = 0;
  for (int i = 0; i < 4; ++i) count = (count << 8) | bytes[at++];
  if (bytes.size() - at != static_cast<std::size_t>(count) * static_cast<std::size_t>(d.t))
    throw udooc::FramingError("dictionary section truncated");
  d.blocks.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    d.blocks.emplace_back(reinterpret_cast<const char*>(bytes.data()) + at,
                          static_cast<std::size_t>(d.t));
    at += static_cast<std::size_t>(d.t);
  }
  return d;
}

// ---- report helpers

void print_growth_row(std::FILE* out, int L) {
  const auto [lo, hi] = udooc::growth_rate_bounds(L);
  const double ga = udooc::growth_rate(udooc::UniqueWord::parse(std::string(L, '0'))).value;
  const double gb =
      udooc::growth_rate(udooc::UniqueWord::parse(std::string(L - 1, '0') + "1")).value;
  std::fprintf(out, "%d,%.3f,%.3f,%.3f,%.3f\n", L, hi, ga, gb, lo);
}

struct CompareConfig {
  std::string corpus;
  std::vector<std::string> uws = {"00", "01", "0000", "0001", "000000", "000001"};
  int t_max = 3;
};

void run_compare(const CompareConfig& cfg) {
  const auto stream = load_corpus(cfg.corpus);
  std::vector<udooc::SourceModel> models;
  for (int t = 1; t <= cfg.t_max; ++t) models.push_back(udooc::empirical_model(stream, t));

  std::printf("%-14s", "scheme");
  for (int t = 1; t <= cfg.t_max; ++t) std::printf("  t=%d    ", t);
  std::printf("\n");
  std::printf("%-14s", "entropy");
  for (int t = 1; t <= cfg.t_max; ++t)
    std::printf("  %6.3f ", udooc::entropy(models[t - 1]) / t);
  std::printf("\n%-14s", "huffman");
  for (int t = 1; t <= cfg.t_max; ++t)
    std::printf("  %6.3f ", udooc::huffman_average_length(models[t - 1]) / t);
  std::printf("\n");
  for (const auto& uw_text : cfg.uws) {
    const auto uw = parse_uw_cli(uw_text);
    udooc::EncoderContext ctx(uw);
    std::printf("udooc %-8s", uw_text.c_str());
    for (int t = 1; t <= cfg.t_max; ++t)
      std::printf("  %6.3f ", udooc::per_letter_length(ctx, models[t - 1], t));
    std::printf("\n");
  }
  const auto lz = udooc::lz78_compressed_bits(stream);
  std::printf("%-14s  %6.3f  (%llu phrases)\n", "lz78",
              static_cast<double>(lz.bits) / static_cast<double>(stream.size()),
              static_cast<unsigned long long>(lz.phrases));
  std::printf("%-14s  n/a     (external tool in the original comparison)\n", "lz77");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniquely decodable one-to-one codes: enumeration, codec, bounds"};
  app.require_subcommand(1);
  std::function<void()> action;

  // graph
  {
    auto* cmd = app.add_subcommand("graph", "Emit the UW-forbidding digraph");
    auto uw_text = std::make_shared<std::string>();
    auto dot = std::make_shared<bool>(false);
    cmd->add_option("uw", *uw_text, "unique word (0/1 string)")->required();
    cmd->add_flag("--dot", *dot, "DOT text output");
    cmd->callback([=, &action]() {
      action = [=]() {
        const auto g = udooc::Digraph::build(parse_uw_cli(*uw_text));
        if (*dot) {
          std::fputs(g.to_dot().c_str(), stdout);
        } else {
          std::printf("vertices: %u, edges: %zu, strongly connected: %s\n", g.vertex_count(),
                      g.edges().size(), g.is_strongly_connected() ? "yes" : "no");
        }
      };
    });
  }

  // enum
  {
    auto* cmd = app.add_subcommand("enum", "Codeword count tables c, s, F");
    auto uw_text = std::make_shared<std::string>();
    auto n_max = std::make_shared<int>(20);
    auto csv = std::make_shared<bool>(false);
    cmd->add_option("uw", *uw_text, "unique word")->required();
    cmd->add_option("--n-max", *n_max, "largest codeword length")->check(CLI::Range(0, 100000));
    cmd->add_flag("--csv", *csv, "CSV output");
    cmd->callback([=, &action]() {
      action = [=]() {
        const auto k = parse_uw_cli(*uw_text);
        warn_if_degenerate(k);
        const auto t = udooc::make_count_table(k, static_cast<std::size_t>(*n_max));
        std::printf(*csv ? "n,c,s,F\n" : "%4s %22s %22s %22s\n", "n", "c", "s", "F");
        for (int n = 0; n <= *n_max; ++n) {
          if (*csv)
            std::printf("%d,%s,%s,%s\n", n, t.c[n].get_str().c_str(), t.s[n].get_str().c_str(),
                        t.F[n].get_str().c_str());
          else
            std::printf("%4d %22s %22s %22s\n", n, t.c[n].get_str().c_str(),
                        t.s[n].get_str().c_str(), t.F[n].get_str().c_str());
        }
      };
    });
  }

  // growth
  {
    auto* cmd = app.add_subcommand("growth", "Growth-rate report (Table I style)");
    auto len = std::make_shared<int>(0);
    cmd->add_option("--len", *len, "UW length (envelope plus extremal words)")
        ->required()
        ->check(CLI::Range(2, 24));
    cmd->callback([=, &action]() {
      action = [=]() {
        std::printf("L,upper 2-2^-L,g all-zero,g zeros-one,lower 2-2^-(L-2)\n");
        print_growth_row(stdout, *len);
      };
    });
  }

  // classes
  {
    auto* cmd = app.add_subcommand("classes", "Asymptotic equivalence classes");
    auto len = std::make_shared<int>(0);
    auto csv = std::make_shared<bool>(false);
    cmd->add_option("--len", *len, "UW length")->required()->check(CLI::Range(2, 16));
    cmd->add_flag("--csv", *csv, "CSV output");
    cmd->callback([=, &action]() {
      action = [=]() {
        const auto classes = udooc::asymptotic_classes(*len);
        const auto n_l = udooc::count_overlap_vectors(*len);
        if (*csv) {
          std::printf("class,growth,size,representative\n");
          for (std::size_t i = 0; i < classes.size(); ++i)
            std::printf("%zu,%.9f,%zu,%s\n", i + 1, classes[i].growth, classes[i].members.size(),
                        classes[i].members.front().to_string().c_str());
        } else {
          std::printf("%zu asymptotic classes over %d-bit unique words (N_%d = %llu)\n",
                      classes.size(), *len, *len, static_cast<unsigned long long>(n_l));
          for (std::size_t i = 0; i < classes.size(); ++i)
            std::printf("  g = %.9f  (%zu words, e.g. %s)\n", classes[i].growth,
                        classes[i].members.size(),
                        classes[i].members.front().to_string().c_str());
        }
      };
    });
  }

  // bounds
  {
    auto* cmd = app.add_subcommand("bounds", "Average-length bounds report");
    auto uw_text = std::make_shared<std::string>();
    auto corpus = std::make_shared<std::string>();
    auto probs = std::make_shared<std::string>();
    auto t = std::make_shared<int>(1);
    auto csv = std::make_shared<bool>(false);
    cmd->add_option("--uw", *uw_text, "unique word")->required();
    cmd->add_option("--corpus", *corpus, "text file (empirical t-grouped model)");
    cmd->add_option("--probs", *probs, "probability CSV (exact i.i.d. model)");
    cmd->add_option("--t", *t, "group size")->check(CLI::Range(1, 8));
    cmd->add_flag("--csv", *csv, "CSV output");
    cmd->callback([=, &action]() {
      action = [=]() {
        if (corpus->empty() == probs->empty())
          throw CLI::ValidationError("bounds", "provide exactly one of --corpus / --probs");
        const auto uw = parse_uw_cli(*uw_text);
        warn_if_degenerate(uw);
        udooc::SourceModel model;
        if (!corpus->empty()) {
          model = udooc::empirical_model(load_corpus(*corpus), *t);
        } else {
          const auto base = udooc::load_probability_csv(*probs);
          model = *t == 1 ? base : udooc::product_model(base, *t);
        }
        udooc::EncoderContext ctx(uw);
        const auto r = udooc::bounds_report(ctx, model, *t);
        if (*csv) {
          std::printf("field,value\nL,%zu\nt,%d\nM,%zu\np1,%.9f\np2,%.9f\nentropy,%.9f\n"
                      "growth,%.9f\nexact,%.6f\nbound1,%.6f\nbound2,%.6f\nbound3,%.6f\n"
                      "bound4,%.6f\nasymptotic,%.6f\nenvelope,%.6f\n",
                      r.uw_length, r.t, r.alphabet_size, r.p1, r.p2, r.entropy_bits, r.growth,
                      r.exact, r.bound1, r.bound2, r.bound3, r.bound4, r.asymptotic_growth,
                      r.asymptotic_envelope);
        } else {
          std::printf("UW %s  L=%zu  t=%d  M=%zu  g=%.6f  H=%.4f bits\n", uw.to_string().c_str(),
                      r.uw_length, r.t, r.alphabet_size, r.growth, r.entropy_bits);
          std::printf("  exact per-letter length : %8.4f\n", r.exact);
          std::printf("  bound (21)  p1-only     : %8.4f\n", r.bound1);
          std::printf("  bound (22)  entropy     : %8.4f\n", r.bound2);
          std::printf("  bound (24)  universal   : %8.4f\n", r.bound3);
          std::printf("  grouped bound (36)      : %8.4f\n", r.bound4);
          std::printf("  asymptotic H/log2 g     : %8.4f\n", r.asymptotic_growth);
          std::printf("  asymptotic envelope     : %8.4f\n", r.asymptotic_envelope);
        }
      };
    });
  }

  // encode / decode
  {
    auto* cmd = app.add_subcommand("encode", "Index to codeword");
    auto uw_text = std::make_shared<std::string>();
    auto index = std::make_shared<std::string>();
    auto rho = std::make_shared<bool>(false);
    cmd->add_option("--uw", *uw_text, "unique word")->required();
    cmd->add_option("--index", *index, "message index m >= 1")->required();
    cmd->add_flag("--rho", *rho, "print progressive metrics");
    cmd->callback([=, &action]() {
      action = [=]() {
        const auto uw = parse_uw_cli(*uw_text);
        warn_if_degenerate(uw);
        udooc::EncoderContext ctx(uw);
        mpz_class m;
        if (m.set_str(*index, 10) != 0 || m < 1)
          throw CLI::ValidationError("--index", "expected a positive integer");
        std::vector<mpz_class> metrics;
        const auto code = ctx.encode_index(m, rho ? &metrics : nullptr);
        std::printf("%s\n", code.empty() ? "(null)" : bits_to_string(code).c_str());
        if (*rho) {
          std::printf("rho:");
          for (const auto& r : metrics) std::printf(" %s", r.get_str().c_str());
          std::printf("\n");
        }
      };
    });

    auto* dcmd = app.add_subcommand("decode", "Codeword to index");
    auto duw = std::make_shared<std::string>();
    auto codeword = std::make_shared<std::string>();
    dcmd->add_option("--uw", *duw, "unique word")->required();
    dcmd->add_option("--codeword", *codeword, "codeword bits ('' or 'null' for the null word)")
        ->required();
    dcmd->callback([=, &action]() {
      action = [=]() {
        udooc::EncoderContext ctx(parse_uw_cli(*duw));
        const auto bits = (*codeword == "null") ? std::vector<std::uint8_t>{}
                                                : parse_bits(*codeword);
        std::printf("%s\n", ctx.decode_codeword(bits).get_str().c_str());
      };
    });
  }

  // pack / unpack
  {
    auto* cmd = app.add_subcommand("pack", "Encode indices into a .udo container");
    auto uw_text = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto indices = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--uw", *uw_text, "unique word")->required();
    cmd->add_option("--out", *out, "output file")->required();
    cmd->add_option("indices", *indices, "message indices")->required();
    cmd->callback([=, &action]() {
      action = [=]() {
        udooc::EncoderContext ctx(parse_uw_cli(*uw_text));
        std::vector<mpz_class> ms;
        for (const auto& s : *indices) {
          mpz_class m;
          if (m.set_str(s, 10) != 0 || m < 1)
            throw CLI::ValidationError("indices", "expected positive integers");
          ms.push_back(std::move(m));
        }
        write_binary(*out, udooc::encode_stream(ctx, ms).to_bytes());
      };
    });

    auto* ucmd = app.add_subcommand("unpack", "Decode a .udo container to indices");
    auto in = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(0);
    ucmd->add_option("file", *in, ".udo file")->required();
    ucmd->add_option("--jobs", *jobs, "decoder threads (0 = all)")->check(CLI::Range(0, 256));
    ucmd->callback([=, &action]() {
      action = [=]() {
        const auto bytes = read_binary(*in);
        std::size_t trailer = 0;
        const auto stream = udooc::FramedStream::from_bytes(bytes, &trailer);
        // tolerate a compression dictionary section, reject other trailers
        if (trailer != bytes.size() &&
            (bytes.size() - trailer < 4 ||
             std::string(bytes.begin() + static_cast<std::ptrdiff_t>(trailer),
                         bytes.begin() + static_cast<std::ptrdiff_t>(trailer) + 4) != "DICT"))
          throw udooc::FramingError("trailing bytes after payload");
        udooc::EncoderContext ctx(stream.uw);
        for (const auto& m : udooc::decode_stream(ctx, stream, *jobs))
          std::printf("%s\n", m.get_str().c_str());
      };
    });
  }

  // compress / decompress
  {
    auto* cmd = app.add_subcommand("compress", "Compress a text file");
    auto in = std::make_shared<std::string>();
    auto uw_text = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto t = std::make_shared<int>(1);
    auto stats = std::make_shared<std::string>();
    cmd->add_option("file", *in, "input text file")->required();
    cmd->add_option("--uw", *uw_text, "unique word")->required();
    cmd->add_option("--out", *out, "output .udo file")->required();
    cmd->add_option("--t", *t, "letters per block (1..3 typical)")->check(CLI::Range(1, 8));
    cmd->add_option("--stats", *stats, "also dump the ranked distribution CSV");
    cmd->callback([=, &action]() {
      action = [=]() {
        const auto uw = parse_uw_cli(*uw_text);
        warn_if_degenerate(uw);
        if (*t > 3)
          std::cerr << "warning: t = " << *t << " grows the block alphabet exponentially\n";
        const auto stream = load_corpus(*in);
        const auto model = udooc::empirical_model(stream, *t);
        std::unordered_map<std::string, std::uint64_t> rank;
        for (std::size_t i = 0; i < model.size(); ++i) rank[model.symbols[i]] = i + 1;

        std::vector<mpz_class> indices;
        indices.reserve(stream.size() / static_cast<std::size_t>(*t) + 1);
        std::string block;
        for (std::size_t i = 0; i < stream.size(); i += static_cast<std::size_t>(*t)) {
          block.assign(static_cast<std::size_t>(*t), ' ');
          const std::size_t take = std::min<std::size_t>(*t, stream.size() - i);
          std::copy(stream.begin() + static_cast<std::ptrdiff_t>(i),
                    stream.begin() + static_cast<std::ptrdiff_t>(i + take), block.begin());
          indices.emplace_back(static_cast<unsigned long>(rank.at(block)));
        }
        udooc::EncoderContext ctx(uw);
        auto bytes = udooc::encode_stream(ctx, indices).to_bytes();
        Dictionary dict{*t, stream.size(), model.symbols};
        const auto dict_bytes = dictionary_bytes(dict);
        bytes.insert(bytes.end(), dict_bytes.begin(), dict_bytes.end());
        write_binary(*out, bytes);
        std::fprintf(stderr, "%zu letters -> %zu bytes (%.3f bits/letter, UW %s, t=%d)\n",
                     stream.size(), bytes.size(),
                     8.0 * static_cast<double>(bytes.size()) / static_cast<double>(stream.size()),
                     uw.to_string().c_str(), *t);
        if (!stats->empty()) {
          std::ofstream sout(*stats);
          if (!sout) throw IoError("cannot open " + *stats + " for writing");
          sout << "rank,block,count,probability\n";
          for (std::size_t i = 0; i < model.size(); ++i)
            sout << (i + 1) << ",\"" << model.symbols[i] << "\"," << model.counts[i] << ','
                 << model.probs[i] << '\n';
        }
      };
    });

    auto* dcmd = app.add_subcommand("decompress", "Decompress a .udo file");
    auto din = std::make_shared<std::string>();
    auto dout = std::make_shared<std::string>();
    auto djobs = std::make_shared<int>(0);
    dcmd->add_option("file", *din, ".udo file")->required();
    dcmd->add_option("--out", *dout, "output text file (default: stdout)");
    dcmd->add_option("--jobs", *djobs, "decoder threads (0 = all)")->check(CLI::Range(0, 256));
    dcmd->callback([=, &action]() {
      action = [=]() {
        const auto in = din;
        const auto out = dout;
        const auto jobs = djobs;
        const auto bytes = read_binary(*in);
        std::size_t trailer = 0;
        const auto stream = udooc::FramedStream::from_bytes(bytes, &trailer);
        const auto dict = parse_dictionary(
            std::span<const std::uint8_t>(bytes.data() + trailer, bytes.size() - trailer));
        udooc::EncoderContext ctx(stream.uw);
        const auto indices = udooc::decode_stream(ctx, stream, *jobs);
        std::string text;
        text.reserve(indices.size() * static_cast<std::size_t>(dict.t));
        for (const auto& m : indices) {
          if (m < 1 || m > static_cast<unsigned long>(dict.blocks.size()))
            throw udooc::FramingError("index outside the dictionary");
          text += dict.blocks[m.get_ui() - 1];
        }
        text.resize(dict.symbol_count);
        if (out->empty()) {
          std::fwrite(text.data(), 1, text.size(), stdout);
        } else {
          write_binary(*out, std::span<const std::uint8_t>(
                                 reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
        }
      };
    });
  }

  // compare
  {
    auto* cmd = app.add_subcommand("compare", "Entropy / Huffman / UDOOC / LZ78 table");
    auto cfg = std::make_shared<CompareConfig>();
    cmd->add_option("corpus", cfg->corpus, "text file")->required();
    cmd->add_option("--uws", cfg->uws, "unique words to include");
    cmd->add_option("--t-max", cfg->t_max, "largest group size")->check(CLI::Range(1, 4));
    cmd->callback([=, &action]() {
      action = [=]() { run_compare(*cfg); };
    });
  }

  // tables
  {
    auto* cmd = app.add_subcommand("tables", "Regenerate the reference tables as CSV");
    auto out_dir = std::make_shared<std::string>(".");
    auto corpus = std::make_shared<std::string>();
    auto probs = std::make_shared<std::string>();
    cmd->add_option("--out", *out_dir, "output directory");
    cmd->add_option("--corpus", *corpus, "text corpus for the average-length tables");
    cmd->add_option("--probs", *probs, "letter probability CSV for the i.i.d. rows");
    cmd->callback([=, &action]() {
      action = [=]() {
        {
          std::ofstream f(*out_dir + "/table1.csv");
          if (!f) throw IoError("cannot write table1.csv");
          f << "L,upper 2-2^-L,g all-zero,g zeros-one,lower 2-2^-(L-2)\n";
          for (int L = 2; L <= 8; ++L) {
            const auto [lo, hi] = udooc::growth_rate_bounds(L);
            const double ga =
                udooc::growth_rate(udooc::UniqueWord::parse(std::string(L, '0'))).value;
            const double gb =
                udooc::growth_rate(udooc::UniqueWord::parse(std::string(L - 1, '0') + "1")).value;
            char line[128];
            std::snprintf(line, sizeof line, "%d,%.3f,%.3f,%.3f,%.3f\n", L, hi, ga, gb, lo);
            f << line;
          }
        }
        {
          std::ofstream f(*out_dir + "/table2.csv");
          if (!f) throw IoError("cannot write table2.csv");
          f << "L,N_L\n";
          for (int L = 1; L <= 13; ++L)
            f << L << ',' << udooc::count_overlap_vectors(L) << '\n';
        }
        if (!corpus->empty()) {
          const auto stream = load_corpus(*corpus);
          std::vector<udooc::SourceModel> models;
          for (int t = 1; t <= 3; ++t) models.push_back(udooc::empirical_model(stream, t));
          {
            std::ofstream f(*out_dir + "/table4.csv");
            if (!f) throw IoError("cannot write table4.csv");
            f << "shape,L,t,exact,bound21,bound22,bound24\n";
            for (const char shape : {'a', 'b'}) {
              for (int L = 3; L <= 6; ++L) {
                const std::string uw = shape == 'a' ? std::string(L, '0')
                                                    : std::string(L - 1, '0') + "1";
                udooc::EncoderContext ctx(udooc::UniqueWord::parse(uw));
                for (int t = 1; t <= 3; ++t) {
                  const auto r = udooc::bounds_report(ctx, models[t - 1], t);
                  char line[160];
                  std::snprintf(line, sizeof line, "%c,%d,%d,%.3f,%.3f,%.3f,%.3f\n", shape, L, t,
                                r.exact, r.bound1, r.bound2, r.bound3);
                  f << line;
                }
              }
            }
          }
          {
            std::ofstream f(*out_dir + "/table5.csv");
            if (!f) throw IoError("cannot write table5.csv");
            f << "row,t1,t2,t3\n";
            auto row3 = [&f](const std::string& name, double a, double b, double c) {
              char line[160];
              std::snprintf(line, sizeof line, "%s,%.3f,%.3f,%.3f\n", name.c_str(), a, b, c);
              f << line;
            };
            row3("entropy", udooc::entropy(models[0]), udooc::entropy(models[1]) / 2,
                 udooc::entropy(models[2]) / 3);
            row3("huffman", udooc::huffman_average_length(models[0]),
                 udooc::huffman_average_length(models[1]) / 2,
                 udooc::huffman_average_length(models[2]) / 3);
            for (int L : {2, 4, 6}) {
              for (const char shape : {'a', 'b'}) {
                const std::string uw = shape == 'a' ? std::string(L, '0')
                                                    : std::string(L - 1, '0') + "1";
                udooc::EncoderContext ctx(udooc::UniqueWord::parse(uw));
                double v[3];
                for (int t = 1; t <= 3; ++t)
                  v[t - 1] = udooc::per_letter_length(ctx, models[t - 1], t);
                row3("udooc " + uw, v[0], v[1], v[2]);
              }
            }
            const auto lz = udooc::lz78_compressed_bits(stream);
            const double lzr = static_cast<double>(lz.bits) / static_cast<double>(stream.size());
            row3("lz78", lzr, lzr, lzr);
          }
        }
        if (!probs->empty()) {
          const auto base = udooc::load_probability_csv(*probs);
          std::ofstream f(*out_dir + "/table5_iid.csv");
          if (!f) throw IoError("cannot write table5_iid.csv");
          f << "row,t1,t2,t3\n";
          for (int L : {2, 4, 6}) {
            for (const char shape : {'a', 'b'}) {
              const std::string uw =
                  shape == 'a' ? std::string(L, '0') : std::string(L - 1, '0') + "1";
              udooc::EncoderContext ctx(udooc::UniqueWord::parse(uw));
              char line[160];
              double v[3];
              for (int t = 1; t <= 3; ++t) {
                const auto grouped = t == 1 ? base : udooc::product_model(base, t);
                v[t - 1] = udooc::per_letter_length(ctx, grouped, t);
              }
              std::snprintf(line, sizeof line, "udooc %s,%.3f,%.3f,%.3f\n", uw.c_str(), v[0],
                            v[1], v[2]);
              f << line;
            }
          }
        }
        if (corpus->empty() && probs->empty())
          std::fprintf(stderr,
                       "note: tables 4 and 5 need --corpus (and --probs for the i.i.d. rows)\n");
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const udooc::InvalidCodeword& e) {
    std::cerr << "invalid codeword: " << e.what() << '\n';
    return 4;
  } catch (const udooc::FramingError& e) {
    std::cerr << "framing error: " << e.what() << '\n';
    return 4;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
