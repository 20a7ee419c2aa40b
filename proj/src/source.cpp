#include "udooc/source.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

namespace udooc {

std::vector<char> normalize_text(std::span<const std::uint8_t> raw) {
  std::vector<char> out;
  out.reserve(raw.size());
  for (std::uint8_t b : raw) {
    if (b >= 'a' && b <= 'z')
      out.push_back(static_cast<char>(b));
    else if (b >= 'A' && b <= 'Z')
      out.push_back(static_cast<char>(b - 'A' + 'a'));
    else
      out.push_back(' ');
  }
  return out;
}

std::vector<char> normalize_text(const std::string& raw) {
  return normalize_text(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

namespace {

SourceModel ranked_from_counts(std::vector<std::pair<std::string, std::uint64_t>> items) {
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::uint64_t total = 0;
  for (const auto& [sym, cnt] : items) total += cnt;
  SourceModel m;
  m.symbols.reserve(items.size());
  m.probs.reserve(items.size());
  m.counts.reserve(items.size());
  for (auto& [sym, cnt] : items) {
    m.symbols.push_back(std::move(sym));
    m.probs.push_back(static_cast<double>(cnt) / static_cast<double>(total));
    m.counts.push_back(cnt);
  }
  return m;
}

}  // namespace

SourceModel empirical_model(std::span<const char> stream, int t) {
  if (t < 1) throw std::invalid_argument("block size t must be >= 1");
  if (stream.empty()) throw std::invalid_argument("cannot model an empty stream");
  std::unordered_map<std::string, std::uint64_t> freq;
  std::string block;
  for (std::size_t i = 0; i < stream.size(); i += static_cast<std::size_t>(t)) {
    block.assign(static_cast<std::size_t>(t), ' ');
    const std::size_t take = std::min<std::size_t>(t, stream.size() - i);
    std::copy(stream.begin() + static_cast<std::ptrdiff_t>(i),
              stream.begin() + static_cast<std::ptrdiff_t>(i + take), block.begin());
    ++freq[block];
  }
  std::vector<std::pair<std::string, std::uint64_t>> items(freq.begin(), freq.end());
  return ranked_from_counts(std::move(items));
}

SourceModel product_model(const SourceModel& base, int t) {
  if (t < 1) throw std::invalid_argument("block size t must be >= 1");
  const std::size_t M = base.size();
  double cells = 1.0;
  for (int i = 0; i < t; ++i) {
    cells *= static_cast<double>(M);
    if (cells > 1e7) throw std::invalid_argument("product model would exceed 10^7 blocks");
  }
  const std::size_t n = static_cast<std::size_t>(cells);

  SourceModel m;
  m.symbols.resize(n);
  m.probs.resize(n);
  std::vector<std::size_t> digits(static_cast<std::size_t>(t), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    double p = 1.0;
    std::string sym;
    for (int d = 0; d < t; ++d) {
      p *= base.probs[digits[static_cast<std::size_t>(d)]];
      sym += base.symbols[digits[static_cast<std::size_t>(d)]];
    }
    m.symbols[idx] = std::move(sym);
    m.probs[idx] = p;
    for (int d = t - 1; d >= 0; --d) {
      if (++digits[static_cast<std::size_t>(d)] < M) break;
      digits[static_cast<std::size_t>(d)] = 0;
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (m.probs[a] != m.probs[b]) return m.probs[a] > m.probs[b];
    return m.symbols[a] < m.symbols[b];
  });
  SourceModel sorted;
  sorted.symbols.resize(n);
  sorted.probs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted.symbols[i] = std::move(m.symbols[order[i]]);
    sorted.probs[i] = m.probs[order[i]];
  }
  return sorted;
}

double entropy(const SourceModel& model) {
  double H = 0.0;
  for (double p : model.probs)
    if (p > 0.0) H -= p * std::log2(p);
  return H;
}

std::vector<std::uint32_t> codeword_lengths_by_rank(const EncoderContext& ctx, std::size_t M) {
  std::vector<std::uint32_t> lengths;
  lengths.reserve(M);
  std::size_t n = 0;
  mpz_class covered = ctx.cumulative_count(0);
  for (std::size_t rank = 1; rank <= M; ++rank) {
    while (covered < static_cast<unsigned long>(rank)) {
      ++n;
      covered = ctx.cumulative_count(n);
    }
    lengths.push_back(static_cast<std::uint32_t>(n));
  }
  return lengths;
}

double average_length(const EncoderContext& ctx, const SourceModel& model) {
  const auto lengths = codeword_lengths_by_rank(ctx, model.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i)
    sum += model.probs[i] * static_cast<double>(lengths[i]);
  return static_cast<double>(ctx.uw().length()) + sum;
}

double per_letter_length(const EncoderContext& ctx, const SourceModel& grouped, int t) {
  if (t < 1) throw std::invalid_argument("block size t must be >= 1");
  return average_length(ctx, grouped) / static_cast<double>(t);
}

SourceModel load_probability_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open probability file: " + path);
  std::vector<std::pair<std::string, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) continue;
    const std::string sym = line.substr(0, comma);
    const std::string val = line.substr(comma + 1);
    try {
      rows.emplace_back(sym, std::stod(val));
    } catch (const std::exception&) {
      continue;  // header or comment line
    }
  }
  if (rows.empty()) throw std::runtime_error("no probability rows in " + path);
  double total = 0.0;
  for (const auto& [sym, p] : rows) {
    if (p < 0.0) throw std::runtime_error("negative probability in " + path);
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::runtime_error("probabilities do not sum to 1 in " + path);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  SourceModel m;
  for (auto& [sym, p] : rows) {
    m.symbols.push_back(std::move(sym));
    m.probs.push_back(p);
  }
  return m;
}

}  // namespace udooc
