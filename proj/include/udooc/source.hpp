#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "udooc/codec.hpp"

namespace udooc {

// Ranked source alphabet. probs is sorted nonincreasing; ties are broken by
// lexicographic symbol order so tables are identical across runs. counts
// carries the raw frequencies for empirical models (empty for exact ones).
struct SourceModel {
  std::vector<std::string> symbols;
  std::vector<double> probs;
  std::vector<std::uint64_t> counts;

  std::size_t size() const { return probs.size(); }
};

// The 27-letter normalized alphabet: 'a'..'z' plus ' '. Case-folds A-Z and
// maps every other octet to a space; runs of spaces are kept as-is.
std::vector<char> normalize_text(std::span<const std::uint8_t> raw);
std::vector<char> normalize_text(const std::string& raw);

// Splits the stream into consecutive non-overlapping t-blocks (the tail is
// padded with spaces) and ranks the observed blocks by frequency.
// Throws std::invalid_argument for t < 1 or an empty stream.
SourceModel empirical_model(std::span<const char> stream, int t);

// i.i.d. product distribution over all M^t blocks of the base model.
// Guarded at M^t <= 10^7.
SourceModel product_model(const SourceModel& base, int t);

// Shannon entropy in bits per (grouped) symbol; 0 log 1/0 counts as 0.
double entropy(const SourceModel& model);

// L_k = L + sum p_i * l(phi(u_i)), with codeword lengths read off the
// cumulative count table (no codeword is ever materialized).
double average_length(const EncoderContext& ctx, const SourceModel& model);

// average_length of a t-grouped model, per original source letter.
double per_letter_length(const EncoderContext& ctx, const SourceModel& grouped, int t);

// Codeword length assigned to each rank 1..M (min n with F[n] >= rank).
std::vector<std::uint32_t> codeword_lengths_by_rank(const EncoderContext& ctx, std::size_t M);

// Loads a "symbol,probability" CSV (header line optional).
SourceModel load_probability_csv(const std::string& path);

}  // namespace udooc
