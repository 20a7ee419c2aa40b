#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "udooc/source.hpp"

namespace udooc {

// Optimal binary code lengths for the ranked model, built by merging the
// two lightest nodes (ties resolved toward the earliest-created node).
// Throws std::invalid_argument for fewer than two symbols.
std::vector<std::uint32_t> huffman_code_lengths(const SourceModel& model);

double huffman_average_length(const SourceModel& model);

struct Lz78Result {
  std::uint64_t bits = 0;
  std::uint64_t phrases = 0;
};

// Dictionary-growing LZ78 over the ASCII-encoded bit stream; each phrase
// costs ceil(log2(dictionary size)) bits of index plus one literal bit.
// Only the size is computed.
Lz78Result lz78_compressed_bits(std::span<const char> stream);

}  // namespace udooc
