#include "udooc/baselines.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace udooc {

std::vector<std::uint32_t> huffman_code_lengths(const SourceModel& model) {
  const std::size_t M = model.size();
  if (M < 2) throw std::invalid_argument("Huffman needs at least two symbols");

  struct Node {
    double weight;
    std::size_t order;  // creation order, for deterministic tie-breaks
    std::size_t id;
  };
  struct Cmp {
    bool operator()(const Node& a, const Node& b) const {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.order > b.order;
    }
  };

  std::vector<std::pair<std::size_t, std::size_t>> children;  // internal nodes
  children.reserve(M - 1);
  std::priority_queue<Node, std::vector<Node>, Cmp> heap;
  for (std::size_t i = 0; i < M; ++i) heap.push(Node{model.probs[i], i, i});
  std::size_t next_order = M;
  while (heap.size() > 1) {
    const Node a = heap.top();
    heap.pop();
    const Node b = heap.top();
    heap.pop();
    const std::size_t id = M + children.size();
    children.emplace_back(a.id, b.id);
    heap.push(Node{a.weight + b.weight, next_order++, id});
  }

  std::vector<std::uint32_t> depth(M + children.size(), 0);
  for (std::size_t i = children.size(); i-- > 0;) {
    const std::size_t id = M + i;
    depth[children[i].first] = depth[id] + 1;
    depth[children[i].second] = depth[id] + 1;
  }
  depth.resize(M);
  return depth;
}

double huffman_average_length(const SourceModel& model) {
  const auto lengths = huffman_code_lengths(model);
  double avg = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i)
    avg += model.probs[i] * static_cast<double>(lengths[i]);
  return avg;
}

Lz78Result lz78_compressed_bits(std::span<const char> stream) {
  // The input is ASCII-encoded to a bit stream first, and the dictionary is
  // grown over the binary alphabet; each phrase is emitted as an index of
  // ceil(log2(dictionary size)) bits plus one literal bit.
  Lz78Result res;
  if (stream.empty()) return res;

  std::map<std::pair<std::uint64_t, int>, std::uint64_t> trie;
  std::uint64_t entries = 0;  // phrases stored so far (index 0 = empty root)
  std::uint64_t node = 0;

  auto index_width = [](std::uint64_t dictionary_size) {
    std::uint32_t w = 0;
    while ((1ull << w) < dictionary_size) ++w;
    return w;
  };

  const std::uint64_t n_bits = 8 * static_cast<std::uint64_t>(stream.size());
  for (std::uint64_t i = 0; i < n_bits; ++i) {
    const int bit = (static_cast<unsigned char>(stream[i >> 3]) >> (7 - (i & 7))) & 1;
    const auto key = std::make_pair(node, bit);
    const auto it = trie.find(key);
    if (it != trie.end() && i + 1 < n_bits) {
      node = it->second;
      continue;
    }
    res.bits += index_width(entries + 1) + 1;
    ++res.phrases;
    if (it == trie.end()) trie[key] = ++entries;
    node = 0;
  }
  return res;
}

}  // namespace udooc
