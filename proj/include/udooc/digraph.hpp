#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "udooc/uw.hpp"

namespace udooc {

using Vertex = std::uint32_t;

// The UW-forbidding digraph G_k. Vertices are the 2^(L-1) binary words of
// length L-1 (leftmost bit most significant); an edge i -> j exists when j
// extends i by one shifted-in bit and i_1 . j != k. Exactly one edge of the
// unconstrained de Bruijn graph is removed.
class Digraph {
public:
  // Throws std::invalid_argument for L < 2.
  static Digraph build(const UniqueWord& k);

  int length() const { return length_; }
  Vertex vertex_count() const { return Vertex{1} << (length_ - 1); }

  // Successor reached from v by shifting in bit b, or -1 if that edge is the
  // forbidden one.
  long long successor(Vertex v, int b) const {
    const Vertex j = ((v << 1) | static_cast<Vertex>(b)) & vertex_mask_;
    if (v == forbidden_from_ && j == forbidden_to_) return -1;
    return j;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<Vertex> predecessors(Vertex v) const;

  bool is_strongly_connected() const;

  // DOT rendering with length-(L-1) bit-string vertex labels.
  std::string to_dot() const;

  Vertex forbidden_from() const { return forbidden_from_; }
  Vertex forbidden_to() const { return forbidden_to_; }

private:
  int length_ = 0;
  Vertex vertex_mask_ = 0;
  Vertex forbidden_from_ = 0;  // k_1 ... k_{L-1}
  Vertex forbidden_to_ = 0;    // k_2 ... k_L
};

// The digraph together with the boundary vectors of the walk-count formula.
// A is kept implicitly as successor structure (each vertex has at most two
// out-edges); A0/A1 are the splits by the shifted-in bit, which equals the
// last bit of the destination vertex.
struct AdjacencySet {
  Digraph graph;
  Vertex start_vertex = 0;  // x indicates k_2 ... k_L
  Vertex end_vertex = 0;    // y indicates k_1 ... k_{L-1}
};

// Throws std::invalid_argument for L < 2 or L > 24 (matrix order cap).
AdjacencySet adjacency_set(const UniqueWord& k);

// Exact number of directed walks of the given length from the start vertex
// to the end vertex (x^T A^steps y), via iterated sparse vector products.
mpz_class walk_count(const AdjacencySet& adj, std::uint64_t steps);

// Dense 0/1 adjacency matrix row-major; row v lists A[v][*]. Intended for
// small L (tests, DOT-adjacent tooling).
std::vector<std::vector<int>> dense_adjacency(const Digraph& g);

}  // namespace udooc
