#include "udooc/digraph.hpp"

#include <sstream>
#include <stdexcept>

namespace udooc {

namespace {

std::string vertex_label(Vertex v, int bits) {
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int i = 0; i < bits; ++i)
    if (v & (Vertex{1} << (bits - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace

Digraph Digraph::build(const UniqueWord& k) {
  if (k.length() < 2) throw std::invalid_argument("digraph requires a unique word of length >= 2");
  if (k.length() > 24) throw std::invalid_argument("digraph capped at L <= 24");
  Digraph g;
  g.length_ = static_cast<int>(k.length());
  g.vertex_mask_ = (Vertex{1} << (g.length_ - 1)) - 1;
  g.forbidden_from_ = k.window_value(0, k.length() - 1);
  g.forbidden_to_ = k.window_value(1, k.length() - 1);
  return g;
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve((std::size_t{2} << (length_ - 1)) - 1);
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (int b = 0; b < 2; ++b)
      if (long long j = successor(v, b); j >= 0) out.emplace_back(v, static_cast<Vertex>(j));
  return out;
}

std::vector<Vertex> Digraph::predecessors(Vertex v) const {
  // i -> v requires i = b . v_1 ... v_{L-2} for b in {0,1}.
  std::vector<Vertex> preds;
  for (Vertex b = 0; b < 2; ++b) {
    const Vertex i = (v >> 1) | (b << (length_ - 2));
    if (!(i == forbidden_from_ && v == forbidden_to_)) preds.push_back(i);
  }
  return preds;
}

bool Digraph::is_strongly_connected() const {
  const Vertex n = vertex_count();
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (forward) {
        for (int b = 0; b < 2; ++b)
          if (long long j = successor(v, b); j >= 0 && !seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            stack.push_back(static_cast<Vertex>(j));
          }
      } else {
        for (Vertex p : predecessors(v))
          if (!seen[p]) {
            seen[p] = 1;
            stack.push_back(p);
          }
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (!seen[v]) return false;
    return true;
  };
  return reach(true) && reach(false);
}

std::string Digraph::to_dot() const {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < vertex_count(); ++v)
    out << "  \"" << vertex_label(v, length_ - 1) << "\";\n";
  for (auto [i, j] : edges())
    out << "  \"" << vertex_label(i, length_ - 1) << "\" -> \"" << vertex_label(j, length_ - 1)
        << "\";\n";
  out << "}\n";
  return out.str();
}

AdjacencySet adjacency_set(const UniqueWord& k) {
  AdjacencySet adj;
  adj.graph = Digraph::build(k);
  adj.start_vertex = k.window_value(1, k.length() - 1);
  adj.end_vertex = k.window_value(0, k.length() - 1);
  return adj;
}

mpz_class walk_count(const AdjacencySet& adj, std::uint64_t steps) {
  const Vertex n = adj.graph.vertex_count();
  std::vector<mpz_class> v(n), next(n);
  v[adj.start_vertex] = 1;
  for (std::uint64_t s = 0; s < steps; ++s) {
    for (Vertex i = 0; i < n; ++i) next[i] = 0;
    for (Vertex i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      for (int b = 0; b < 2; ++b)
        if (long long j = adj.graph.successor(i, b); j >= 0)
          next[static_cast<std::size_t>(j)] += v[i];
    }
    v.swap(next);
  }
  return v[adj.end_vertex];
}

std::vector<std::vector<int>> dense_adjacency(const Digraph& g) {
  std::vector<std::vector<int>> a(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (auto [i, j] : g.edges()) a[i][j] = 1;
  return a;
}

}  // namespace udooc
