#include "udooc/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace udooc {

HPolynomial h_polynomial(const UniqueWord& k) {
  if (k.length() < 2) throw std::invalid_argument("h_polynomial requires L >= 2");
  const auto L = k.length();
  const auto r = overlap_vector(k);
  // (1 - 2z) * (1 + sum r(i) z^i) + z^L
  std::vector<long long> coeffs(L + 1, 0);
  coeffs[0] = 1;
  for (std::size_t i = 1; i < L; ++i) {
    if (!r.entries[i]) continue;
    coeffs[i] += 1;
    coeffs[i + 1] -= 2;
  }
  coeffs[1] -= 2;
  coeffs[L] += 1;
  return HPolynomial{std::move(coeffs)};
}

double h_eval(const HPolynomial& h, double z) {
  double acc = 0.0;
  for (auto it = h.coeffs.rbegin(); it != h.coeffs.rend(); ++it) acc = acc * z + static_cast<double>(*it);
  return acc;
}

std::vector<mpz_class> determinant_polynomial(const AdjacencySet& adj) {
  const Vertex n = adj.graph.vertex_count();
  // Power sums p[s] = tr(A^s), s = 1..n, by propagating each basis vector.
  std::vector<mpz_class> p(n + 1, 0);
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::vector<std::vector<mpz_class>> local(threads, std::vector<mpz_class>(n + 1, 0));
#pragma omp parallel for schedule(static)
  for (long long start = 0; start < static_cast<long long>(n); ++start) {
#ifdef _OPENMP
    auto& mine = local[omp_get_thread_num()];
#else
    auto& mine = local[0];
#endif
    std::vector<mpz_class> u(n), next(n);
    u[static_cast<std::size_t>(start)] = 1;
    for (Vertex s = 1; s <= n; ++s) {
      for (Vertex i = 0; i < n; ++i) next[i] = 0;
      for (Vertex i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int b = 0; b < 2; ++b)
          if (long long j = adj.graph.successor(i, b); j >= 0)
            next[static_cast<std::size_t>(j)] += u[i];
      }
      u.swap(next);
      mine[s] += u[static_cast<std::size_t>(start)];
    }
  }
  for (const auto& mine : local)
    for (Vertex s = 1; s <= n; ++s) p[s] += mine[s];

  // Newton's identities: d*e_d = sum_{i=1}^{d} (-1)^(i-1) e_{d-i} p_i.
  std::vector<mpz_class> e(n + 1, 0);
  e[0] = 1;
  for (Vertex d = 1; d <= n; ++d) {
    mpz_class acc = 0;
    for (Vertex i = 1; i <= d; ++i) {
      if (i % 2 == 1)
        acc += e[d - i] * p[i];
      else
        acc -= e[d - i] * p[i];
    }
    mpz_divexact_ui(e[d].get_mpz_t(), acc.get_mpz_t(), d);
  }

  // det(I - A z) = prod (1 - lambda_i z) = sum_d (-1)^d e_d z^d.
  std::vector<mpz_class> det(n + 1);
  for (Vertex d = 0; d <= n; ++d) det[d] = (d % 2 == 0) ? e[d] : -e[d];
  return det;
}

bool verify_h_equals_det(const UniqueWord& k) {
  if (k.length() < 2 || k.length() > 8)
    throw std::invalid_argument("verify_h_equals_det capped at 2 <= L <= 8");
  const auto h = h_polynomial(k);
  const auto det = determinant_polynomial(adjacency_set(k));
  for (std::size_t d = 0; d < det.size(); ++d) {
    const long want = d < h.coeffs.size() ? static_cast<long>(h.coeffs[d]) : 0;
    if (det[d] != want) return false;
  }
  return true;
}

namespace detail {

LccdeSeed lccde_seed(const UniqueWord& k, const AdjacencySet& adj) {
  LccdeSeed seed;
  seed.r = overlap_vector(k).entries;
  seed.length = k.length();
  seed.c0_walk = walk_count(adj, k.length() - 1);
  return seed;
}

void extend_codeword_counts(const LccdeSeed& seed, std::vector<mpz_class>& c, std::size_t n_max) {
  const std::size_t L = seed.length;
  auto at = [&](std::size_t j) -> const mpz_class& { return j == 0 ? seed.c0_walk : c[j]; };
  for (std::size_t n = c.size(); n <= n_max; ++n) {
    mpz_class value = 2 * at(n - 1) - at(n - L);
    for (std::size_t i = 1; i < L; ++i) {
      if (!seed.r[i]) continue;
      value += 2 * at(n - i - 1) - at(n - i);
    }
    c.push_back(std::move(value));
  }
}

}  // namespace detail

std::vector<mpz_class> count_codewords(const UniqueWord& k, std::size_t n_max) {
  if (k.length() < 2) throw std::invalid_argument("count_codewords requires L >= 2");
  const auto L = k.length();
  const auto adj = adjacency_set(k);
  std::vector<mpz_class> c;
  c.reserve(n_max + 1);
  c.emplace_back(1);  // the null codeword, by definition
  for (std::size_t n = 1; n < L && n <= n_max; ++n) c.push_back(walk_count(adj, n + L - 1));
  if (n_max >= L) extend_codeword_counts(detail::lccde_seed(k, adj), c, n_max);
  return c;
}

std::vector<mpz_class> count_s(const UniqueWord& k, std::size_t n_max) {
  if (k.length() < 2) throw std::invalid_argument("count_s requires L >= 2");
  const auto L = k.length();
  const auto r = overlap_vector(k).entries;
  std::vector<mpz_class> s;
  s.reserve(n_max + 1);
  for (std::size_t n = 0; n < L && n <= n_max; ++n) {
    mpz_class v = 1;
    v <<= n;
    s.push_back(std::move(v));
  }
  for (std::size_t n = L; n <= n_max; ++n) {
    mpz_class value = 2 * s[n - 1] - s[n - L];
    for (std::size_t i = 1; i < L; ++i) {
      if (!r[i]) continue;
      value += 2 * s[n - i - 1] - s[n - i];
    }
    s.push_back(std::move(value));
  }
  return s;
}

std::vector<mpz_class> cumulative(const std::vector<mpz_class>& c) {
  std::vector<mpz_class> F;
  F.reserve(c.size());
  mpz_class acc = 0;
  for (const auto& v : c) {
    acc += v;
    F.push_back(acc);
  }
  return F;
}

CountTable make_count_table(const UniqueWord& k, std::size_t n_max) {
  CountTable t;
  t.uw = k;
  t.c = count_codewords(k, n_max);
  t.s = count_s(k, n_max);
  t.F = cumulative(t.c);
  return t;
}

GrowthRate growth_rate(const UniqueWord& k) {
  if (k.length() < 2) throw std::invalid_argument("growth_rate requires L >= 2");
  const auto& bits = k.bits();
  if (bits.size() == 2 && bits[0] != bits[1]) return GrowthRate{1.0, true};

  const auto h = h_polynomial(k);
  // h(0) = 1 > 0 and every root has modulus >= 1/2, so the first sign change
  // of the forward scan brackets the Perron root 1/g.
  double lo = 0.0, hi = 0.0;
  for (double z = 1e-4;; z += 1e-4) {
    if (h_eval(h, z) <= 0.0) {
      lo = z - 1e-4;
      hi = z;
      break;
    }
    if (z > 1.0) throw std::logic_error("growth_rate: no root located in (0, 1]");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (h_eval(h, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return GrowthRate{1.0 / (0.5 * (lo + hi)), false};
}

std::pair<double, double> growth_rate_bounds(int L) {
  if (L < 2) throw std::invalid_argument("growth_rate_bounds requires L >= 2");
  return {2.0 - std::ldexp(1.0, 2 - L), 2.0 - std::ldexp(1.0, -L)};
}

double asymptotic_class(const UniqueWord& k) { return growth_rate(k).value; }

std::vector<AsymptoticClass> asymptotic_classes(int L) {
  if (L < 2 || L > 24) throw std::invalid_argument("asymptotic_classes requires 2 <= L <= 24");
  const std::uint64_t words = 1ull << L;
  std::vector<double> growth(words);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long w = 0; w < static_cast<long long>(words); ++w) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) bits[static_cast<std::size_t>(i)] = (w >> (L - 1 - i)) & 1;
    growth[static_cast<std::size_t>(w)] = growth_rate(UniqueWord(std::move(bits))).value;
  }

  std::vector<std::uint64_t> order(words);
  for (std::uint64_t w = 0; w < words; ++w) order[w] = w;
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (growth[a] != growth[b]) return growth[a] > growth[b];
    return a < b;
  });

  std::vector<AsymptoticClass> classes;
  for (std::uint64_t w : order) {
    if (classes.empty() || std::abs(classes.back().growth - growth[w]) > 1e-9) {
      classes.push_back(AsymptoticClass{growth[w], {}});
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) bits[static_cast<std::size_t>(i)] = (w >> (L - 1 - i)) & 1;
    classes.back().members.emplace_back(std::move(bits));
  }
  return classes;
}

}  // namespace udooc
