#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <utility>
#include <vector>

#include "udooc/digraph.hpp"
#include "udooc/uw.hpp"

namespace udooc {

// h_k(z) = (1 - 2z)(1 + sum_{i=1}^{L-1} r_k(i) z^i) + z^L. coeffs[d] is the
// coefficient of z^d; the constant term is 1 and the degree is exactly L.
struct HPolynomial {
  std::vector<long long> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

HPolynomial h_polynomial(const UniqueWord& k);
double h_eval(const HPolynomial& h, double z);

// Coefficients of det(I - A z), all 2^(L-1)+1 of them, computed from traces
// of sparse matrix powers via Newton's identities over exact integers.
std::vector<mpz_class> determinant_polynomial(const AdjacencySet& adj);

// Checks h_k(z) == det(I - A_k z) symbolically. Capped at L <= 8.
bool verify_h_equals_det(const UniqueWord& k);

struct CountTable {
  UniqueWord uw;
  std::vector<mpz_class> c;  // c[n] = number of length-n codewords, c[0] = 1
  std::vector<mpz_class> s;  // s[n] = length-n words avoiding k as a subword
  std::vector<mpz_class> F;  // F[n] = sum of c[0..n]
};

std::vector<mpz_class> count_codewords(const UniqueWord& k, std::size_t n_max);
std::vector<mpz_class> count_s(const UniqueWord& k, std::size_t n_max);
std::vector<mpz_class> cumulative(const std::vector<mpz_class>& c);
CountTable make_count_table(const UniqueWord& k, std::size_t n_max);

struct GrowthRate {
  double value = 1.0;
  bool is_degenerate = false;  // k in {01, 10}: double root at z = 1
};

// 1/z* for the unique root z* of h_k in (0, 1], bisected to 1e-12.
GrowthRate growth_rate(const UniqueWord& k);

// Theorem-3 envelope (2 - 2^(2-L), 2 - 2^(-L)).
std::pair<double, double> growth_rate_bounds(int L);

// The growth value used to bucket UWs into asymptotic equivalence classes.
double asymptotic_class(const UniqueWord& k);

struct AsymptoticClass {
  double growth = 0.0;
  std::vector<UniqueWord> members;
};

// All 2^L unique words bucketed by growth rate (tolerance 1e-9), largest
// growth first. The per-UW scan runs in parallel.
std::vector<AsymptoticClass> asymptotic_classes(int L);

namespace detail {

// Shared seed for the LCCDE c_n = sum r(i)(2c_{n-i-1} - c_{n-i}) + 2c_{n-1}
// - c_{n-L}, n >= L. The n = L step must read the Eq.-(3) walk value of c_0
// (0 or 1), not the definitional c_0 = 1; they differ exactly when k . k
// contains k as an internal subword.
struct LccdeSeed {
  std::vector<std::uint8_t> r;
  std::size_t length = 0;
  mpz_class c0_walk;
};

LccdeSeed lccde_seed(const UniqueWord& k, const AdjacencySet& adj);

// Extends c (which must already hold c[0..L-1], with c[0] = 1) to n_max.
void extend_codeword_counts(const LccdeSeed& seed, std::vector<mpz_class>& c, std::size_t n_max);

}  // namespace detail

}  // namespace udooc
