#pragma once

#include <cstdint>
#include <utility>

#include "udooc/codec.hpp"
#include "udooc/source.hpp"

namespace udooc {

struct BoundsReport {
  // Inputs echoed.
  std::size_t uw_length = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double entropy_bits = 0.0;  // entropy of the (grouped) model
  double growth = 0.0;
  std::size_t alphabet_size = 0;
  int t = 1;

  // Values; quiet NaN where a bound does not apply.
  double exact = 0.0;
  double bound1 = 0.0;
  double bound2 = 0.0;
  double bound3 = 0.0;
  double bound4 = 0.0;
  double asymptotic_growth = 0.0;    // H / log2 g
  double asymptotic_envelope = 0.0;  // H / log2(2 - 2^(2-L))
};

// L + (1 - p1) N_k with N_k = min{ n : F[n] >= M }.
double bound1(const EncoderContext& ctx, double p1, std::size_t M);

// L + (H + p1 log2 p1)/log2 g + (1 - p1)(1 - log_g K_k). K_k scans the
// distinct codeword-length breakpoints of ranks 2..M. The paper's evaluated
// tables fix K_k = min g^(-n_i) F[n_i - 1]; that convention is used here.
// Throws DegenerateGrowth when g = 1 (k in {01, 10}).
double bound2(const EncoderContext& ctx, const SourceModel& model);

// UW-independent: L + (H + p1 log2 p1 + p2 log2 p2)/log2(2 - 2^(2-L))
// + (2 - 2 p1 - p2). Throws std::invalid_argument for L <= 2.
double bound3(std::size_t uw_length, const SourceModel& model);

// Per-letter bound for the t-grouped model (reduces to bound2 at t = 1).
double bound4_grouped(const EncoderContext& ctx, const SourceModel& grouped, int t);

// (H / log2 g, H / log2(2 - 2^(2-L))). Throws DegenerateGrowth for g = 1
// and std::invalid_argument for L <= 2.
std::pair<double, double> asymptotic_bound(const SourceModel& model, const EncoderContext& ctx);

// Full per-letter report for a t-grouped model.
BoundsReport bounds_report(const EncoderContext& ctx, const SourceModel& grouped, int t);

}  // namespace udooc
