#include "udooc/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace udooc {

namespace {

double log2_mpz(const mpz_class& v) {
  signed long exponent = 0;
  const double mant = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exponent);
}

double growth_or_throw(const EncoderContext& ctx) {
  if (ctx.degenerate_growth())
    throw DegenerateGrowth("growth rate is 1 for UW " + ctx.uw().to_string());
  return growth_rate(ctx.uw()).value;
}

// log2 of K_k = min over ranks i = 2..M of g^(-n_i) F[n_i - 1], where n_i is
// the smallest n with F[n] >= i. Only distinct breakpoints are visited: all
// ranks in (F[n-1], F[n]] share n.
double log2_K(const EncoderContext& ctx, std::size_t M, double log2_g) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t n = ctx.codeword_length_for_rank(2);
  mpz_class covered = ctx.cumulative_count(n);
  for (;;) {
    const double cand =
        -static_cast<double>(n) * log2_g + log2_mpz(ctx.cumulative_count(n - 1));
    best = std::min(best, cand);
    if (covered >= static_cast<unsigned long>(M)) break;
    ++n;
    covered = ctx.cumulative_count(n);
  }
  return best;
}

}  // namespace

double bound1(const EncoderContext& ctx, double p1, std::size_t M) {
  if (!(p1 > 0.0 && p1 <= 1.0)) throw std::invalid_argument("p1 must be in (0, 1]");
  if (M < 1) throw std::invalid_argument("alphabet must be nonempty");
  const std::size_t N = ctx.codeword_length_for_rank(mpz_class(static_cast<unsigned long>(M)));
  return static_cast<double>(ctx.uw().length()) + (1.0 - p1) * static_cast<double>(N);
}

double bound2(const EncoderContext& ctx, const SourceModel& model) {
  const double g = growth_or_throw(ctx);
  const double lg = std::log2(g);
  const double H = entropy(model);
  const double p1 = model.probs.at(0);
  const double log2K = model.size() < 2 ? 0.0 : log2_K(ctx, model.size(), lg);
  return static_cast<double>(ctx.uw().length()) + (H + p1 * std::log2(p1)) / lg +
         (1.0 - p1) * (1.0 - log2K / lg);
}

double bound3(std::size_t uw_length, const SourceModel& model) {
  if (uw_length <= 2) throw std::invalid_argument("bound3 requires L > 2");
  const double H = entropy(model);
  const double p1 = model.probs.at(0);
  const double p2 = model.size() > 1 ? model.probs.at(1) : 0.0;
  const double denom = std::log2(2.0 - std::ldexp(1.0, 2 - static_cast<int>(uw_length)));
  const double p2term = p2 > 0.0 ? p2 * std::log2(p2) : 0.0;
  return static_cast<double>(uw_length) + (H + p1 * std::log2(p1) + p2term) / denom +
         (2.0 - 2.0 * p1 - p2);
}

double bound4_grouped(const EncoderContext& ctx, const SourceModel& grouped, int t) {
  if (t < 1) throw std::invalid_argument("block size t must be >= 1");
  return bound2(ctx, grouped) / static_cast<double>(t);
}

std::pair<double, double> asymptotic_bound(const SourceModel& model, const EncoderContext& ctx) {
  const double g = growth_or_throw(ctx);
  if (ctx.uw().length() <= 2)
    throw std::invalid_argument("the envelope component requires L > 2");
  const double H = entropy(model);
  const double envelope =
      std::log2(2.0 - std::ldexp(1.0, 2 - static_cast<int>(ctx.uw().length())));
  return {H / std::log2(g), H / envelope};
}

BoundsReport bounds_report(const EncoderContext& ctx, const SourceModel& grouped, int t) {
  BoundsReport r;
  r.uw_length = ctx.uw().length();
  r.t = t;
  r.alphabet_size = grouped.size();
  r.p1 = grouped.probs.at(0);
  r.p2 = grouped.size() > 1 ? grouped.probs.at(1) : 0.0;
  r.entropy_bits = entropy(grouped);
  const double td = static_cast<double>(t);
  r.exact = per_letter_length(ctx, grouped, t);
  r.bound1 = bound1(ctx, r.p1, grouped.size()) / td;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (ctx.degenerate_growth()) {
    r.growth = 1.0;
    r.bound2 = nan;
    r.bound4 = nan;
    r.asymptotic_growth = nan;
    r.asymptotic_envelope = nan;
  } else {
    r.growth = growth_rate(ctx.uw()).value;
    r.bound2 = bound2(ctx, grouped) / td;
    r.bound4 = bound4_grouped(ctx, grouped, t);
    r.asymptotic_growth = r.entropy_bits / td / std::log2(r.growth);
    r.asymptotic_envelope =
        r.uw_length > 2
            ? r.entropy_bits / td /
                  std::log2(2.0 - std::ldexp(1.0, 2 - static_cast<int>(r.uw_length)))
            : nan;
  }
  r.bound3 = r.uw_length > 2 ? bound3(r.uw_length, grouped) / td : nan;
  return r;
}

}  // namespace udooc
