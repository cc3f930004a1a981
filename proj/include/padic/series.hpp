#pragma once

#include <optional>

#include "padic/binomial.hpp"
#include "padic/quad.hpp"

namespace padic {

/// Parameter bundle for evaluating S(3^f)/3^(2f) to a prescribed 3-adic
/// precision: split exponent e, series length s, and the modulus exponent
/// f - 2e + 2 the pair supports.
struct TruncationPlan {
  long f = 0;
  long e = 0;
  long s = 0;
  long modulus_exp = 0;
};

// Validates 0 < e < f with 4*3^(e-1) + e >= 2f + 2 and fills in
// s = beta_terms_for(f - 2e + 2). Relaxed mode additionally admits
// 4*3^(e-1) + 2e >= 2f + 2 for e > 2, plus the pair f = 2, e = 1.
// Throws std::invalid_argument when the hypothesis fails.
TruncationPlan make_truncation_plan(long f, long e, bool relaxed = false);

// Smallest admissible e for f, if any (modulus exponent must stay >= 1).
std::optional<long> smallest_valid_e(long f, bool relaxed = false);

// Smallest s >= 2 with 3^s / (2 s^2) >= 3^(target_exp - 1); past s every
// further beta term vanishes mod 3^target_exp.
long beta_terms_for(long target_exp);

// beta = sum_{k=2..terms} 3^(k-1)/k * C(2k,k)^{-1} * H_{k-1}, exact in
// 3-adic arithmetic, returned with `digits` significant digits.
PadicNumber beta(long terms, long digits, long guard = kDefaultGuard);

// gamma = 3-adic limit of C(2*3^f, 3^f); returns it pinned mod 3^digits by
// evaluating at the smallest f whose stability modulus covers that (cost
// grows as 3^(digits/3)).
PadicNumber gamma(long digits);

// Partial sum of sum_k p^k / (k C(2k,k)) through `terms`; returned at full
// working precision so deep valuations stay visible.
PadicNumber lehmer_partial(long terms, long p, long digits, long guard = kDefaultGuard);

// Term count past which every further term of the series above has
// valuation >= target_exp.
long lehmer_terms_for(long p, long target_exp);

// -sqrt(-p)/sqrt(1-p/4) * log(sqrt(1-p/4) + sqrt(-p)/2) in Q_p(sqrt(-p)).
// For p = 3 the log argument is a cube root of unity and the result is the
// zero sentinel; no shortcut is taken, the machinery runs either way.
QuadElement lehmer_closed(long p, long digits, long guard = kDefaultGuard);

// sum_{k<=n} 4^k/(2k C(2k,k)) == 4^n / C(2n,n) - 1, checked over exact
// rationals.
bool pow4_identity_holds(long n);

}  // namespace padic
