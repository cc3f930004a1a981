#pragma once

#include "padic/binomial.hpp"

namespace padic {

enum class SumMethod { exact, iterative, fast };

const char* to_string(SumMethod m);

/// Residue of S(3^f) = sum_{k<3^f} C(2k,k) modulo 3^modulus_exp, together
/// with how it was obtained.
struct SumResult {
  long f = 0;
  long modulus_exp = 0;
  mpz_class residue;
  SumMethod method = SumMethod::exact;
  long terms_used = 0;  // fast method only: series cutoff m
};

// Exact big-integer S(3^f). Refuses f > 8: the top summand C(2*3^8, 3^8)
// already has ~3900 digits and larger f serves no verification purpose.
mpz_class sum_central_exact(long f);

// S(3^f) mod 3^M by iterating C(2(k+1),k+1) = C(2k,k) * 2(2k+1)/(k+1) in
// valuation-tracked arithmetic over all q terms. Exact mod 3^M; cost O(3^f).
SumResult sum_central_iterative(long f, long modulus_exp, long guard = kDefaultGuard);

// C(3^f - 1, k - 1), exact (a 3-adic unit for k - 1 < 3^f).
PadicNumber binom_row_q(long f, unsigned long long k, long digits);

// S(3^f) mod 3^M via the truncated identity
//   S(q) = q C(2q,q) sum_{k>=1} (-3)^(k-1)/k * C(2k,k)^{-1} * C(q-1,k-1),
// with the cutoff chosen so every dropped term vanishes mod 3^M and C(2q,q)
// reduced through the Jacobsthal stability modulus. Cost ~O(M^2), independent
// of q.
SumResult sum_central_fast(long f, long modulus_exp);

// S(3^f) / 3^(2f) mod 3^t by the chosen method. Throws std::runtime_error if
// the computed residue is not divisible by 3^(2f) (that would falsify the
// q^2 divisibility).
mpz_class scaled_sum_residue(long f, long t, SumMethod method, long* terms_used = nullptr);

// The finite identity behind the fast method, at arbitrary n >= 1, checked
// over exact rationals.
bool sum_identity_exact(long n);

}  // namespace padic
