#include "padic/series.hpp"

namespace padic {

namespace {

// Largest e with p^e <= n (n >= 1).
long ilog(unsigned long long n, long p) {
  long e = 0;
  for (unsigned long long t = n; t >= static_cast<unsigned long long>(p);
       t /= static_cast<unsigned long long>(p))
    ++e;
  return e;
}

bool plan_hypothesis(long f, long e, bool relaxed) {
  if (e < 1 || e >= f) return false;
  mpz_class lhs = 4 * pow_p(3, e - 1);
  if (lhs + e >= 2 * f + 2) return true;
  if (relaxed && e > 2 && lhs + 2 * e >= 2 * f + 2) return true;
  if (relaxed && f == 2 && e == 1) return true;
  return false;
}

}  // namespace

TruncationPlan make_truncation_plan(long f, long e, bool relaxed) {
  if (f < 1) throw std::invalid_argument("truncation plan: f >= 1 required");
  if (!plan_hypothesis(f, e, relaxed))
    throw std::invalid_argument("truncation plan: hypothesis 4*3^(e-1)+e >= 2f+2 fails for f=" +
                                std::to_string(f) + ", e=" + std::to_string(e));
  long t = f - 2 * e + 2;
  if (t < 1)
    throw std::invalid_argument("truncation plan: modulus exponent f-2e+2 < 1, nothing to check");
  return TruncationPlan{f, e, beta_terms_for(t), t};
}

std::optional<long> smallest_valid_e(long f, bool relaxed) {
  for (long e = 1; e < f; ++e) {
    if (f - 2 * e + 2 < 1) break;
    if (plan_hypothesis(f, e, relaxed)) return e;
  }
  return std::nullopt;
}

long beta_terms_for(long target_exp) {
  if (target_exp < 1) throw std::invalid_argument("beta_terms_for: target >= 1 required");
  mpz_class rhs = 2 * pow_p(3, target_exp - 1);  // need 3^s >= 2 s^2 3^(T-1)
  long s = 2;
  while (pow_p(3, s) < rhs * s * s) ++s;
  return s;
}

PadicNumber beta(long terms, long digits, long guard) {
  if (terms < 2) throw std::invalid_argument("beta: at least the k=2 term is required");
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  const long w = digits + guard;

  HarmonicSeries h(3, w);
  h.next();  // H_1
  // inv_central tracks C(2k,k)^{-1}; starts at k = 2 with 1/6.
  PadicNumber inv_central = PadicNumber::from_rational(1, 6, 3, w);
  PadicNumber acc = PadicNumber::zero(3);
  for (long k = 2; k <= terms; ++k) {
    PadicNumber term = (inv_central * h.value()).times_rational(1, k).shifted(k - 1);
    acc = acc + term;
    // C(2(k+1), k+1) = C(2k,k) * 2(2k+1)/(k+1)
    inv_central = inv_central.times_rational(k + 1, 2 * (2 * k + 1));
    h.next();
  }
  return acc.truncated_abs(digits);
}

PadicNumber gamma(long digits) {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  if (digits > 32)
    throw std::invalid_argument("gamma: precision capped at 32 digits (cost grows as 3^(N/3))");
  long e = 0;
  while (3 * e + 2 < digits) ++e;  // stability modulus 3^(3e+2) must cover digits
  unsigned long long q = 1;
  for (long i = 0; i < e; ++i) q *= 3;
  return binom_padic(2 * q, q, 3, digits);
}

PadicNumber lehmer_partial(long terms, long p, long digits, long guard) {
  if (terms < 1) throw std::invalid_argument("lehmer_partial: terms >= 1 required");
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("lehmer_partial: odd prime required");
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  // The p = 3 partial sums sink toward zero roughly one digit per term, so
  // reserve that much headroom on top of the requested precision.
  const long w = digits + guard + terms;

  PadicNumber inv_central = PadicNumber::from_rational(1, 2, p, w);  // C(2,1)^{-1}
  PadicNumber acc = PadicNumber::zero(p);
  for (long k = 1; k <= terms; ++k) {
    acc = acc + inv_central.times_rational(1, k).shifted(k);
    inv_central = inv_central.times_rational(k + 1, 2 * (2 * k + 1));
  }
  return acc;
}

long lehmer_terms_for(long p, long target_exp) {
  if (target_exp < 1) throw std::invalid_argument("lehmer_terms_for: target >= 1 required");
  // v_p(p^k/(k C(2k,k))) >= k - ilog_p(2k-1), which is non-decreasing in k.
  long s = 1;
  while ((s + 1) - ilog(2 * (s + 1) - 1, p) < target_exp) ++s;
  return s;
}

QuadElement lehmer_closed(long p, long digits, long guard) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("lehmer_closed: odd prime required");
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  const long w = digits + guard;

  PadicNumber root = hensel_sqrt(PadicNumber::from_rational(4 - p, 4, p, w));
  QuadElement z(root, PadicNumber::from_rational(1, 2, p, w));
  QuadElement lg = padic_log(z);
  // -sqrt(-p)/sqrt(1-p/4) = (0) + (-1/root) pi
  QuadElement factor(PadicNumber::zero(p), root.inverse().negated());
  return factor * lg;
}

bool pow4_identity_holds(long n) {
  if (n < 1) throw std::invalid_argument("pow4_identity_holds: n >= 1 required");
  mpq_class acc(0);
  mpz_class central(2);  // C(2k,k) at k = 1
  mpz_class four(4);
  for (long k = 1; k <= n; ++k) {
    mpq_class term(four, 2 * k * central);
    term.canonicalize();
    acc += term;
    if (k < n) {
      four *= 4;
      central = central * (2 * (2 * k + 1)) / (k + 1);
    }
  }
  mpq_class rhs(four, central);
  rhs.canonicalize();
  rhs -= 1;
  return acc == rhs;
}

}  // namespace padic
