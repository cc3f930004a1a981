#include "padic/sums.hpp"

namespace padic {

namespace {

long ilog3(unsigned long long n) {
  long e = 0;
  for (unsigned long long t = n; t >= 3; t /= 3) ++e;
  return e;
}

unsigned long long pow3_ull(long f) {
  if (f < 0 || f > 38) throw std::invalid_argument("3^f exceeds the supported machine range");
  unsigned long long q = 1;
  for (long i = 0; i < f; ++i) q *= 3;
  return q;
}

}  // namespace

const char* to_string(SumMethod m) {
  switch (m) {
    case SumMethod::exact: return "exact";
    case SumMethod::iterative: return "iterative";
    case SumMethod::fast: return "fast";
  }
  return "?";
}

mpz_class sum_central_exact(long f) {
  if (f < 0) throw std::invalid_argument("sum_central_exact: f >= 0 required");
  if (f > 8)
    throw std::invalid_argument(
        "sum_central_exact: refusing f > 8 (summands reach thousands of digits); "
        "use the iterative or fast method");
  unsigned long long q = pow3_ull(f);
  mpz_class total(0), central(1);
  for (unsigned long long k = 0; k < q; ++k) {
    total += central;
    central *= static_cast<unsigned long>(2 * (2 * k + 1));
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return total;
}

SumResult sum_central_iterative(long f, long modulus_exp, long guard) {
  if (f < 0 || modulus_exp < 1)
    throw std::invalid_argument("sum_central_iterative: need f >= 0, modulus_exp >= 1");
  if (f > 13)
    throw std::invalid_argument(
        "sum_central_iterative: 3^f term iterations beyond f = 13 take minutes; "
        "use the fast method");
  const long w = modulus_exp + guard;
  unsigned long long q = pow3_ull(f);

  PadicNumber central = PadicNumber::one(3, w);
  PadicNumber acc = PadicNumber::zero(3);
  try {
    for (unsigned long long k = 0; k < q; ++k) {
      acc = acc + central;
      central = central.times_rational(2 * (2 * static_cast<long long>(k) + 1),
                                       static_cast<long long>(k) + 1);
    }
  } catch (const PrecisionError& e) {
    throw PrecisionError("sum_central_iterative: rerun with at least " +
                             std::to_string(guard + e.deficit()) + " guard digits (" + e.what() + ")",
                         e.deficit());
  }
  return SumResult{f, modulus_exp, acc.residue(modulus_exp), SumMethod::iterative, 0};
}

PadicNumber binom_row_q(long f, unsigned long long k, long digits) {
  unsigned long long q = pow3_ull(f);
  if (k < 1 || k > q) throw std::invalid_argument("binom_row_q: 1 <= k <= q required");
  mpz_class mod = pow_p(3, digits);
  mpz_class num(1), den(1);
  long v = 0;
  for (unsigned long long i = 1; i < k; ++i) {
    unsigned long long a = q - i;
    while (a % 3 == 0) {
      a /= 3;
      ++v;
    }
    unsigned long long b = i;
    while (b % 3 == 0) {
      b /= 3;
      --v;
    }
    mpz_mul_ui(num.get_mpz_t(), num.get_mpz_t(), a);
    mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), b);
    if (mpz_size(num.get_mpz_t()) > 24) num = mod_pos(num, mod);
    if (mpz_size(den.get_mpz_t()) > 24) den = mod_pos(den, mod);
  }
  mpz_class u = mod_pos(num * invert_mod(mod_pos(den, mod), mod), mod);
  return PadicNumber::from_parts(3, v, u, digits);
}

SumResult sum_central_fast(long f, long modulus_exp) {
  if (f < 0 || modulus_exp < 1)
    throw std::invalid_argument("sum_central_fast: need f >= 0, modulus_exp >= 1");
  const long m_exp = modulus_exp;
  const long need = m_exp - f;  // precision required of the series factor
  mpz_class big_mod = pow_p(3, m_exp);
  if (need <= 0) {
    // v_3(S) = 2f >= M: the residue is outright zero.
    return SumResult{f, m_exp, mpz_class(0), SumMethod::fast, 0};
  }

  // Cutoff: v_3 of the k-th term is >= (k-1) - ilog3(2k-1) (non-decreasing),
  // so stop once the next term already clears `need`.
  long m = 1;
  while ((m + 1 - 1) - ilog3(2 * (m + 1) - 1) < need) ++m;

  const long w = m_exp + kDefaultGuard;
  unsigned long long q = pow3_ull(f);

  PadicNumber inv_central = PadicNumber::from_rational(1, 2, 3, w);  // C(2,1)^{-1}
  PadicNumber row = PadicNumber::one(3, w);                          // C(q-1, 0)
  PadicNumber acc = PadicNumber::zero(3);
  for (long k = 1; k <= m; ++k) {
    long long sign = (k % 2 == 1) ? 1 : -1;
    acc = acc + (inv_central * row).times_rational(sign, k).shifted(k - 1);
    inv_central = inv_central.times_rational(k + 1, 2 * (2 * k + 1));
    // C(q-1, k) = C(q-1, k-1) * (q-k)/k
    unsigned long long a = q - static_cast<unsigned long long>(k);
    row = row.times_rational(static_cast<long long>(a), k);
  }

  PadicNumber sigma = acc.truncated_abs(need);
  if (sigma.is_zero())  // S = q * C(2q,q) * sigma vanishes mod 3^(f+need) = 3^M
    return SumResult{f, m_exp, mpz_class(0), SumMethod::fast, m};

  // The series factor contributes 3^v0 * u with u pinned mod 3^(need - v0),
  // so the central binomial is only needed to that precision. Reduce it
  // through the Jacobsthal stability modulus 3^(3e+2).
  const long v0 = sigma.valuation();
  const long need2 = need - v0;
  long e = 0;
  while (3 * e + 2 < need2 && e < f) ++e;
  unsigned long long qe = pow3_ull(e);
  PadicNumber central = binom_padic(2 * qe, qe, 3, need2);

  mpz_class u = mod_pos(sigma.unit(), pow_p(3, need2));
  mpz_class res = mod_pos(u * central.residue(need2) * pow_p(3, f + v0), big_mod);
  return SumResult{f, m_exp, res, SumMethod::fast, m};
}

mpz_class scaled_sum_residue(long f, long t, SumMethod method, long* terms_used) {
  if (t < 1) throw std::invalid_argument("scaled_sum_residue: t >= 1 required");
  mpz_class s_mod;  // S mod 3^(2f+t)
  long used = 0;
  switch (method) {
    case SumMethod::exact:
      s_mod = mod_pos(sum_central_exact(f), pow_p(3, 2 * f + t));
      break;
    case SumMethod::iterative:
      s_mod = sum_central_iterative(f, 2 * f + t).residue;
      break;
    case SumMethod::fast: {
      SumResult r = sum_central_fast(f, 2 * f + t);
      s_mod = r.residue;
      used = r.terms_used;
      break;
    }
  }
  if (terms_used) *terms_used = used;
  mpz_class q2 = pow_p(3, 2 * f);
  if (!mpz_divisible_p(s_mod.get_mpz_t(), q2.get_mpz_t()))
    throw std::runtime_error("scaled_sum_residue: S(3^" + std::to_string(f) +
                             ") is not divisible by 3^" + std::to_string(2 * f));
  mpz_class u;
  mpz_divexact(u.get_mpz_t(), s_mod.get_mpz_t(), q2.get_mpz_t());
  return mod_pos(u, pow_p(3, t));
}

bool sum_identity_exact(long n) {
  if (n < 1) throw std::invalid_argument("sum_identity_exact: n >= 1 required");
  mpz_class lhs(0), central(1);
  std::vector<mpz_class> centrals;  // C(2k,k), k = 0..n
  centrals.reserve(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    centrals.push_back(central);
    if (k < n) lhs += central;
    central *= 2 * (2 * k + 1);
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  mpq_class sigma(0);
  mpz_class pw(1);      // (-3)^(k-1)
  mpz_class row(1);     // C(n-1, k-1)
  for (long k = 1; k <= n; ++k) {
    mpq_class term(pw * row, k * centrals[static_cast<size_t>(k)]);
    term.canonicalize();
    sigma += term;
    pw *= -3;
    row = row * (n - k) / k;
  }
  mpq_class rhs = mpq_class(n * centrals[static_cast<size_t>(n)]) * sigma;
  rhs.canonicalize();
  return mpq_class(lhs) == rhs;
}

}  // namespace padic
