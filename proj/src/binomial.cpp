#include "padic/binomial.hpp"

namespace padic {

long kummer_val(unsigned long long n, unsigned long long k, long p) {
  if (k > n) throw std::invalid_argument("kummer_val: k > n");
  if (p < 2) throw std::invalid_argument("kummer_val: bad prime");
  const unsigned long long up = static_cast<unsigned long long>(p);
  unsigned long long a = k, b = n - k;
  long carries = 0;
  unsigned long long carry = 0;
  while (a || b || carry) {
    unsigned long long s = a % up + b % up + carry;
    carry = s >= up ? 1 : 0;
    carries += static_cast<long>(carry);
    a /= up;
    b /= up;
  }
  return carries;
}

PadicNumber binom_padic(unsigned long long n, unsigned long long k, long p, long digits) {
  if (k > n) throw std::invalid_argument("binom_padic: k > n");
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  if (k > n - k) k = n - k;
  if (k == 0) return PadicNumber::one(p, digits);

  const unsigned long long up = static_cast<unsigned long long>(p);
  mpz_class mod = pow_p(p, digits);
  mpz_class num(1), den(1);
  long v = 0;
  for (unsigned long long i = 1; i <= k; ++i) {
    unsigned long long a = n - k + i;
    while (a % up == 0) {
      a /= up;
      ++v;
    }
    unsigned long long b = i;
    while (b % up == 0) {
      b /= up;
      --v;
    }
    mpz_mul_ui(num.get_mpz_t(), num.get_mpz_t(), a);
    mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), b);
    if (mpz_size(num.get_mpz_t()) > 24) num = mod_pos(num, mod);
    if (mpz_size(den.get_mpz_t()) > 24) den = mod_pos(den, mod);
  }
  mpz_class u = mod_pos(num * invert_mod(mod_pos(den, mod), mod), mod);
  return PadicNumber::from_parts(p, v, u, digits);
}

PadicNumber harmonic(unsigned long long k, long p, long digits) {
  HarmonicSeries h(p, digits);
  if (k == 0) return PadicNumber::zero(p);
  for (unsigned long long i = 0; i < k; ++i) h.next();
  return h.value();
}

HarmonicSeries::HarmonicSeries(long p, long digits)
    : h_(PadicNumber::zero(p)), k_(0), digits_(digits) {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
}

const PadicNumber& HarmonicSeries::next() {
  ++k_;
  h_ = h_ + PadicNumber::from_rational(1, mpz_class(static_cast<unsigned long>(k_)),
                                       h_.prime(), digits_);
  return h_;
}

ValuationBound central_val_bound(unsigned long long k, long p) {
  if (k < 1) throw std::invalid_argument("central_val_bound: k >= 1 required");
  if (p < 2) throw std::invalid_argument("central_val_bound: bad prime");
  unsigned long long cap = (p == 2) ? k + 1 : 2 * k - 1;
  long e = 0;
  unsigned long long pw = 1;
  while (pw <= cap / static_cast<unsigned long long>(p)) {
    pw *= static_cast<unsigned long long>(p);
    ++e;
  }
  return ValuationBound{e, pw == cap};
}

}  // namespace padic
