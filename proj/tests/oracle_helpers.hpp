#pragma once

// Small independent oracles for the tests: plain GMP arithmetic, no use of
// the library's own representation.

#include <gmpxx.h>

#include <random>

namespace oracle {

inline mpz_class pw(long p, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)p, (unsigned long)e);
  return r;
}

inline mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw std::runtime_error("no inverse");
  return r;
}

inline mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline long vp(mpz_class n, long p) {
  if (n == 0) throw std::runtime_error("vp(0)");
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), (unsigned long)p);
    ++v;
  }
  return v;
}

// a/b mod p^N for b coprime to p after stripping the shared p-power;
// returns the canonical residue of the p-adic integer a/b (requires v >= 0).
inline mpz_class rational_mod(mpz_class a, mpz_class b, long p, long N) {
  mpz_class m = pw(p, N);
  long va = a == 0 ? 0 : vp(a, p);
  long vb = vp(b, p);
  if (a == 0) return 0;
  mpz_class pa = pw(p, va), pb = pw(p, vb);
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), pa.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), pb.get_mpz_t());
  if (va - vb < 0) throw std::runtime_error("rational_mod: negative valuation");
  mpz_class r = a * inv_mod(b, m) % m * pw(p, va - vb) % m;
  if (r < 0) r += m;
  return r;
}

inline std::mt19937_64 rng(unsigned long long seed = 20260809ULL) { return std::mt19937_64(seed); }

}  // namespace oracle
