#pragma once

#include "padic/padic_number.hpp"

namespace padic {

// Number of base-p carries when adding k and n-k; this equals v_p(C(n,k)) by
// Kummer's theorem.
long kummer_val(unsigned long long n, unsigned long long k, long p);

// C(n,k) as an exact PadicNumber: valuation from the carries, unit from the
// p-stripped rising product, reduced mod p^digits. O(min(k, n-k)) word ops.
PadicNumber binom_padic(unsigned long long n, unsigned long long k, long p, long digits);

// H_k = sum_{i<=k} 1/i as an exact p-adic value. H_0 is the zero sentinel.
PadicNumber harmonic(unsigned long long k, long p, long digits);

/// Streams H_1, H_2, ... at a fixed working precision, keeping only the
/// running value. Single consumer; not shared between threads.
class HarmonicSeries {
 public:
  HarmonicSeries(long p, long digits);
  // Advances to the next index and returns H_k for it (first call: H_1).
  const PadicNumber& next();
  const PadicNumber& value() const { return h_; }
  unsigned long long index() const { return k_; }

 private:
  PadicNumber h_;
  unsigned long long k_;
  long digits_;
};

struct ValuationBound {
  long exponent;  // largest a with p^a <= cap, cap = 2k-1 (p odd) or k+1 (p=2)
  bool tight;     // the cap is itself a power of p
};

// Bound data for the highest power of p dividing k*C(2k,k) (p odd) resp.
// C(2k,k) (p = 2): that power never exceeds the cap and reaches it exactly
// when the cap is a power of p. Hence v <= exponent always, and v == exponent
// is forced when tight.
ValuationBound central_val_bound(unsigned long long k, long p);

}  // namespace padic
