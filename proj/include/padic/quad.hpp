#pragma once

#include "padic/padic_number.hpp"

namespace padic {

/// Element a + b*pi of the ramified quadratic extension Q_p(sqrt(-p)), with
/// pi = sqrt(-p), pi^2 = -p, p odd. Valuations are half-integers, so they are
/// kept doubled: half_valuation() == 2*v. Immutable, pure operations.
class QuadElement {
 public:
  QuadElement(PadicNumber a, PadicNumber b);
  static QuadElement from_scalar(const PadicNumber& a);
  static QuadElement zero(long p);
  static QuadElement one(long p, long digits);

  const PadicNumber& a() const { return a_; }
  const PadicNumber& b() const { return b_; }
  long prime() const { return a_.prime(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // min(2 v(a), 2 v(b) + 1); for zero components this is a known lower bound.
  long half_valuation() const;
  // The element is pinned mod pi^(this).
  long half_abs_precision() const;

  QuadElement negated() const;
  QuadElement scaled(const PadicNumber& c) const;

  friend QuadElement operator+(const QuadElement&, const QuadElement&);
  friend QuadElement operator-(const QuadElement& x, const QuadElement& y);
  // (a+b pi)(c+d pi) = (ac - p bd) + (ad + bc) pi.
  friend QuadElement operator*(const QuadElement&, const QuadElement&);
  QuadElement operator-() const { return negated(); }
  friend bool operator==(const QuadElement&, const QuadElement&);
  friend bool operator!=(const QuadElement& x, const QuadElement& y) { return !(x == y); }

  std::string to_string() const;

 private:
  PadicNumber a_, b_;
};

// Square root in Z_p by Hensel lifting, p odd. The valuation must be even and
// the unit part a quadratic residue mod p. Branch choice: the root congruent
// to 1 mod p when the input is (the series branch of sqrt(1+x)); otherwise
// the root whose mod-p residue lies in [1, (p-1)/2].
PadicNumber hensel_sqrt(const PadicNumber& x);

// log z = sum_{k>=1} (-1)^{k+1} (z-1)^k / k; requires half_valuation(z-1) >= 1,
// which makes the series converge in the ramified extension.
QuadElement padic_log(const QuadElement& z);

}  // namespace padic
