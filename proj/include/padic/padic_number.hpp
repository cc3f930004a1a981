#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace padic {

// Absolute-precision sentinel for values that are exactly zero.
inline constexpr long kExactDepth = 1L << 40;

// Default number of guard digits for series and sum evaluation.
inline constexpr long kDefaultGuard = 8;

// Thrown when additive cancellation eats every guaranteed digit. `deficit`
// is how many extra working digits would have been needed.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, long deficit)
      : std::runtime_error(what), deficit_(deficit) {}
  long deficit() const { return deficit_; }

 private:
  long deficit_;
};

// p^e as an mpz, e >= 0.
mpz_class pow_p(long p, long e);

// v_p of a nonzero integer.
long valuation_of(const mpz_class& n, long p);

// Canonical residue in [0, m).
mpz_class mod_pos(const mpz_class& a, const mpz_class& m);

// a^{-1} mod m; throws std::domain_error if not invertible.
mpz_class invert_mod(const mpz_class& a, const mpz_class& m);

/// A p-adic number held as p^v * u, where the unit residue u carries
/// `precision` significant base-p digits; the value is therefore pinned
/// mod p^(v + precision). Zero is a sentinel that only records how deep the
/// zeros are known to go (its depth is a lower bound on the valuation; an
/// exact zero has depth kExactDepth). Values are immutable and every
/// operation is a pure function, so they are safe to share across threads.
class PadicNumber {
 public:
  static PadicNumber from_rational(const mpz_class& numer, const mpz_class& denom,
                                   long p, long digits);
  static PadicNumber from_integer(long long value, long p, long digits);
  static PadicNumber zero(long p, long depth = kExactDepth);
  static PadicNumber one(long p, long digits);
  // p^e exactly; e may be negative.
  static PadicNumber p_power(long p, long e, long digits);
  // Assemble from parts; `unit` must be coprime to p (canonicalized mod p^digits).
  static PadicNumber from_parts(long p, long v, const mpz_class& unit, long digits);

  long prime() const { return prime_; }
  bool is_zero() const { return zero_; }
  long valuation() const;         // nonzero values only
  long precision() const;         // significant digits of the unit; nonzero only
  long known_zero_depth() const;  // zero only
  long abs_precision() const;     // value is pinned mod p^(this)
  const mpz_class& unit() const;  // nonzero only

  // Canonical residue mod p^count. Requires valuation >= 0 (a p-adic integer)
  // and count within the known precision.
  mpz_class residue(long count) const;
  // Little-endian base-p digits d0..d_{count-1} of the canonical residue.
  std::vector<long> digits(long count) const;

  PadicNumber negated() const;
  PadicNumber inverse() const;
  // Multiply by p^dv.
  PadicNumber shifted(long dv) const;
  // Multiply by the exact rational num/den (p-parts stripped into the valuation).
  PadicNumber times_rational(long long num, long long den) const;
  // Forget everything beyond p^abs.
  PadicNumber truncated_abs(long abs) const;

  friend PadicNumber operator+(const PadicNumber&, const PadicNumber&);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator*(const PadicNumber&, const PadicNumber&);
  friend PadicNumber operator/(const PadicNumber& x, const PadicNumber& y);
  PadicNumber operator-() const { return negated(); }

  // Agreement at the shared absolute precision: x == y iff all digits both
  // sides know are equal. Zero sentinels compare equal to anything that
  // vanishes to the shared depth.
  friend bool operator==(const PadicNumber&, const PadicNumber&);
  friend bool operator!=(const PadicNumber& x, const PadicNumber& y) { return !(x == y); }

  std::string to_string() const;

 private:
  PadicNumber(long p, long v, mpz_class unit, long prec);  // nonzero
  PadicNumber(long p, long depth);                         // zero

  long prime_;
  bool zero_;
  long valuation_;  // unused when zero_
  mpz_class unit_;  // in [0, p^prec_), coprime to p; 0 when zero_
  long prec_;       // >= 1; unused when zero_
  long depth_;      // known-zero depth; unused when !zero_
};

// "d0 d1 d2 ..." rendering of a digit list.
std::string format_digits(const std::vector<long>& digits);

}  // namespace padic
