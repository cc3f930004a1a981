#include "padic/padic_number.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

void check_prime(long p) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
}

void check_same_prime(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime())
    throw std::invalid_argument("operands have different primes");
}

long clamp_depth(long d) { return std::min(d, kExactDepth); }

}  // namespace

mpz_class pow_p(long p, long e) {
  if (e < 0) throw std::invalid_argument("pow_p: negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

long valuation_of(const mpz_class& n, long p) {
  if (n == 0) throw std::invalid_argument("valuation_of: zero has no finite valuation");
  mpz_class rest;
  mpz_class pz(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class invert_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("invert_mod: argument is not invertible");
  return r;
}

PadicNumber::PadicNumber(long p, long v, mpz_class unit, long prec)
    : prime_(p), zero_(false), valuation_(v), unit_(std::move(unit)), prec_(prec), depth_(0) {}

PadicNumber::PadicNumber(long p, long depth)
    : prime_(p), zero_(true), valuation_(0), unit_(0), prec_(0), depth_(clamp_depth(depth)) {}

PadicNumber PadicNumber::zero(long p, long depth) {
  check_prime(p);
  return PadicNumber(p, depth);
}

PadicNumber PadicNumber::one(long p, long digits) {
  check_prime(p);
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  return PadicNumber(p, 0, mpz_class(1), digits);
}

PadicNumber PadicNumber::p_power(long p, long e, long digits) {
  check_prime(p);
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  return PadicNumber(p, e, mpz_class(1), digits);
}

PadicNumber PadicNumber::from_parts(long p, long v, const mpz_class& unit, long digits) {
  check_prime(p);
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  mpz_class u = mod_pos(unit, pow_p(p, digits));
  if (u == 0 || mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("from_parts: unit residue is divisible by p");
  return PadicNumber(p, v, std::move(u), digits);
}

PadicNumber PadicNumber::from_rational(const mpz_class& numer, const mpz_class& denom,
                                       long p, long digits) {
  check_prime(p);
  if (denom == 0) throw std::invalid_argument("from_rational: zero denominator");
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  if (numer == 0) return zero(p);
  mpz_class pz(p), nu, du;
  long vn = static_cast<long>(mpz_remove(nu.get_mpz_t(), numer.get_mpz_t(), pz.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(du.get_mpz_t(), denom.get_mpz_t(), pz.get_mpz_t()));
  mpz_class mod = pow_p(p, digits);
  mpz_class u = mod_pos(nu * invert_mod(du, mod), mod);
  return PadicNumber(p, vn - vd, std::move(u), digits);
}

PadicNumber PadicNumber::from_integer(long long value, long p, long digits) {
  return from_rational(mpz_class(static_cast<long>(value)), mpz_class(1), p, digits);
}

long PadicNumber::valuation() const {
  if (zero_) throw std::domain_error("valuation of zero (known only to depth)");
  return valuation_;
}

long PadicNumber::precision() const {
  if (zero_) throw std::domain_error("zero has no unit precision");
  return prec_;
}

long PadicNumber::known_zero_depth() const {
  if (!zero_) throw std::domain_error("known_zero_depth on a nonzero value");
  return depth_;
}

long PadicNumber::abs_precision() const { return zero_ ? depth_ : valuation_ + prec_; }

const mpz_class& PadicNumber::unit() const {
  if (zero_) throw std::domain_error("zero has no unit residue");
  return unit_;
}

mpz_class PadicNumber::residue(long count) const {
  if (count < 0) throw std::invalid_argument("residue: negative digit count");
  if (count == 0) return mpz_class(0);
  if (zero_) {
    if (depth_ < count)
      throw PrecisionError("insufficient precision: zero known only to depth " +
                               std::to_string(depth_) + ", " + std::to_string(count) +
                               " digits requested",
                           count - depth_);
    return mpz_class(0);
  }
  if (valuation_ < 0) throw std::domain_error("residue: not a p-adic integer (negative valuation)");
  if (abs_precision() < count)
    throw PrecisionError("insufficient precision: only " + std::to_string(abs_precision()) +
                             " digits known, " + std::to_string(count) + " requested",
                         count - abs_precision());
  if (valuation_ >= count) return mpz_class(0);
  return mod_pos(unit_ * pow_p(prime_, valuation_), pow_p(prime_, count));
}

std::vector<long> PadicNumber::digits(long count) const {
  mpz_class r = residue(count);
  std::vector<long> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) {
    out.push_back(mpz_fdiv_ui(r.get_mpz_t(), static_cast<unsigned long>(prime_)));
    mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(prime_));
  }
  return out;
}

PadicNumber PadicNumber::negated() const {
  if (zero_) return *this;
  return PadicNumber(prime_, valuation_, pow_p(prime_, prec_) - unit_, prec_);
}

PadicNumber PadicNumber::inverse() const {
  if (zero_) throw std::domain_error("division by zero");
  return PadicNumber(prime_, -valuation_, invert_mod(unit_, pow_p(prime_, prec_)), prec_);
}

PadicNumber PadicNumber::shifted(long dv) const {
  if (zero_) {
    if (depth_ == kExactDepth) return *this;
    return PadicNumber(prime_, depth_ + dv);
  }
  return PadicNumber(prime_, valuation_ + dv, unit_, prec_);
}

PadicNumber PadicNumber::times_rational(long long num, long long den) const {
  if (den == 0) throw std::invalid_argument("times_rational: zero denominator");
  if (num == 0) return zero(prime_);
  if (zero_) {
    long dv = 0;
    for (long long n = num < 0 ? -num : num; n % prime_ == 0; n /= prime_) ++dv;
    for (long long d = den < 0 ? -den : den; d % prime_ == 0; d /= prime_) --dv;
    return shifted(dv);
  }
  return *this * from_rational(mpz_class(static_cast<long>(num)),
                               mpz_class(static_cast<long>(den)), prime_, prec_);
}

PadicNumber PadicNumber::truncated_abs(long abs) const {
  if (zero_) return PadicNumber(prime_, std::min(depth_, abs));
  if (valuation_ >= abs) return PadicNumber(prime_, abs);
  long n = std::min(prec_, abs - valuation_);
  if (n == prec_) return *this;
  return PadicNumber(prime_, valuation_, mod_pos(unit_, pow_p(prime_, n)), n);
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  check_same_prime(x, y);
  const long p = x.prime_;
  const long a = std::min(x.abs_precision(), y.abs_precision());
  const bool xz = x.zero_ || x.valuation_ >= a;
  const bool yz = y.zero_ || y.valuation_ >= a;
  if (xz && yz) {
    if (x.zero_ && y.zero_ && x.depth_ == kExactDepth && y.depth_ == kExactDepth)
      return PadicNumber::zero(p);
    return PadicNumber::zero(p, a);
  }
  if (xz) return y.truncated_abs(a);
  if (yz) return x.truncated_abs(a);

  const long m = std::min(x.valuation_, y.valuation_);
  const long w = a - m;  // shared window width; >= 1 because x.valuation_ < a
  mpz_class mod = pow_p(p, w);
  mpz_class r = mod_pos(x.unit_ * pow_p(p, x.valuation_ - m) +
                            y.unit_ * pow_p(p, y.valuation_ - m),
                        mod);
  if (r == 0) return PadicNumber::zero(p, a);
  mpz_class u;
  mpz_class pz(p);
  long c = static_cast<long>(mpz_remove(u.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t()));
  long v = m + c;
  long n = a - v;
  if (n < 1)
    throw PrecisionError("addition cancelled all guaranteed digits (needed " +
                             std::to_string(1 - n) + " more working digit(s))",
                         1 - n);
  return PadicNumber(p, v, std::move(u), n);
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + y.negated(); }

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  check_same_prime(x, y);
  const long p = x.prime_;
  if (x.zero_ || y.zero_) {
    if ((x.zero_ && x.depth_ == kExactDepth) || (y.zero_ && y.depth_ == kExactDepth))
      return PadicNumber::zero(p);
    long depth;
    if (x.zero_ && y.zero_)
      depth = x.depth_ + y.depth_;
    else if (x.zero_)
      depth = x.depth_ + y.valuation_;
    else
      depth = y.depth_ + x.valuation_;
    return PadicNumber::zero(p, depth);
  }
  long n = std::min(x.prec_, y.prec_);
  mpz_class mod = pow_p(p, n);
  mpz_class u = mod_pos(mod_pos(x.unit_, mod) * mod_pos(y.unit_, mod), mod);
  return PadicNumber(p, x.valuation_ + y.valuation_, std::move(u), n);
}

PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) { return x * y.inverse(); }

bool operator==(const PadicNumber& x, const PadicNumber& y) {
  check_same_prime(x, y);
  const long a = std::min(x.abs_precision(), y.abs_precision());
  const bool xz = x.zero_ || x.valuation_ >= a;
  const bool yz = y.zero_ || y.valuation_ >= a;
  if (xz || yz) return xz && yz;
  if (x.valuation_ != y.valuation_) return false;
  mpz_class mod = pow_p(x.prime_, a - x.valuation_);
  return mod_pos(x.unit_, mod) == mod_pos(y.unit_, mod);
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "0";
    if (depth_ != kExactDepth) os << " (mod " << prime_ << "^" << depth_ << ")";
    return os.str();
  }
  os << prime_ << "^" << valuation_ << " * " << unit_.get_str() << " (" << prec_ << " digits)";
  return os.str();
}

std::string format_digits(const std::vector<long>& digits) {
  std::string out;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace padic
