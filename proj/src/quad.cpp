#include "padic/quad.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

long half_floor(const PadicNumber& x, bool is_b) {
  // Known lower bound on 2*v of the component's contribution.
  long base = x.is_zero() ? x.known_zero_depth() : x.valuation();
  long h = 2 * std::min(base, kExactDepth / 4) + (is_b ? 1 : 0);
  return std::min(h, kExactDepth);
}

long half_abs(const PadicNumber& x, bool is_b) {
  long a = std::min(x.abs_precision(), kExactDepth / 4);
  return std::min(2 * a + (is_b ? 1 : 0), kExactDepth);
}

void check_odd_prime(long p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("the quadratic extension requires an odd prime");
}

}  // namespace

QuadElement::QuadElement(PadicNumber a, PadicNumber b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.prime() != b_.prime())
    throw std::invalid_argument("components have different primes");
  check_odd_prime(a_.prime());
}

QuadElement QuadElement::from_scalar(const PadicNumber& a) {
  return QuadElement(a, PadicNumber::zero(a.prime()));
}

QuadElement QuadElement::zero(long p) {
  return QuadElement(PadicNumber::zero(p), PadicNumber::zero(p));
}

QuadElement QuadElement::one(long p, long digits) {
  return QuadElement(PadicNumber::one(p, digits), PadicNumber::zero(p));
}

long QuadElement::half_valuation() const {
  return std::min(half_floor(a_, false), half_floor(b_, true));
}

long QuadElement::half_abs_precision() const {
  return std::min(half_abs(a_, false), half_abs(b_, true));
}

QuadElement QuadElement::negated() const { return QuadElement(a_.negated(), b_.negated()); }

QuadElement QuadElement::scaled(const PadicNumber& c) const {
  return QuadElement(a_ * c, b_ * c);
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
  return QuadElement(x.a_ + y.a_, x.b_ + y.b_);
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) { return x + y.negated(); }

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
  PadicNumber ac = x.a_ * y.a_;
  PadicNumber bd = x.b_ * y.b_;
  PadicNumber ad = x.a_ * y.b_;
  PadicNumber bc = x.b_ * y.a_;
  return QuadElement(ac + bd.shifted(1).negated(), ad + bc);
}

bool operator==(const QuadElement& x, const QuadElement& y) {
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadElement::to_string() const {
  std::ostringstream os;
  os << "(" << a_.to_string() << ") + (" << b_.to_string() << ")*pi";
  return os.str();
}

namespace {

// Square root of a quadratic residue u mod an odd prime p (Tonelli-Shanks;
// the p % 4 == 3 case is a one-liner).
mpz_class sqrt_mod_p(const mpz_class& u, long p) {
  mpz_class pz(p);
  mpz_class um = mod_pos(u, pz);
  if (um == 0) return um;
  mpz_class leg;
  mpz_class exp = (pz - 1) / 2;
  mpz_powm(leg.get_mpz_t(), um.get_mpz_t(), exp.get_mpz_t(), pz.get_mpz_t());
  if (leg != 1) throw std::domain_error("no square root: unit is not a quadratic residue mod p");
  if (p % 4 == 3) {
    mpz_class r;
    mpz_class e = (pz + 1) / 4;
    mpz_powm(r.get_mpz_t(), um.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
    return r;
  }
  // Tonelli-Shanks for p % 4 == 1.
  mpz_class q = pz - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (true) {
    mpz_class l;
    mpz_powm(l.get_mpz_t(), z.get_mpz_t(), exp.get_mpz_t(), pz.get_mpz_t());
    if (l == pz - 1) break;
    ++z;
  }
  mpz_class c, t, r;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
  mpz_powm(t.get_mpz_t(), um.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
  mpz_class e2 = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), um.get_mpz_t(), e2.get_mpz_t(), pz.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    mpz_class tt = t;
    unsigned long i = 0;
    while (tt != 1) {
      tt = mod_pos(tt * tt, pz);
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_pos(b * b, pz);
    r = mod_pos(r * b, pz);
    c = mod_pos(b * b, pz);
    t = mod_pos(t * c, pz);
    m = i;
  }
  return r;
}

}  // namespace

PadicNumber hensel_sqrt(const PadicNumber& x) {
  const long p = x.prime();
  check_odd_prime(p);
  if (x.is_zero()) {
    if (x.known_zero_depth() == kExactDepth) return x;
    throw std::domain_error("hensel_sqrt: zero known only to finite depth");
  }
  if (x.valuation() % 2 != 0)
    throw std::domain_error("hensel_sqrt: odd valuation has no square root");

  const long n = x.precision();
  const mpz_class& u = x.unit();

  mpz_class r0 = sqrt_mod_p(u, p);
  // Canonical branch.
  mpz_class other = p - r0;
  if (mod_pos(u, mpz_class(p)) == 1) {
    if (r0 != 1) std::swap(r0, other);
  } else if (r0 > other) {
    std::swap(r0, other);
  }

  // Newton lifting r <- (r + u/r)/2, doubling the pinned digits each round.
  mpz_class r = r0;
  long k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    mpz_class mod = pow_p(p, k);
    r = mod_pos((r + mod_pos(u, mod) * invert_mod(r, mod)) * invert_mod(mpz_class(2), mod), mod);
  }
  if (mod_pos(r * r, pow_p(p, n)) != mod_pos(u, pow_p(p, n)))
    throw std::logic_error("hensel_sqrt: lift failed to verify");
  return PadicNumber::from_parts(p, x.valuation() / 2, r, n);
}

QuadElement padic_log(const QuadElement& z) {
  const long p = z.prime();
  const long span = std::min(z.half_abs_precision(), kExactDepth / 4);
  QuadElement w = z - QuadElement::one(p, std::max(2L, span / 2 + 2));

  const long h = w.half_valuation();
  if (h < 1) throw std::domain_error("padic_log: requires v(z - 1) > 0");
  const long target = std::min(w.half_abs_precision(), kExactDepth / 4);

  // Terms w^k/k have half-valuation >= k*h - 2*v_p(k). Stop once every
  // further term lies beyond the target: j*h - 2*ilog_p(j) - 2 >= target
  // guarantees the whole tail does, since each factor-of-p stretch of k
  // gains at least (p-1)*j*h >= 4 while ilog_p grows by 1.
  long j = 2;
  while (true) {
    long il = 0;
    for (long t = j; t >= p; t /= p) ++il;
    if (j * h - 2 * il - 2 >= target) break;
    ++j;
  }
  const long last = j - 1;

  QuadElement acc = w;  // k = 1 term
  QuadElement pw = w;
  for (long k = 2; k <= last; ++k) {
    pw = pw * w;
    long long sign = (k % 2 == 1) ? 1 : -1;
    QuadElement term(pw.a().times_rational(sign, k), pw.b().times_rational(sign, k));
    acc = acc + term;
  }
  // The dropped tail lives beyond pi^target; trim the components to what the
  // truncation actually guarantees.
  return QuadElement(acc.a().truncated_abs((target + 1) / 2),
                     acc.b().truncated_abs(target / 2));
}

}  // namespace padic
