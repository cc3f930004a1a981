#include "padic/verify.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

mpz_class binom_mpz(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string pair_list(const std::vector<std::pair<std::string, long long>>& params) {
  std::string out;
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += params[i].first + "=" + std::to_string(params[i].second);
  }
  return out;
}

CongruenceReport counted(std::string id,
                         std::vector<std::pair<std::string, long long>> params, long prime,
                         long modulus_exp, long long passed, long long total,
                         std::string notes) {
  CongruenceReport r;
  r.claim_id = std::move(id);
  r.params = std::move(params);
  r.prime = prime;
  r.modulus_exp = modulus_exp;
  r.lhs_residue = static_cast<long>(passed);
  r.rhs_residue = static_cast<long>(total);
  r.pass = passed == total;
  r.notes = std::move(notes);
  return r;
}

}  // namespace

std::string format_report(const CongruenceReport& r) {
  std::ostringstream os;
  os << "CLAIM id=" << r.claim_id << " params=" << pair_list(r.params) << " mod=" << r.prime
     << "^" << r.modulus_exp << " lhs=" << r.lhs_residue.get_str()
     << " rhs=" << r.rhs_residue.get_str() << " pass=" << (r.pass ? "true" : "false");
  if (r.observational) os << " obs=true";
  return os.str();
}

CongruenceReport verify_sum_beta(long f, std::optional<long> e_opt, bool relaxed) {
  CongruenceReport r;
  r.claim_id = "sum-beta";
  long e = e_opt.value_or(0);
  if (!e_opt) {
    auto best = smallest_valid_e(f, relaxed);
    if (!best) {
      r.params = {{"f", f}};
      r.pass = false;
      r.lhs_residue = 0;
      r.rhs_residue = 1;  // the precondition check itself: 0 of 1
      r.notes = "hypothesis unsatisfiable: no e < f with 4*3^(e-1)+e >= 2f+2" +
                std::string(relaxed ? " (even relaxed)" : "");
      return r;
    }
    e = *best;
  }
  r.params = {{"f", f}, {"e", e}};

  TruncationPlan plan;
  try {
    plan = make_truncation_plan(f, e, relaxed);
  } catch (const std::invalid_argument& ex) {
    r.pass = false;
    r.lhs_residue = 0;
    r.rhs_residue = 1;
    r.notes = std::string("hypothesis unsatisfiable: ") + ex.what();
    return r;
  }
  const long t = plan.modulus_exp;
  r.modulus_exp = t;

  long m = 0;
  r.lhs_residue = scaled_sum_residue(f, t, SumMethod::fast, &m);
  std::string corroboration = "fast only";
  if (f <= 7) {
    mpz_class iter = scaled_sum_residue(f, t, SumMethod::iterative);
    if (iter != r.lhs_residue) {
      r.pass = false;
      r.rhs_residue = iter;
      r.notes = "INTERNAL DISAGREEMENT: fast=" + r.lhs_residue.get_str() +
                " iterative=" + iter.get_str();
      return r;
    }
    corroboration = "corroborated by full iteration";
  }

  PadicNumber b = beta(plan.s, t);
  unsigned long long q = 1;
  for (long i = 0; i < f; ++i) q *= 3;
  PadicNumber central = binom_padic(2 * q, q, 3, t);
  r.rhs_residue = (b * central).negated().residue(t);
  r.pass = r.lhs_residue == r.rhs_residue;
  r.notes = "plan s=" + std::to_string(plan.s) + ", fast cutoff m=" + std::to_string(m) + ", " +
            corroboration + (relaxed ? ", relaxed hypothesis" : "");
  return r;
}

CongruenceReport verify_sum_mod3(long f) {
  CongruenceReport r;
  r.claim_id = "sum-mod3";
  r.params = {{"f", f}};
  r.modulus_exp = 1;
  r.lhs_residue = scaled_sum_residue(f, 1, SumMethod::fast);
  r.rhs_residue = 1;
  std::string note = "fast method";
  if (f <= 6) {
    mpz_class ex = scaled_sum_residue(f, 1, SumMethod::exact);
    if (ex != r.lhs_residue) {
      r.pass = false;
      r.rhs_residue = ex;
      r.notes = "INTERNAL DISAGREEMENT: fast vs exact";
      return r;
    }
    note = "corroborated by exact sum";
  }
  r.pass = r.lhs_residue == r.rhs_residue;
  r.notes = note;
  return r;
}

CongruenceReport verify_sum_217(long f) {
  if (f < 2) throw std::invalid_argument("verify_sum_217: requires q > 3, i.e. f >= 2");
  CongruenceReport r;
  r.claim_id = "sum-217";
  r.params = {{"f", f}};
  r.modulus_exp = 5;
  r.lhs_residue = scaled_sum_residue(f, 5, SumMethod::fast);
  r.rhs_residue = 217;
  std::string note = "fast method";
  if (f <= 7) {
    mpz_class ex = scaled_sum_residue(f, 5, SumMethod::exact);
    if (ex != r.lhs_residue) {
      r.pass = false;
      r.rhs_residue = ex;
      r.notes = "INTERNAL DISAGREEMENT: fast vs exact";
      return r;
    }
    note = "corroborated by exact sum";
  }
  r.pass = r.lhs_residue == r.rhs_residue;
  r.notes = note;
  return r;
}

CongruenceReport verify_sum_betagamma(long a, long f) {
  if (a < 1 || f < 1) throw std::invalid_argument("verify_sum_betagamma: a, f >= 1 required");
  CongruenceReport r;
  r.claim_id = "sum-betagamma";
  r.params = {{"a", a}, {"f", f}};

  // Proven range: e = floor((f+1)/2) - a admissible, i.e.
  // 4*3^(e-1) >= 3e + 4a (odd f) resp. 3e + 4a + 2 (even f).
  const long e = (f + 1) / 2 - a;
  bool proven = false;
  if (e >= 1 && e < f) {
    mpz_class lhs = 4 * pow_p(3, e - 1);
    proven = lhs >= 3 * e + 4 * a + (f % 2 == 0 ? 2 : 0);
  }
  const long t = (proven && f % 2 == 0) ? 2 * a + 2 : 2 * a + 1;
  r.modulus_exp = t;
  r.observational = !proven;

  r.lhs_residue = scaled_sum_residue(f, t, SumMethod::fast);
  PadicNumber b = beta(beta_terms_for(t), t);
  PadicNumber g = gamma(t);
  r.rhs_residue = (b * g).negated().residue(t);
  r.pass = r.lhs_residue == r.rhs_residue;
  r.notes = proven ? (f % 2 == 0 ? "proven range, even-f bonus digit asserted" : "proven range")
                   : "outside the proven range: heuristic (expected for f >= a), observational";
  return r;
}

CongruenceReport verify_binom_prefix(long p, long f, long e) {
  if (p < 2 || f < 1 || e < 1 || e > f)
    throw std::invalid_argument("verify_binom_prefix: need p prime, 1 <= e <= f");
  const long t = (p == 2) ? 2 * f - 2 * e + 3 : 2 * f - 2 * e + 2;
  mpz_class q = pow_p(p, f);
  mpz_class mod = pow_p(p, t);
  mpz_class range = (p > 2 && e < f) ? pow_p(p, e) + pow_p(p, e - 1) : pow_p(p, e);

  long long total = 0, passed = 0;
  std::string first_fail;
  mpz_class cqk(1);  // C(q, k), updated incrementally
  mpz_class k_end = range;
  for (mpz_class k = 1; k < k_end; ++k) {
    // C(q,k) = C(q,k-1) * (q-k+1)/k
    cqk = cqk * (q - k + 1);
    mpz_divexact(cqk.get_mpz_t(), cqk.get_mpz_t(), k.get_mpz_t());
    mpz_class lhs = mod_pos(cqk, mod);
    long sgn = mpz_odd_p(k.get_mpz_t()) ? 1 : -1;
    mpz_class rhs =
        PadicNumber::from_rational(sgn * q, k, p, t).residue(t);
    ++total;
    if (lhs == rhs)
      ++passed;
    else if (first_fail.empty())
      first_fail = "first failure at k=" + k.get_str();
  }
  // For p > 2, e < f the very next k must violate the congruence.
  std::string boundary_note;
  if (p > 2 && e < f) {
    mpz_class k = k_end;
    cqk = cqk * (q - k + 1);
    mpz_divexact(cqk.get_mpz_t(), cqk.get_mpz_t(), k.get_mpz_t());
    mpz_class lhs = mod_pos(cqk, mod);
    long sgn = mpz_odd_p(k.get_mpz_t()) ? 1 : -1;
    mpz_class rhs = PadicNumber::from_rational(sgn * q, k, p, t).residue(t);
    ++total;
    if (lhs != rhs) {
      ++passed;
      boundary_note = "; fails at k=" + k.get_str() + " as required";
    } else {
      boundary_note = "; UNEXPECTED pass at the excluded k=" + k.get_str();
    }
  }
  std::string note = "range 0<k<" + range.get_str() + boundary_note;
  if (!first_fail.empty()) note += "; " + first_fail;
  return counted("binom-prefix", {{"p", p}, {"f", f}, {"e", e}}, p, t, passed, total, note);
}

CongruenceReport verify_jacobsthal(long p, long n, long k) {
  if (p < 3 || p % 2 == 0 || k < 1 || k >= n)
    throw std::invalid_argument("verify_jacobsthal: need odd p and 0 < k < n");
  CongruenceReport r;
  r.claim_id = "jacobsthal";
  r.params = {{"p", p}, {"n", n}, {"k", k}};
  r.prime = p;

  mpz_class body = mpz_class(n) * k * (n - k) * pow_p(p, p == 3 ? 2 : 3);
  long rexp = valuation_of(body, p);
  r.modulus_exp = rexp;
  mpz_class mod = pow_p(p, rexp);

  mpz_class big = binom_mpz(static_cast<unsigned long>(p * n), static_cast<unsigned long>(p * k));
  mpz_class small = binom_mpz(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  long vb = valuation_of(big, p);
  long vs = valuation_of(small, p);
  if (vb != vs) {
    r.pass = false;
    r.notes = "valuations differ: the ratio is not a p-adic unit";
    return r;
  }
  mpz_class pv = pow_p(p, vb);
  mpz_divexact(big.get_mpz_t(), big.get_mpz_t(), pv.get_mpz_t());
  mpz_divexact(small.get_mpz_t(), small.get_mpz_t(), pv.get_mpz_t());
  r.lhs_residue = mod_pos(big * invert_mod(mod_pos(small, mod), mod), mod);
  r.rhs_residue = mod_pos(mpz_class(1), mod);
  r.pass = r.lhs_residue == r.rhs_residue;
  return r;
}

CongruenceReport verify_jacobsthal_sweep(long p, long n_max) {
  long long total = 0, passed = 0;
  std::string first_fail;
  for (long n = 2; n <= n_max; ++n)
    for (long k = 1; k < n; ++k) {
      CongruenceReport one = verify_jacobsthal(p, n, k);
      ++total;
      if (one.pass)
        ++passed;
      else if (first_fail.empty())
        first_fail = "first failure at n=" + std::to_string(n) + ", k=" + std::to_string(k);
  }
  return counted("jacobsthal-sweep", {{"p", p}, {"n_max", n_max}}, p, 0, passed, total,
                 first_fail.empty() ? "all 0<k<n<=n_max" : first_fail);
}

CongruenceReport verify_val_bound(long p, unsigned long long k_max) {
  if (p < 2 || k_max < 1) throw std::invalid_argument("verify_val_bound: bad arguments");
  long long total = 0, passed = 0;
  std::string first_fail;
  mpz_class central(1);  // C(2k,k), updated incrementally
  for (unsigned long long k = 1; k <= k_max; ++k) {
    central *= static_cast<unsigned long>(2 * (2 * (k - 1) + 1));
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(k));
    // The bounded quantity: k*C(2k,k) for odd p, C(2k,k) alone for p = 2
    // (the k factor breaks the p = 2 bound already at k = 2).
    long v = p == 2 ? valuation_of(central, 2)
                    : valuation_of(mpz_class(central * static_cast<unsigned long>(k)), p);
    ValuationBound bound = central_val_bound(k, p);
    long kv = kummer_val(2 * k, k, p);
    if (p != 2 && k % static_cast<unsigned long long>(p) == 0)
      kv += valuation_of(mpz_class(static_cast<unsigned long>(k)), p);
    // Bound on the power itself: p^v <= cap, with p^v hitting the cap exactly
    // when the cap is a power of p.
    bool ok = v <= bound.exponent && (!bound.tight || v == bound.exponent) && kv == v;
    ++total;
    if (ok)
      ++passed;
    else if (first_fail.empty())
      first_fail = "first failure at k=" + std::to_string(k) + " (v=" + std::to_string(v) +
                   ", bound=" + std::to_string(bound.exponent) +
                   (bound.tight ? " tight" : " strict") + ")";
  }
  return counted("val-bound", {{"p", p}, {"k_max", static_cast<long long>(k_max)}}, p, 0, passed,
                 total, first_fail.empty() ? "bound and tightness, exhaustive" : first_fail);
}

CongruenceReport verify_lehmer(long p, long target_exp, long terms) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("verify_lehmer: odd prime required");
  CongruenceReport r;
  r.claim_id = "lehmer";
  r.prime = p;
  r.modulus_exp = target_exp;

  if (p == 3) {
    if (terms < 1) terms = 40;
    r.params = {{"p", p}, {"target", target_exp}, {"terms", terms}};
    PadicNumber partial = lehmer_partial(terms, 3, target_exp);
    bool reached = partial.is_zero() ? partial.known_zero_depth() >= target_exp
                                     : partial.valuation() >= target_exp;
    QuadElement closed = lehmer_closed(3, target_exp);
    bool closed_zero = closed.is_zero();
    long long total = 2, passed = (reached ? 1 : 0) + (closed_zero ? 1 : 0);
    std::string vs = partial.is_zero() ? (">=" + std::to_string(partial.known_zero_depth()))
                                       : std::to_string(partial.valuation());
    CongruenceReport out = counted(
        "lehmer", r.params, p, target_exp, passed, total,
        "v3(partial sum of " + std::to_string(terms) + " terms) = " + vs +
            (closed_zero ? "; closed form is the zero sentinel" : "; closed form NOT zero"));
    return out;
  }

  // p > 3: two independent evaluations of the same element must agree.
  long s = terms >= 1 ? terms : lehmer_terms_for(p, target_exp + 1);
  r.params = {{"p", p}, {"target", target_exp}, {"terms", s}};
  PadicNumber partial = lehmer_partial(s, p, target_exp);
  QuadElement closed = lehmer_closed(p, target_exp + 2);
  bool rational_line = closed.b().is_zero() || closed.b().valuation() >= target_exp;
  r.lhs_residue = partial.residue(target_exp);
  r.rhs_residue = closed.a().residue(target_exp);
  r.pass = (r.lhs_residue == r.rhs_residue) && rational_line;
  r.notes = rational_line ? "series vs closed form; pi-component vanishes"
                          : "pi-COMPONENT DOES NOT VANISH";
  return r;
}

CongruenceReport verify_pow4(long n_max) {
  long long total = 0, passed = 0;
  std::string first_fail;
  for (long n = 1; n <= n_max; ++n) {
    ++total;
    if (pow4_identity_holds(n))
      ++passed;
    else if (first_fail.empty())
      first_fail = "first failure at n=" + std::to_string(n);
  }
  return counted("pow4", {{"n_max", n_max}}, 2, 0, passed, total,
                 first_fail.empty() ? "exact rational identity" : first_fail);
}

CongruenceReport verify_identity(long n_max) {
  long long total = 0, passed = 0;
  std::string first_fail;
  for (long n = 1; n <= n_max; ++n) {
    ++total;
    if (sum_identity_exact(n))
      ++passed;
    else if (first_fail.empty())
      first_fail = "first failure at n=" + std::to_string(n);
  }
  return counted("identity", {{"n_max", n_max}}, 3, 0, passed, total,
                 first_fail.empty() ? "exact rational identity" : first_fail);
}

std::vector<CongruenceReport> run_suite(SuiteLevel level) {
  std::vector<CongruenceReport> out;
  const bool full = level == SuiteLevel::full;

  // Scaled-sum claims.
  for (long f = 1; f <= (full ? 8 : 4); ++f) out.push_back(verify_sum_mod3(f));
  for (long f = 2; f <= (full ? 8 : 4); ++f) out.push_back(verify_sum_217(f));
  for (long f = 3; f <= (full ? 10 : 4); ++f) {
    for (long e = 1; e < f; ++e) {
      if (f - 2 * e + 2 < 1) break;
      try {
        make_truncation_plan(f, e);
      } catch (const std::invalid_argument&) {
        continue;
      }
      out.push_back(verify_sum_beta(f, e));
    }
  }
  out.push_back(verify_sum_beta(2, std::nullopt, true));  // needs the relaxed hypothesis
  if (full) {
    out.push_back(verify_sum_betagamma(1, 7));
    out.push_back(verify_sum_betagamma(1, 8));
    out.push_back(verify_sum_betagamma(1, 9));
    out.push_back(verify_sum_betagamma(2, 11));
    out.push_back(verify_sum_betagamma(2, 12));
    for (long f = 20; f <= 24; ++f) out.push_back(verify_sum_betagamma(12, f));  // observational
  } else {
    out.push_back(verify_sum_betagamma(1, 4));  // observational at this depth
    out.push_back(verify_sum_betagamma(2, 4));
  }

  // Binomial congruence sweeps.
  for (long p : {2L, 3L, 5L}) {
    long fmax = full ? (p == 2 ? 6 : 5) : 3;
    for (long f = 1; f <= fmax; ++f)
      for (long e = 1; e <= f; ++e) out.push_back(verify_binom_prefix(p, f, e));
  }
  for (long p : {3L, 5L, 7L}) out.push_back(verify_jacobsthal_sweep(p, full ? 40 : 12));
  for (long p : {2L, 3L, 5L}) out.push_back(verify_val_bound(p, full ? 5000 : 500));

  // Series claims.
  out.push_back(verify_lehmer(3, 12, 40));
  out.push_back(verify_lehmer(5, 8));
  out.push_back(verify_lehmer(7, 8));
  out.push_back(verify_pow4(50));
  out.push_back(verify_identity(full ? 60 : 30));

  std::stable_sort(out.begin(), out.end(),
                   [](const CongruenceReport& x, const CongruenceReport& y) {
                     return x.claim_id < y.claim_id;
                   });
  return out;
}

}  // namespace padic
