#include "padic/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "padic/verify.hpp"

namespace padic {

namespace {

struct CliConfig {
  std::string format = "text";
  long precision = 12;
  std::optional<long> terms;
  long guard = kDefaultGuard;
  bool show_digits = false;
  long f = 0, e = -1, a = 1, p = 3, n = 0, k = 0;
  long mod_exp = 0;
  long n_max = 50, k_max = 500, target = 0;
  std::string method = "fast";
  std::string level = "quick";
  bool relaxed = false;
};

void print_constant(const CliConfig& cfg, const std::string& name, const PadicNumber& value,
                    long used_terms, std::ostream& out) {
  mpz_class res = value.residue(cfg.precision);
  if (cfg.format == "records") {
    out << "CONST name=" << name << " precision=" << cfg.precision << " terms=" << used_terms
        << " residue=" << res.get_str() << "\n";
    return;
  }
  out << name << " = " << res.get_str() << " (mod 3^" << cfg.precision << ")\n";
  out << "digits: " << format_digits(value.digits(cfg.precision)) << "\n";
}

int report_results(const std::vector<CongruenceReport>& reports, const CliConfig& cfg,
                   std::ostream& out) {
  long failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    if (cfg.format == "records") {
      out << format_report(r) << "\n";
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << r.claim_id;
      for (const auto& [key, val] : r.params) out << " " << key << "=" << val;
      if (r.modulus_exp > 0)
        out << ": lhs=" << r.lhs_residue.get_str() << " rhs=" << r.rhs_residue.get_str()
            << " (mod " << r.prime << "^" << r.modulus_exp << ")";
      else
        out << ": " << r.lhs_residue.get_str() << "/" << r.rhs_residue.get_str() << " checks";
      if (r.observational) out << " [observational]";
      if (!r.notes.empty()) out << " -- " << r.notes;
      out << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"3-adic evaluation and congruence checks for central binomial sums"};
  app.require_subcommand(1);
  CliConfig cfg;

  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();

  auto* beta_cmd = app.add_subcommand("beta", "Evaluate the constant beta");
  beta_cmd->fallthrough();
  beta_cmd->add_option("--precision", cfg.precision, "Base-3 digits")->capture_default_str();
  long terms_opt = -1;
  beta_cmd->add_option("--terms", terms_opt, "Series terms (default: enough for the precision)");
  beta_cmd->add_option("--guard", cfg.guard, "Guard digits")->capture_default_str();

  auto* gamma_cmd = app.add_subcommand("gamma", "Evaluate the constant gamma");
  gamma_cmd->fallthrough();
  gamma_cmd->add_option("--precision", cfg.precision, "Base-3 digits")->capture_default_str();

  auto* betagamma_cmd = app.add_subcommand("betagamma", "Evaluate -beta*gamma");
  betagamma_cmd->fallthrough();
  betagamma_cmd->add_option("--precision", cfg.precision, "Base-3 digits")->capture_default_str();

  auto* sum_cmd = app.add_subcommand("sum", "Evaluate S(3^f) = sum of C(2k,k), k < 3^f");
  sum_cmd->fallthrough();
  sum_cmd->add_option("--f", cfg.f, "Exponent of q = 3^f")->required();
  sum_cmd->add_option("--mod-exp", cfg.mod_exp, "Modulus exponent M (residue mod 3^M)");
  sum_cmd->add_option("--method", cfg.method, "Evaluation method")
      ->check(CLI::IsMember({"exact", "iterative", "fast"}))
      ->capture_default_str();
  sum_cmd->add_option("--guard", cfg.guard, "Guard digits")->capture_default_str();
  sum_cmd->add_flag("--digits", cfg.show_digits, "Also print the base-3 digit string");

  auto* verify_cmd = app.add_subcommand("verify", "Check a congruence claim (or all)");
  verify_cmd->fallthrough();
  std::string claim;
  verify_cmd->add_option("claim", claim, "Claim id or 'all'")
      ->required()
      ->check(CLI::IsMember({"all", "sum-beta", "sum-mod3", "sum-217", "sum-betagamma",
                             "binom-prefix", "jacobsthal", "val-bound", "lehmer", "pow4",
                             "identity"}));
  verify_cmd->add_option("--f", cfg.f, "Exponent of q = 3^f");
  verify_cmd->add_option("--e", cfg.e, "Split exponent e");
  verify_cmd->add_option("--a", cfg.a, "Precision parameter a");
  verify_cmd->add_option("--p", cfg.p, "Prime");
  verify_cmd->add_option("--n", cfg.n, "n");
  verify_cmd->add_option("--k", cfg.k, "k");
  verify_cmd->add_option("--n-max", cfg.n_max, "Sweep bound on n");
  verify_cmd->add_option("--k-max", cfg.k_max, "Sweep bound on k");
  verify_cmd->add_option("--target", cfg.target, "Target valuation / modulus exponent");
  long lehmer_terms = 0;
  verify_cmd->add_option("--terms", lehmer_terms, "Series terms");
  verify_cmd->add_flag("--relaxed", cfg.relaxed, "Admit the weakened hypothesis on e");
  verify_cmd->add_option("--level", cfg.level, "Suite level for 'all'")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (beta_cmd->parsed()) {
      if (terms_opt >= 0) cfg.terms = terms_opt;
      long s = cfg.terms.value_or(beta_terms_for(cfg.precision));
      print_constant(cfg, "beta", beta(s, cfg.precision, cfg.guard), s, out);
      return 0;
    }
    if (gamma_cmd->parsed()) {
      print_constant(cfg, "gamma", gamma(cfg.precision), 0, out);
      return 0;
    }
    if (betagamma_cmd->parsed()) {
      PadicNumber value =
          (beta(beta_terms_for(cfg.precision), cfg.precision) * gamma(cfg.precision)).negated();
      print_constant(cfg, "-beta*gamma", value, 0, out);
      return 0;
    }
    if (sum_cmd->parsed()) {
      if (cfg.method == "exact") {
        mpz_class s = sum_central_exact(cfg.f);
        if (cfg.format == "records") {
          long m = cfg.mod_exp > 0 ? cfg.mod_exp : 1;
          out << "SUM f=" << cfg.f << " mod=3^" << m << " method=exact residue="
              << mod_pos(s, pow_p(3, m)).get_str() << " exact=" << s.get_str() << "\n";
        } else {
          out << "S(" << pow_p(3, cfg.f).get_str() << ") = " << s.get_str() << "\n";
        }
        return 0;
      }
      if (cfg.mod_exp < 1) {
        err << "error: --mod-exp is required for the iterative/fast methods\n";
        return 2;
      }
      SumResult r = cfg.method == "fast" ? sum_central_fast(cfg.f, cfg.mod_exp)
                                         : sum_central_iterative(cfg.f, cfg.mod_exp, cfg.guard);
      if (cfg.format == "records") {
        out << "SUM f=" << r.f << " mod=3^" << r.modulus_exp << " method=" << to_string(r.method)
            << " residue=" << r.residue.get_str() << "\n";
      } else {
        out << "S(3^" << r.f << ") = " << r.residue.get_str() << " (mod 3^" << r.modulus_exp
            << ")\n";
        if (cfg.show_digits) {
          std::vector<long> ds;
          mpz_class rr = r.residue;
          for (long i = 0; i < r.modulus_exp; ++i) {
            ds.push_back(mpz_fdiv_ui(rr.get_mpz_t(), 3));
            mpz_fdiv_q_ui(rr.get_mpz_t(), rr.get_mpz_t(), 3);
          }
          out << "digits: " << format_digits(ds) << "\n";
        }
      }
      return 0;
    }

    // verify
    std::vector<CongruenceReport> reports;
    if (claim == "all") {
      reports = run_suite(cfg.level == "full" ? SuiteLevel::full : SuiteLevel::quick);
    } else if (claim == "sum-beta") {
      reports.push_back(verify_sum_beta(
          cfg.f, cfg.e >= 0 ? std::optional<long>(cfg.e) : std::nullopt, cfg.relaxed));
    } else if (claim == "sum-mod3") {
      reports.push_back(verify_sum_mod3(cfg.f));
    } else if (claim == "sum-217") {
      reports.push_back(verify_sum_217(cfg.f));
    } else if (claim == "sum-betagamma") {
      reports.push_back(verify_sum_betagamma(cfg.a, cfg.f));
    } else if (claim == "binom-prefix") {
      reports.push_back(verify_binom_prefix(cfg.p, cfg.f, cfg.e >= 0 ? cfg.e : 1));
    } else if (claim == "jacobsthal") {
      if (cfg.n > 0 && cfg.k > 0)
        reports.push_back(verify_jacobsthal(cfg.p, cfg.n, cfg.k));
      else
        reports.push_back(verify_jacobsthal_sweep(cfg.p, cfg.n_max));
    } else if (claim == "val-bound") {
      reports.push_back(verify_val_bound(cfg.p, static_cast<unsigned long long>(cfg.k_max)));
    } else if (claim == "lehmer") {
      long target = cfg.target > 0 ? cfg.target : (cfg.p == 3 ? 12 : 8);
      reports.push_back(verify_lehmer(cfg.p, target, lehmer_terms));
    } else if (claim == "pow4") {
      reports.push_back(verify_pow4(cfg.n_max));
    } else if (claim == "identity") {
      reports.push_back(verify_identity(cfg.n_max));
    }
    return report_results(reports, cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace padic
