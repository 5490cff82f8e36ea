#include "dloci/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>

#include "dloci/characteristic.hpp"
#include "dloci/error.hpp"

namespace dloci {

DualReport compute_dual(const Manifest& manifest) {
  const SpinUStructure& s = manifest.spinu.value();
  DualReport r;
  r.n_a = s.n_a();
  r.kappa = s.kappa();
  r.dims = degeneracy_dimensions(s);  // PositiveIndex for n_a > 0
  r.asd_dim = asd_dimension(*s.manifold(), s.kappa());

  const DualClassExpansion concrete = poincare_dual_class(s);
  r.dual = manifest.symbolic ? poincare_dual_class(s.n_a(), ParamScalar::ka()) : concrete;
  r.expanded = concrete.expand(*s.manifold(), s.lambda());

  const unsigned degree = concrete.degree();
  if (degree <= manifest.max_order) {
    const IndexCharacter ch = index_character_families(s, degree);
    std::vector<BaseClass> q{ch.ch[0].zero_like()};
    for (unsigned k = 1; k <= degree; ++k) q.push_back(ch.ch[k] * factorial(k));
    const auto c = chern_from_power_sums(q, ch.ch[0].one_like());
    r.families_agree = c[degree] * Rational(concrete.sign) == r.expanded;
  }
  return r;
}

std::pair<std::int64_t, std::int64_t> parse_int_range(const std::string& text) {
  auto parse = [&text](std::string_view part) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("bad integer range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse(text);
    return {v, v};
  }
  const auto lo = parse(std::string_view(text).substr(0, dots));
  const auto hi = parse(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

namespace {

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::PositiveIndex ? ExitDomainError : ExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chern-class computations for Dirac degeneracy loci", "dloci"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dloci 0.1.0");

  std::optional<std::string> format_name;
  auto add_format = [&format_name](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto format_or = [&format_name](OutputFormat fallback) {
    return format_name ? parse_output_format(*format_name) : fallback;
  };

  std::string manifest_path;
  auto* dual = app.add_subcommand("dual", "Poincare dual of the degeneracy locus for a manifest");
  dual->add_option("--manifest", manifest_path, "YAML manifest")->required();
  add_format(dual);

  unsigned order = 12;
  bool symbolic = false;
  std::string na_text, kappa_text;
  auto* verify = app.add_subcommand("verify", "Certify recursion = generating function = Newton");
  verify->add_option("--order", order, "Maximal total degree i+2j+2k")->capture_default_str();
  verify->add_flag("--symbolic", symbolic, "Symbolic n_a and kappa (default without ranges)");
  verify->add_option("--na", na_text, "n_a range a..b");
  verify->add_option("--kappa", kappa_text, "kappa range a..b");
  add_format(verify);

  std::string series_name;
  unsigned series_order = 12;
  auto* series = app.add_subcommand("series", "Coefficients of J1, J2 or J3");
  series->add_option("which", series_name, "J1, J2 or J3")
      ->required()
      ->check(CLI::IsMember({"J1", "J2", "J3"}));
  series->add_option("--order", series_order, "Highest power of z")->capture_default_str();
  add_format(series);

  unsigned coeff_order = 12;
  bool coeff_symbolic = false;
  std::optional<std::int64_t> na_value, kappa_value;
  std::string method = "recursion";
  auto* coeffs = app.add_subcommand("coeffs", "Table of f_{i,2j,2k}");
  coeffs->add_option("--na", na_value, "Dirac index n_a");
  coeffs->add_option("--kappa", kappa_value, "kappa");
  coeffs->add_option("--order", coeff_order, "Maximal total degree")->capture_default_str();
  coeffs->add_flag("--symbolic", coeff_symbolic, "Keep n_a and kappa symbolic");
  coeffs->add_option("--method", method, "recursion, genfun or newton")
      ->check(CLI::IsMember({"recursion", "genfun", "newton"}))
      ->capture_default_str();
  add_format(coeffs);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitOk : ExitInputError;
  }

  try {
    if (dual->parsed()) {
      const Manifest m = load_manifest(manifest_path);
      out << render_dual(compute_dual(m), format_or(m.format));
      return ExitOk;
    }

    if (verify->parsed()) {
      if (order < 1) throw std::invalid_argument("--order must be at least 1");
      VerifyOptions o;
      o.max_r = order;
      const bool ranged = !na_text.empty() || !kappa_text.empty();
      if (ranged && symbolic) throw std::invalid_argument("--symbolic cannot be combined with --na/--kappa");
      o.symbolic = !ranged;
      if (ranged) {
        if (na_text.empty() || kappa_text.empty())
          throw std::invalid_argument("numeric mode needs both --na and --kappa");
        std::tie(o.na_min, o.na_max) = parse_int_range(na_text);
        std::tie(o.kappa_min, o.kappa_max) = parse_int_range(kappa_text);
      }
      const VerifyReport r = verify_threeway(o);
      out << render_verify(r, o, format_or(OutputFormat::Text));
      return r.equal ? ExitOk : ExitDiscrepancy;
    }

    if (series->parsed()) {
      if (series_order < 1) throw std::invalid_argument("--order must be at least 1");
      const JSeries which = series_name == "J1" ? JSeries::J1 : series_name == "J2" ? JSeries::J2 : JSeries::J3;
      out << render_series(which, j_series(which, series_order), format_or(OutputFormat::Text));
      return ExitOk;
    }

    if (coeffs->parsed()) {
      if (coeff_order < 1) throw std::invalid_argument("--order must be at least 1");
      ParamScalar na = ParamScalar::na(), ka = ParamScalar::ka();
      std::string point = "symbolic";
      if (coeff_symbolic) {
        if (na_value || kappa_value) throw std::invalid_argument("--symbolic cannot be combined with --na/--kappa");
      } else {
        if (!na_value || !kappa_value) throw std::invalid_argument("coeffs needs --na and --kappa, or --symbolic");
        na = ParamScalar(static_cast<long>(*na_value));
        ka = ParamScalar(static_cast<long>(*kappa_value));
        point = "n_a=" + std::to_string(*na_value) + ", kappa=" + std::to_string(*kappa_value);
      }
      const CoefficientMethod m = method == "genfun"   ? CoefficientMethod::GeneratingFunction
                                  : method == "newton" ? CoefficientMethod::Newton
                                                       : CoefficientMethod::Recursion;
      const ChernExpansion f = chern_coefficients(m, na, ka, coeff_order);
      out << render_coefficients(f, format_or(OutputFormat::Text),
                                 "f coefficients by " + method + ", " + point + ", order " +
                                     std::to_string(coeff_order));
      return ExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitInputError;
  }
  return ExitInputError;
}

}  // namespace dloci
