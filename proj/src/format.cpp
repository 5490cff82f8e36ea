#include "dloci/format.hpp"

#include <json.hpp>
#include <sstream>

namespace dloci {

namespace {

using nlohmann::ordered_json;

// Integers outside int64 go out as decimal strings rather than floats.
ordered_json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

ordered_json fraction(const Rational& q) {
  return {{"num", integer(q.numerator())}, {"den", integer(q.denominator())}};
}

ordered_json scalar_json(const ParamScalar& c) {
  if (c.is_constant()) return fraction(c.constant_term());
  ordered_json terms = ordered_json::array();
  for (const auto& t : c.terms()) {
    ordered_json term = fraction(t.coeff);
    term["na"] = t.na;
    term["ka"] = t.ka;
    terms.push_back(term);
  }
  return {{"terms", terms}};
}

ordered_json triple_json(const Triple& t, const ParamScalar& c) {
  return {{"i", t.i}, {"2j", 2 * t.j}, {"2k", 2 * t.k}, {"coefficient", scalar_json(c)}};
}

std::string csv_row(const Triple& t, const ParamScalar& c) {
  return std::to_string(t.i) + "," + std::to_string(2 * t.j) + "," + std::to_string(2 * t.k) + "," + c.str() + "\n";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_coefficients(const ChernExpansion& f, OutputFormat fmt, const std::string& title) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Text:
      out << "# " << title << "\n";
      for (const auto& [t, c] : f.terms()) out << t.str() << "  " << c.str() << "\n";
      break;
    case OutputFormat::Csv:
      out << "i,2j,2k,coefficient\n";
      for (const auto& [t, c] : f.terms()) out << csv_row(t, c);
      break;
    case OutputFormat::Json: {
      ordered_json rows = ordered_json::array();
      for (const auto& [t, c] : f.terms()) rows.push_back(triple_json(t, c));
      out << dump({{"title", title}, {"role", to_string(f.role())}, {"max_order", f.max_r()}, {"rows", rows}});
      break;
    }
  }
  return out.str();
}

std::string render_series(JSeries which, const GradedSeries& s, OutputFormat fmt) {
  const std::string name = "J" + std::to_string(static_cast<int>(which));
  const std::size_t z = s.vars()->require("z");
  std::ostringstream out;
  ordered_json rows = ordered_json::array();
  if (fmt == OutputFormat::Text) out << "# " << name << " to z^" << s.order() << "\n";
  if (fmt == OutputFormat::Csv) out << "power,coefficient\n";
  for (unsigned p = 0; p <= s.order(); p += 2) {
    std::vector<std::uint16_t> exps(s.vars()->size(), 0);
    exps[z] = static_cast<std::uint16_t>(p);
    const ParamScalar c = s.coefficient(exps);
    switch (fmt) {
      case OutputFormat::Text: out << "z^" << p << "  " << c.str() << "\n"; break;
      case OutputFormat::Csv: out << p << "," << c.str() << "\n"; break;
      case OutputFormat::Json: rows.push_back({{"power", p}, {"coefficient", scalar_json(c)}}); break;
    }
  }
  if (fmt == OutputFormat::Json) out << dump({{"series", name}, {"order", s.order()}, {"coefficients", rows}});
  return out.str();
}

std::string render_dual(const DualReport& r, OutputFormat fmt) {
  std::ostringstream out;
  const std::string check = !r.families_agree ? "skipped" : (*r.families_agree ? "agree" : "DISAGREE");
  switch (fmt) {
    case OutputFormat::Text:
      out << "# Poincare dual of the degeneracy locus\n";
      out << "n_a = " << r.n_a << "\n";
      out << "kappa = " << r.kappa << "\n";
      out << "d(kappa) = " << r.asd_dim << "\n";
      out << "codim = " << r.dims.codim << "\n";
      out << "dim = " << r.dims.dim << (r.dims.vacuous ? " (vacuous)" : "") << "\n";
      out << "sign = " << (r.dual.sign > 0 ? "+1" : "-1") << "\n";
      for (const auto& [t, c] : r.dual.terms) out << t.str() << "  " << c.str() << "\n";
      out << "expanded = " << r.expanded.str() << "\n";
      out << "families check = " << check << "\n";
      break;
    case OutputFormat::Csv:
      out << "i,2j,2k,coefficient\n";
      for (const auto& [t, c] : r.dual.terms) out << csv_row(t, c);
      break;
    case OutputFormat::Json: {
      ordered_json rows = ordered_json::array();
      for (const auto& [t, c] : r.dual.terms) rows.push_back(triple_json(t, c));
      ordered_json expanded = ordered_json::array();
      const auto& vars = *r.expanded.vars();
      for (const auto& [m, c] : r.expanded.terms()) {
        ordered_json mono = ordered_json::object();
        for (std::size_t i = 0; i < m.exps.size(); ++i)
          if (m.exps[i]) mono[vars[i].name] = m.exps[i];
        expanded.push_back({{"monomial", mono}, {"coefficient", scalar_json(c)}});
      }
      ordered_json families = r.families_agree ? ordered_json(*r.families_agree) : ordered_json(nullptr);
      out << dump({{"n_a", r.n_a},
                   {"kappa", r.kappa},
                   {"asd_dimension", r.asd_dim},
                   {"codim", r.dims.codim},
                   {"dim", r.dims.dim},
                   {"vacuous", r.dims.vacuous},
                   {"sign", r.dual.sign},
                   {"rows", rows},
                   {"expanded", expanded},
                   {"families_agree", families}});
      break;
    }
  }
  return out.str();
}

std::string render_verify(const VerifyReport& r, const VerifyOptions& o, OutputFormat fmt) {
  const std::string mode = o.symbolic ? "symbolic"
                                      : "n_a " + std::to_string(o.na_min) + ".." + std::to_string(o.na_max) +
                                            ", kappa " + std::to_string(o.kappa_min) + ".." +
                                            std::to_string(o.kappa_max);
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Text:
      out << "# three-way verification, order " << o.max_r << ", " << mode << "\n";
      out << "points = " << r.points << "\n";
      out << "comparisons = " << r.comparisons << "\n";
      out << "discrepancies = " << r.discrepancies << "\n";
      out << "result = " << (r.equal ? "equal" : "discrepancy") << "\n";
      if (r.first)
        out << "first discrepancy = " << r.first->point << "; " << r.first->check << "; " << r.first->triple.str()
            << "; " << r.first->left.str() << " != " << r.first->right.str() << "\n";
      break;
    case OutputFormat::Csv:
      out << "key,value\n";
      out << "order," << o.max_r << "\n";
      out << "mode," << (o.symbolic ? "symbolic" : "numeric") << "\n";
      out << "points," << r.points << "\n";
      out << "comparisons," << r.comparisons << "\n";
      out << "discrepancies," << r.discrepancies << "\n";
      out << "result," << (r.equal ? "equal" : "discrepancy") << "\n";
      if (r.first) {
        out << "point," << r.first->point << "\n";
        out << "check," << r.first->check << "\n";
        out << "triple,\"" << r.first->triple.str() << "\"\n";
        out << "left," << r.first->left.str() << "\n";
        out << "right," << r.first->right.str() << "\n";
      }
      break;
    case OutputFormat::Json: {
      ordered_json j = {{"order", o.max_r},
                        {"mode", o.symbolic ? "symbolic" : "numeric"},
                        {"points", r.points},
                        {"comparisons", r.comparisons},
                        {"equal", r.equal},
                        {"discrepancies", r.discrepancies}};
      if (!o.symbolic) {
        j["na_range"] = {o.na_min, o.na_max};
        j["kappa_range"] = {o.kappa_min, o.kappa_max};
      }
      if (r.first) {
        ordered_json d = triple_json(r.first->triple, r.first->left);
        d.erase("coefficient");
        j["first"] = {{"point", r.first->point},
                      {"check", r.first->check},
                      {"triple", d},
                      {"left", scalar_json(r.first->left)},
                      {"right", scalar_json(r.first->right)}};
      } else {
        j["first"] = nullptr;
      }
      out << dump(j);
      break;
    }
  }
  return out.str();
}

}  // namespace dloci
