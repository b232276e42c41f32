#include "qtk/report.hpp"

#include <sstream>

#include "qtk/io.hpp"

namespace qtk {

namespace {

std::string coefficient_str(const Rational& q, const std::string& unit) {
  if (q == 1) return unit;
  if (q == -1) return "-" + unit;
  std::string s = rational_str(q);
  if (q.get_den() != 1) s = "(" + s + ")";
  return s + unit;
}

std::string field_name(unsigned long D) {
  if (D == 0) return "Q";
  return D == 5 ? "Q(√5)" : "Q(√" + std::to_string(D) + ")";
}

}  // namespace

std::string format_scalar(const FieldElem& x) {
  if (x.is_rational()) return rational_str(x.a());
  Rational p = x.a(), q = x.b();
  std::string unit = "√" + std::to_string(x.d());
  if (x.d() == 5) {
    // a + b sqrt5 = (a - b) + 2b phi
    p = x.a() - x.b();
    q = 2 * x.b();
    unit = "φ";
  }
  if (p == 0) return coefficient_str(q, unit);
  if (q < 0) return rational_str(p) + " - " + coefficient_str(-q, unit);
  Rational ap = abs(p);
  return coefficient_str(q, unit) + (p > 0 ? " + " : " - ") + rational_str(ap);
}

std::string format_vector(const KVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v[i]);
  return s + ")";
}

std::string format_quadratic(const KVector& coefficients, const std::string& rel, const FieldElem& rhs,
                             const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const FieldElem& c = coefficients[i];
    if (c.is_zero()) continue;
    const std::string var = "|" + (vars.empty() ? "z" + std::to_string(i + 1) : vars[i]) + "|^2";
    const bool negative = c.sign() < 0;
    FieldElem m = negative ? -c : c;
    std::string term;
    if (m == 1)
      term = var;
    else if (format_scalar(m).find(' ') != std::string::npos)
      term = "(" + format_scalar(m) + ")" + var;
    else
      term = format_scalar(m) + var;
    if (s.empty())
      s = (negative ? "-" : "") + term;
    else
      s += (negative ? " - " : " + ") + term;
  }
  if (s.empty()) s = "0";
  return s + " " + rel + " " + format_scalar(rhs);
}

namespace {

std::string text_report(const std::string& name, const Presentation& p, const std::vector<Chart>& charts) {
  std::ostringstream out;
  out << name << ": toric quasifold over " << field_name(p.field) << ", d = " << p.d << " facets, n = " << p.n
      << "\n\n";
  out << "level set of the moment map (" << p.level_rows.size() << " equation"
      << (p.level_rows.size() == 1 ? "" : "s") << "):\n";
  for (const auto& r : p.level_rows) out << "  " << format_quadratic(r.coefficients, "=", r.constant) << "\n";
  out << "\nidentity component N0 = { exp(2πi s·v) }, v in the span of:\n";
  for (const auto& g : p.cont_gens) out << "  " << format_vector(g) << "\n";
  out << "component group N/N0 = " << p.component_invariants.str() << "\n";
  if (!p.disc_gens.empty()) {
    out << "discrete generators (mod Z^" << p.d << "):\n";
    for (const auto& g : p.disc_gens) out << "  " << format_vector(g) << "\n";
  }
  if (!charts.empty()) out << "\ncharts (" << charts.size() << "):\n";
  for (const auto& c : charts) {
    std::vector<std::string> vars;
    for (auto j : c.active) vars.push_back("z" + std::to_string(j + 1));
    out << "  vertex " << c.vertex_index << " at " << format_vector(c.vertex) << ", coordinates";
    for (const auto& v : vars) out << " " << v;
    out << "; Γ = " << c.gamma_invariants.str() << " (" << kind_name(chart_kind(c.gamma_invariants)) << ")\n";
    for (const auto& s : c.slots) {
      const DomainIneq& q = c.domain[s.ineq];
      out << "    z" << (s.facet + 1) << " slot: " << format_quadratic(s.display_scale * q.coefficients, "<",
                                                                         s.display_scale * q.bound, vars)
          << "\n";
    }
    for (const auto& g : c.gamma_gens) out << "    Γ generator " << format_vector(g) << " mod Z^" << c.active.size() << "\n";
  }
  return out.str();
}

}  // namespace

std::string emit_report(const std::string& name, const Presentation& p, const std::vector<Chart>& charts,
                        ReportFormat format) {
  if (format == ReportFormat::text) return text_report(name, p, charts);
  io::Json j = io::Json::object();
  j["schema_version"] = io::kSchemaVersion;
  j["kind"] = "report";
  j["name"] = name;
  j["presentation"] = io::to_json(p);
  j["charts"] = io::charts_to_json(charts, p.field);
  return io::dump(j);
}

std::string classification_text(const Classification& c) {
  std::ostringstream out;
  out << c.name << ": " << c.summary << "; " << c.vertex_count << " vertices, " << c.facet_count << " facets\n";
  out << "space kind: " << kind_name(c.kind) << (c.refused() ? " (construction refused)" : "") << "\n";
  return out.str();
}

}  // namespace qtk
