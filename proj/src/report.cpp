#include "specpos/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace specpos {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

std::string walk_text(const SpectralPoset& p,
                      const std::vector<std::string>& walk) {
  std::string out = walk.empty() ? std::string() : walk.front();
  for (size_t k = 1; k < walk.size(); ++k) {
    bool up = p.leq(walk[k - 1], walk[k]);  // consecutive points are covers
    out += up ? " ^ " : " v ";
    out += walk[k];
  }
  return out;
}

std::string obstruction_list(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (pairs.empty()) return "none";
  std::string out;
  for (size_t k = 0; k < pairs.size(); ++k) {
    if (k) out += "; ";
    out += pairs[k].first + " < " + pairs[k].second;
  }
  return out;
}

std::string assignment_list(const SpectralPoset& p,
                            const CodimAssignment& a) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += "; ";
    out += p.point(i) + " = " + std::to_string(a.values.at(p.point(i)));
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

SpaceReport analyze_space(std::string name, SpectralPoset poset) {
  AnalysisReport analysis = classify(poset);
  CodimResult codim = solve_codim_function(poset);
  return SpaceReport{std::move(name), std::move(poset), std::move(analysis),
                     std::move(codim)};
}

std::string emit_report(const SpaceReport& r) {
  std::ostringstream out;
  const AnalysisReport& a = r.analysis;
  out << "schema = " << kReportSchema << "\n";
  out << "space = " << r.name << "\n";
  out << "points = " << a.n_points << "\n";
  out << "dimension = " << a.dimension << "\n";
  out << "equidimensional = " << true_false(a.equidimensional) << "\n";
  out << "equicodimensional = " << true_false(a.equicodimensional) << "\n";
  out << "catenary = " << true_false(a.catenary) << "\n";
  out << "weakly_biequidimensional = "
      << true_false(a.weakly_biequidimensional) << "\n";
  out << "biequidimensional = " << true_false(a.biequidimensional) << "\n";
  out << "dimension_formula = " << true_false(a.dimension_formula) << "\n";
  out << "dim_additivity = " << true_false(a.dim_additivity) << "\n";
  out << "codim_additivity = " << true_false(a.codim_additivity) << "\n";
  out << "local_rings_catenary_equidimensional = "
      << true_false(a.local_rings_catenary_equidimensional) << "\n";
  out << "noetherian_obstruction_free = "
      << true_false(a.noetherian_violations.empty()) << "\n";
  out << "noetherian_obstructions = "
      << obstruction_list(a.noetherian_violations) << "\n";
  for (const Witness& w : a.witnesses) {
    out << "witness " << w.property << ": " << w.detail << "\n";
  }
  if (has_assignment(r.codim)) {
    out << "codim_function = assignment\n";
    out << "codim_assignment = "
        << assignment_list(r.poset, std::get<CodimAssignment>(r.codim))
        << "\n";
  } else {
    const auto& cert = std::get<CodimCertificate>(r.codim);
    out << "codim_function = none\n";
    out << "codim_certificate = " << walk_text(r.poset, cert.walk)
        << "; signed_length = " << cert.signed_length << "\n";
  }
  return out.str();
}

std::string emit_report_text(const SpaceReport& r) {
  std::ostringstream out;
  const AnalysisReport& a = r.analysis;
  out << "space " << r.name << ": " << a.n_points
      << (a.n_points == 1 ? " point" : " points") << ", dimension "
      << a.dimension << "\n";
  auto row = [&](const std::string& label, bool value) {
    out << "  " << label;
    for (size_t k = label.size(); k < 41; ++k) out << ' ';
    out << yes_no(value) << "\n";
  };
  row("equidimensional", a.equidimensional);
  row("equicodimensional", a.equicodimensional);
  row("catenary", a.catenary);
  row("weakly biequidimensional", a.weakly_biequidimensional);
  row("biequidimensional", a.biequidimensional);
  row("dimension formula", a.dimension_formula);
  row("dimension additivity", a.dim_additivity);
  row("codimension additivity", a.codim_additivity);
  row("local posets catenary + equidimensional",
      a.local_rings_catenary_equidimensional);
  if (!a.witnesses.empty()) {
    out << "witnesses:\n";
    for (const Witness& w : a.witnesses) {
      out << "  " << w.property << ": " << w.detail << "\n";
    }
  }
  out << "noetherian obstructions: "
      << obstruction_list(a.noetherian_violations) << "\n";
  if (has_assignment(r.codim)) {
    out << "codimension function: "
        << assignment_list(r.poset, std::get<CodimAssignment>(r.codim))
        << "\n";
  } else {
    const auto& cert = std::get<CodimCertificate>(r.codim);
    out << "codimension function: none\n";
    out << "  certificate: " << walk_text(r.poset, cert.walk)
        << " (signed length " << cert.signed_length << ")\n";
  }
  return out.str();
}

std::string emit_hasse_dot(const SpectralPoset& poset,
                           const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < poset.size(); ++i) {
    out << "  \"" << dot_escape(poset.point(i)) << "\"";
    if (poset.is_infinite(i)) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const auto& [lo, hi] : poset.covers()) {
    out << "  \"" << dot_escape(poset.point(lo)) << "\" -> \""
        << dot_escape(poset.point(hi)) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace specpos
