#pragma once

#include <string>

#include "specpos/analysis.hpp"
#include "specpos/codim.hpp"
#include "specpos/poset.hpp"

namespace specpos {

inline constexpr const char* kReportSchema = "specpos.report.v1";

// Everything the tools print about one space: the classification plus the
// codimension-function outcome.
struct SpaceReport {
  std::string name;
  SpectralPoset poset;
  AnalysisReport analysis;
  CodimResult codim;
};

SpaceReport analyze_space(std::string name, SpectralPoset poset);

// Machine-readable report: one `key = value` line per field in a fixed
// order, starting with `schema = specpos.report.v1`. Witness lines use
// `witness <property>: <detail>`; the codimension outcome is either an
// assignment listed in points order or a certificate walk (see
// emit_report_text for the walk notation).
std::string emit_report(const SpaceReport& r);

// Human-readable report. Certificate walks are written like
// `x1 ^ x6 v x4` where `a ^ b` steps up a cover (codimension -1) and
// `a v b` steps down (+1); a closed walk with nonzero total rules out any
// codimension function.
std::string emit_report_text(const SpaceReport& r);

// Graphviz rendering of the cover diagram: edges point from a point to the
// one it specializes from, generic points on top (rankdir=BT). Points
// standing for infinite families are drawn with a double border.
std::string emit_hasse_dot(const SpectralPoset& poset,
                           const std::string& name);

}  // namespace specpos
