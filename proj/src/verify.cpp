#include "adinkra/verify.hpp"

#include <stdexcept>

#include "adinkra/heights.hpp"
#include "adinkra/structure.hpp"

namespace adinkra {

bool VerifyReport::all_passed() const {
  if (!regular || !bipartite) return false;
  if (!quadrilateral.value_or(false)) return false;
  if (dashing_valid && !*dashing_valid) return false;
  if (heights_valid && !*heights_valid) return false;
  return true;
}

VerifyReport run_verify(const ColoredGraph& g) {
  VerifyReport report;
  report.coloring_violations = validate_regular_coloring(g);
  report.regular = report.coloring_violations.empty();
  report.bipartite = bipartition(g).has_value();
  if (report.regular) {
    report.quadrilateral = is_quadrilateral(g);
  }

  bool quad = report.quadrilateral.value_or(false);
  if (g.has_dashes() && quad) {
    report.dashing_violations = validate_totally_odd(g);
    report.dashing_valid = report.dashing_violations.empty();
  }
  if (g.has_heights()) {
    try {
      heights_of(g);
      report.heights_valid = true;
    } catch (const std::invalid_argument& err) {
      report.heights_valid = false;
      report.heights_error = err.what();
    }
  }

  if (report.regular && report.bipartite && quad) {
    bool dashed_ok = report.dashing_valid.value_or(false);
    bool heights_ok = report.heights_valid.value_or(false);
    report.verdict = dashed_ok && heights_ok ? AdinkraClass::adinkra
                                             : AdinkraClass::pre_adinkra;
  } else {
    report.verdict = AdinkraClass::none;
  }
  return report;
}

const char* to_string(AdinkraClass c) {
  switch (c) {
    case AdinkraClass::none:
      return "NONE";
    case AdinkraClass::pre_adinkra:
      return "PRE-ADINKRA";
    case AdinkraClass::adinkra:
      return "ADINKRA";
  }
  return "NONE";
}

}  // namespace adinkra
