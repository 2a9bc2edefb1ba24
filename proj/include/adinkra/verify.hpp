#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adinkra/dashing.hpp"
#include "adinkra/graph.hpp"

namespace adinkra {

enum class AdinkraClass { none, pre_adinkra, adinkra };

// Composite check: regular coloring, bipartite, quadrilateral, then dashing
// validity when any edge is dashed and height validity when heights are
// present.  PRE-ADINKRA = bipartite + regular + quadrilateral; ADINKRA
// additionally has a valid totally odd dashing and valid heights.
struct VerifyReport {
  std::vector<ColoringViolation> coloring_violations;
  bool regular = false;
  bool bipartite = false;
  std::optional<bool> quadrilateral;       // absent when not regular
  std::optional<bool> dashing_valid;       // absent when no dashes
  std::vector<BicolorSquare> dashing_violations;
  std::optional<bool> heights_valid;       // absent when no heights
  std::string heights_error;
  AdinkraClass verdict = AdinkraClass::none;

  bool all_passed() const;
};

VerifyReport run_verify(const ColoredGraph& g);

const char* to_string(AdinkraClass c);

}  // namespace adinkra
