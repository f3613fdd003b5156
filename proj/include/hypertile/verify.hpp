#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypertile/tiling.hpp"

namespace hypertile {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;  // first few offending items
};

/// Oracle checks recomputed from origin/twin/next_ccw/face alone.
///
/// Check names: "darts", "face-sizes", "euler", "boundary-cycle",
/// "vertex-types", "property-1" or "property-1'" (construction patches
/// only), "layer-counts".
struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<int> layer_vertex_counts;  // vertices created in layer i

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
  std::string summary() const;
};

VerifyReport verify(const Tiling& t);

}  // namespace hypertile
