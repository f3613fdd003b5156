#pragma once

#include <cstdint>
#include <vector>

#include "hypertile/tiling.hpp"

namespace hypertile {

using Code = std::vector<std::int32_t>;

/// Breadth-first code of the map seen from dart `root`: darts are numbered
/// in order of discovery through twin and rotation, and every dart
/// contributes (twin label, rotation label, face size or 0 outside).
/// `mirrored` reads the map with the opposite orientation. Two rooted patches
/// are isomorphic exactly when their codes are equal.
Code canonical_code(const Tiling& t, int root, bool mirrored = false);

/// Least rooted code over all darts and both orientations.
Code canonical_code(const Tiling& t);

/// Combinatorial isomorphism, orientation-reversing maps included.
bool is_isomorphic(const Tiling& a, const Tiling& b);

}  // namespace hypertile
