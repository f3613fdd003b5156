#pragma once

#include "hypertile/tiling.hpp"

namespace hypertile {

/// Dual restricted to the interior: one face per interior vertex of `t`
/// (its corners are the faces around that vertex), so dual cells that would
/// reach past the boundary are never created. Faces of `t` without an
/// interior corner drop out and the remaining ids are compacted in order.
/// The result's vertex-type is [d^p] when `t` has vertex-type [p^d], otherwise
/// unset.
/// Throws PreconditionError when `t` has no interior vertex.
Tiling dual(const Tiling& t);

/// Truncation of an [n^q] patch: every interior vertex becomes a q-gon and
/// every face whose corners are all interior becomes a 2n-gon. Faces that
/// touch the boundary are trimmed. Throws PreconditionError unless `t` is
/// an [n^q] patch.
Tiling truncate(const Tiling& t);

}  // namespace hypertile
