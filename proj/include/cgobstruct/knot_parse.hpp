#pragma once

#include <string>
#include <string_view>

#include "cgobstruct/knots.hpp"

namespace cgo {

/// Parses a '#'-separated sum of terms `T(2,q;2,p)`, `-T(2,q;2,p)`, `T(2,p)`,
/// `-T(2,p)` or `family(p1,p2,q1,q2,q3)`. Whitespace is ignored.
/// Throws InputError with the offending position.
GAKnot parse_knot(std::string_view text);

/// Canonical spelling accepted by parse_knot, e.g. "T(2,17;2,83) # -T(2,83)".
std::string format_knot(const GAKnot& knot);
std::string format_piece(const Piece& piece);

}  // namespace cgo
