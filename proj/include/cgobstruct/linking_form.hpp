#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cgobstruct/casson_gordon.hpp"
#include "cgobstruct/knots.hpp"

namespace cgo {

/// p-primary part of the linking form of Σ(K): F_p^r with the diagonal
/// form Σ εᵢxᵢ²/p, one coordinate per piece with cable parameter p.
struct PrimaryPart {
    std::int64_t p = 0;
    std::vector<std::size_t> piece_indices;
    std::vector<int> signs;  // ±1, matching the piece signs

    std::size_t rank() const { return signs.size(); }
};

using PrimaryVector = std::vector<std::int64_t>;

/// One part per distinct cable prime, ascending by prime, pieces in knot order.
std::vector<PrimaryPart> primary_parts(const GAKnot& knot);

/// Σ εᵢxᵢ² mod p, in [0, p).
std::int64_t quadratic_value(const PrimaryVector& x, const PrimaryPart& part);
bool is_isotropic(const PrimaryVector& x, const PrimaryPart& part);

/// Character χ_x: xᵢ on piece_indices[i], zero elsewhere.
Character to_character(const PrimaryVector& x, const PrimaryPart& part, const GAKnot& knot);

/// Calls `visit` once per projective class of nonzero isotropic vectors,
/// with the first nonzero coordinate normalised to 1, in lexicographic order.
void for_each_projective_isotropic(const PrimaryPart& part, const std::function<void(const PrimaryVector&)>& visit);

std::vector<PrimaryVector> enumerate_projective_isotropic(const PrimaryPart& part);

/// Square roots mod an odd prime p: roots[v] lists the y in [0,p) with y² ≡ v, ascending.
class SquareRootTable {
public:
    explicit SquareRootTable(std::int64_t p);
    const std::vector<std::int64_t>& roots(std::int64_t v) const { return roots_[static_cast<std::size_t>(v)]; }

private:
    std::vector<std::vector<std::int64_t>> roots_;
};

}  // namespace cgo
