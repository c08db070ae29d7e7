#pragma once

#include <cstdint>
#include <vector>

#include "cgobstruct/knots.hpp"
#include "cgobstruct/rational.hpp"

namespace cgo {

/// Character on H₁(Σ(K)) given piece by piece: residue a_j mod p_j means
/// χ restricts to χ_{a_j} on the Z_{p_j} summand of piece j.
class Character {
public:
    /// Reduces each residue mod its piece's cable prime; throws InputError on length mismatch.
    Character(const GAKnot& knot, std::vector<std::int64_t> residues);
    static Character trivial(const GAKnot& knot);

    const std::vector<std::int64_t>& residues() const { return residues_; }
    std::size_t support_size() const;
    bool is_trivial() const { return support_size() == 0; }

    /// -χ, reduced against the same knot.
    Character negated(const GAKnot& knot) const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    Character() = default;
    std::vector<std::int64_t> residues_;
};

/// σ(T(2,q),χ_a) = -q + 2a(q-a)/q for a != 0, and 0 for a = 0.
Rational sigma_torus(std::int64_t q, std::int64_t a);

/// σ of the (2,p)-cable of T(2,qc) at χ_a: the torus term plus 2σ_{T(2,qc)}(ξ_p^a).
Rational sigma_cable(std::int64_t qc, std::int64_t p, std::int64_t a);

/// η of the same cable: 2η_{T(2,qc)}(ξ_p^a).
int eta_cable(std::int64_t qc, std::int64_t p, std::int64_t a);

/// Additive over pieces; negative pieces contribute -σ of their mirror at the same residue.
Rational sigma_knot(const GAKnot& knot, const Character& chi);

/// (#nonzero residues - 1) + Σ cable nullities, or 0 for the trivial character.
/// The count runs over pieces, not over CRT coordinates of Z_N⁴.
int eta_knot(const GAKnot& knot, const Character& chi);

/// Per-piece σ and η contributions for one prime, indexed by residue.
struct SigmaTable {
    struct Entry {
        Rational sigma;  // already multiplied by the piece sign
        int eta = 0;
    };

    std::int64_t p = 0;
    std::vector<std::size_t> piece_indices;  // knot pieces with cable_p == p
    std::vector<std::vector<Entry>> entries;  // [local piece][residue]

    const Entry& at(std::size_t local_piece, std::int64_t residue) const
    {
        return entries[local_piece][static_cast<std::size_t>(residue)];
    }
};

SigmaTable build_sigma_tables(const GAKnot& knot, std::int64_t p);

}  // namespace cgo
