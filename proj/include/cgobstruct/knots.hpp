#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgobstruct/laurent.hpp"

namespace cgo {

/// Raised for malformed knots, characters and other user-supplied input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::int64_t n);
bool is_odd_prime(std::int64_t n);

/// +1 for the knot itself, -1 for its reverse mirror image.
enum class Sign : int { positive = 1, negative = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

/// ±T(2,q';2,p): the (2,p)-cable of the torus knot T(2,q'). q' = 1 is the
/// unknot companion, i.e. the piece is the torus knot T(2,p) itself.
struct Piece {
    std::int64_t companion_q = 1;
    std::int64_t cable_p = 3;
    Sign sign = Sign::positive;

    /// Validating factory; throws InputError.
    static Piece make(std::int64_t companion_q, std::int64_t cable_p, Sign sign = Sign::positive);
    static Piece torus(std::int64_t p, Sign sign = Sign::positive) { return make(1, p, sign); }

    bool is_torus() const { return companion_q == 1; }
    Piece mirrored() const { return {companion_q, cable_p, flip(sign)}; }

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Generalized algebraic knot: a formal connected sum of signed pieces.
class GAKnot {
public:
    explicit GAKnot(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    const Piece& operator[](std::size_t i) const { return pieces_[i]; }

    /// Distinct cable primes, ascending.
    std::vector<std::int64_t> primes() const;
    /// r_p: number of pieces with cable parameter p.
    std::size_t multiplicity(std::int64_t p) const;

    GAKnot mirrored() const;
    /// Connected sum; piece order is this knot's pieces followed by other's.
    GAKnot connect(const GAKnot& other) const;

    friend bool operator==(const GAKnot&, const GAKnot&) = default;

private:
    std::vector<Piece> pieces_;
};

using FamilyParameters = std::array<std::int64_t, 5>;  // p1, p2, q1, q2, q3

/// K(p1,p2,q1,q2,q3):
///   T(2,q1;2,p1) # -T(2,q2;2,p1) # T(2,p1) # -T(2,q3;2,p1)
/// # T(2,q2;2,p2) # -T(2,p2) # T(2,q3;2,p2) # -T(2,q1;2,p2)
GAKnot build_family(std::int64_t p1, std::int64_t p2, std::int64_t q1, std::int64_t q2, std::int64_t q3);
inline GAKnot build_family(const FamilyParameters& t) { return build_family(t[0], t[1], t[2], t[3], t[4]); }

/// Inverse of build_family on its exact piece order.
std::optional<FamilyParameters> match_family(const GAKnot& knot);

/// Cable algebraicity s > pqr with (p,q,r,s) = (2,q',2,p); torus pieces always qualify.
bool is_algebraic_piece(const Piece& piece);

LaurentPoly alexander_polynomial(const GAKnot& knot);

/// One structured factor Δ_{T(2,m)}(t^power) of the Alexander polynomial.
struct AlexanderFactor {
    std::int64_t torus_m = 1;
    std::int64_t power = 1;

    LaurentPoly polynomial() const;
    std::string to_string() const;
    friend auto operator<=>(const AlexanderFactor&, const AlexanderFactor&) = default;
};

/// Nontrivial structured factors, piece by piece: companion Δ_{T(2,q')}(t²)
/// then cable Δ_{T(2,p)}(t).
std::vector<AlexanderFactor> alexander_factors(const GAKnot& knot);

struct FoxMilnorResult {
    bool satisfied = false;
    std::vector<AlexanderFactor> factors;
    /// Index pairs into `factors` carrying identical factors.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unpaired;

    /// f with Δ ≐ f(t)·f(t⁻¹): one factor from each pair. Meaningful only when satisfied.
    LaurentPoly half_factor() const;
};

/// Structured Fox-Milnor check: the factor multiset splits into identical pairs.
FoxMilnorResult fox_milnor_check(const GAKnot& knot);

}  // namespace cgo
