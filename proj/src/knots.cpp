#include "cgobstruct/knots.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cgo {

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_odd_prime(std::int64_t n) { return n > 2 && is_prime(n); }

Piece Piece::make(std::int64_t companion_q, std::int64_t cable_p, Sign sign)
{
    if (companion_q < 1 || companion_q % 2 == 0)
        throw InputError("companion parameter q' must be odd and >= 1, got " + std::to_string(companion_q));
    if (!is_odd_prime(cable_p))
        throw InputError("cable parameter p must be an odd prime, got " + std::to_string(cable_p));
    if (companion_q % cable_p == 0)
        throw InputError("cable parameter " + std::to_string(cable_p) + " divides 2q' = " +
                         std::to_string(2 * companion_q));
    return Piece{companion_q, cable_p, sign};
}

GAKnot::GAKnot(std::vector<Piece> pieces) : pieces_(std::move(pieces))
{
    if (pieces_.empty()) throw InputError("a knot needs at least one piece");
    for (auto& pc : pieces_) pc = Piece::make(pc.companion_q, pc.cable_p, pc.sign);
}

std::vector<std::int64_t> GAKnot::primes() const
{
    std::set<std::int64_t> s;
    for (const auto& pc : pieces_) s.insert(pc.cable_p);
    return {s.begin(), s.end()};
}

std::size_t GAKnot::multiplicity(std::int64_t p) const
{
    return static_cast<std::size_t>(
        std::count_if(pieces_.begin(), pieces_.end(), [p](const Piece& pc) { return pc.cable_p == p; }));
}

GAKnot GAKnot::mirrored() const
{
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& pc : pieces_) out.push_back(pc.mirrored());
    return GAKnot(std::move(out));
}

GAKnot GAKnot::connect(const GAKnot& other) const
{
    std::vector<Piece> out = pieces_;
    out.insert(out.end(), other.pieces_.begin(), other.pieces_.end());
    return GAKnot(std::move(out));
}

GAKnot build_family(std::int64_t p1, std::int64_t p2, std::int64_t q1, std::int64_t q2, std::int64_t q3)
{
    const std::array<std::int64_t, 5> params{p1, p2, q1, q2, q3};
    for (auto v : params)
        if (!is_odd_prime(v)) throw InputError("family parameter " + std::to_string(v) + " is not an odd prime");
    std::set<std::int64_t> distinct(params.begin(), params.end());
    if (distinct.size() != params.size()) throw InputError("family parameters must be pairwise distinct primes");

    constexpr auto pos = Sign::positive;
    constexpr auto neg = Sign::negative;
    return GAKnot({
        Piece::make(q1, p1, pos), Piece::make(q2, p1, neg), Piece::make(1, p1, pos), Piece::make(q3, p1, neg),
        Piece::make(q2, p2, pos), Piece::make(1, p2, neg), Piece::make(q3, p2, pos), Piece::make(q1, p2, neg),
    });
}

std::optional<FamilyParameters> match_family(const GAKnot& knot)
{
    if (knot.size() != 8) return std::nullopt;
    const auto& k = knot.pieces();
    FamilyParameters t{k[0].cable_p, k[4].cable_p, k[0].companion_q, k[1].companion_q, k[3].companion_q};
    try {
        if (build_family(t) == knot) return t;
    } catch (const InputError&) {
    }
    return std::nullopt;
}

bool is_algebraic_piece(const Piece& piece)
{
    if (piece.is_torus()) return true;
    return piece.cable_p > 2 * 2 * piece.companion_q;
}

LaurentPoly AlexanderFactor::polynomial() const { return torus_alexander(torus_m).substitute_power(power); }

std::string AlexanderFactor::to_string() const
{
    std::string arg = power == 1 ? "t" : "t^" + std::to_string(power);
    return "D_T(2," + std::to_string(torus_m) + ")(" + arg + ")";
}

std::vector<AlexanderFactor> alexander_factors(const GAKnot& knot)
{
    std::vector<AlexanderFactor> out;
    for (const auto& pc : knot.pieces()) {
        if (!pc.is_torus()) out.push_back({pc.companion_q, 2});
        out.push_back({pc.cable_p, 1});
    }
    return out;
}

LaurentPoly alexander_polynomial(const GAKnot& knot)
{
    LaurentPoly acc = LaurentPoly::constant(1);
    for (const auto& f : alexander_factors(knot)) acc = acc * f.polynomial();
    return acc.normalized();
}

LaurentPoly FoxMilnorResult::half_factor() const
{
    LaurentPoly acc = LaurentPoly::constant(1);
    for (const auto& [i, j] : pairs) {
        (void)j;
        acc = acc * factors[i].polynomial();
    }
    return acc;
}

FoxMilnorResult fox_milnor_check(const GAKnot& knot)
{
    FoxMilnorResult res;
    res.factors = alexander_factors(knot);
    std::map<AlexanderFactor, std::size_t> open;
    for (std::size_t i = 0; i < res.factors.size(); ++i) {
        auto it = open.find(res.factors[i]);
        if (it == open.end()) {
            open.emplace(res.factors[i], i);
        } else {
            res.pairs.emplace_back(it->second, i);
            open.erase(it);
        }
    }
    for (const auto& [f, idx] : open) res.unpaired.push_back(idx);
    std::sort(res.unpaired.begin(), res.unpaired.end());
    res.satisfied = res.unpaired.empty();
    return res;
}

}  // namespace cgo
