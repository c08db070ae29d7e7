#include "cgobstruct/casson_gordon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cgobstruct/signatures.hpp"

namespace cgo {

namespace {

void require_residue(std::int64_t p, std::int64_t a)
{
    if (a < 0 || a >= p)
        throw InputError("residue " + std::to_string(a) + " out of range [0, " + std::to_string(p) + ")");
}

void require_cable(std::int64_t qc, std::int64_t p)
{
    if (!is_odd_prime(p)) throw InputError("cable parameter " + std::to_string(p) + " is not an odd prime");
    if (qc < 1 || qc % 2 == 0) throw InputError("companion parameter must be odd and >= 1");
    if (std::gcd(p, 2 * qc) != 1)
        throw InputError("gcd(" + std::to_string(p) + ", 2*" + std::to_string(qc) + ") != 1");
}

}  // namespace

Character::Character(const GAKnot& knot, std::vector<std::int64_t> residues) : residues_(std::move(residues))
{
    if (residues_.size() != knot.size())
        throw InputError("character has " + std::to_string(residues_.size()) + " residues but the knot has " +
                         std::to_string(knot.size()) + " pieces");
    for (std::size_t j = 0; j < residues_.size(); ++j) {
        const auto p = knot[j].cable_p;
        residues_[j] %= p;
        if (residues_[j] < 0) residues_[j] += p;
    }
}

Character Character::trivial(const GAKnot& knot) { return Character(knot, std::vector<std::int64_t>(knot.size(), 0)); }

std::size_t Character::support_size() const
{
    return static_cast<std::size_t>(std::count_if(residues_.begin(), residues_.end(), [](auto a) { return a != 0; }));
}

Character Character::negated(const GAKnot& knot) const
{
    std::vector<std::int64_t> r(residues_.size());
    std::transform(residues_.begin(), residues_.end(), r.begin(), [](auto a) { return -a; });
    return Character(knot, std::move(r));
}

Rational sigma_torus(std::int64_t q, std::int64_t a)
{
    if (!is_odd_prime(q)) throw InputError("sigma_torus: " + std::to_string(q) + " is not an odd prime");
    require_residue(q, a);
    if (a == 0) return Rational(0);
    return Rational(-q) + Rational(2 * a * (q - a), q);
}

Rational sigma_cable(std::int64_t qc, std::int64_t p, std::int64_t a)
{
    require_cable(qc, p);
    require_residue(p, a);
    if (a == 0) return Rational(0);
    return Rational(-p) + Rational(2 * a * (p - a), p) + Rational(2 * lt_signature(qc, RootOfUnity(a, p)));
}

int eta_cable(std::int64_t qc, std::int64_t p, std::int64_t a)
{
    require_cable(qc, p);
    require_residue(p, a);
    return 2 * lt_nullity(qc, RootOfUnity(a, p));
}

Rational sigma_knot(const GAKnot& knot, const Character& chi)
{
    if (chi.residues().size() != knot.size()) throw InputError("character does not match the knot");
    Rational total;
    for (std::size_t j = 0; j < knot.size(); ++j) {
        const auto& pc = knot[j];
        const auto a = chi.residues()[j];
        if (a == 0) continue;
        total += Rational(to_int(pc.sign)) * sigma_cable(pc.companion_q, pc.cable_p, a);
    }
    return total;
}

int eta_knot(const GAKnot& knot, const Character& chi)
{
    if (chi.residues().size() != knot.size()) throw InputError("character does not match the knot");
    const auto support = chi.support_size();
    if (support == 0) return 0;
    int total = static_cast<int>(support) - 1;
    for (std::size_t j = 0; j < knot.size(); ++j)
        total += eta_cable(knot[j].companion_q, knot[j].cable_p, chi.residues()[j]);
    return total;
}

SigmaTable build_sigma_tables(const GAKnot& knot, std::int64_t p)
{
    if (knot.multiplicity(p) == 0)
        throw InputError("prime " + std::to_string(p) + " is not a cable parameter of the knot");
    SigmaTable table;
    table.p = p;
    const auto len = static_cast<std::size_t>(p);
    for (std::size_t j = 0; j < knot.size(); ++j) {
        const auto& pc = knot[j];
        if (pc.cable_p != p) continue;
        table.piece_indices.push_back(j);
        std::vector<SigmaTable::Entry> row(len);
        const Rational sign(to_int(pc.sign));
        // entry[a] == entry[p - a]
        for (std::int64_t a = 1; a <= (p - 1) / 2; ++a) {
            SigmaTable::Entry e{sign * sigma_cable(pc.companion_q, p, a), eta_cable(pc.companion_q, p, a)};
            row[static_cast<std::size_t>(a)] = e;
            row[static_cast<std::size_t>(p - a)] = e;
        }
        table.entries.push_back(std::move(row));
    }
    return table;
}

}  // namespace cgo
