#include "cgobstruct/linking_form.hpp"

namespace cgo {

SquareRootTable::SquareRootTable(std::int64_t p) : roots_(static_cast<std::size_t>(p))
{
    for (std::int64_t y = 0; y < p; ++y) roots_[static_cast<std::size_t>(y * y % p)].push_back(y);
}

std::vector<PrimaryPart> primary_parts(const GAKnot& knot)
{
    std::vector<PrimaryPart> parts;
    for (auto p : knot.primes()) {
        PrimaryPart part;
        part.p = p;
        for (std::size_t j = 0; j < knot.size(); ++j) {
            if (knot[j].cable_p != p) continue;
            part.piece_indices.push_back(j);
            part.signs.push_back(to_int(knot[j].sign));
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

std::int64_t quadratic_value(const PrimaryVector& x, const PrimaryPart& part)
{
    if (x.size() != part.rank()) throw InputError("vector dimension does not match the primary part");
    const auto p = part.p;
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t xi = x[i] % p;
        acc = (acc + part.signs[i] * (xi * xi % p)) % p;
    }
    return acc < 0 ? acc + p : acc;
}

bool is_isotropic(const PrimaryVector& x, const PrimaryPart& part) { return quadratic_value(x, part) == 0; }

Character to_character(const PrimaryVector& x, const PrimaryPart& part, const GAKnot& knot)
{
    if (x.size() != part.rank()) throw InputError("vector dimension does not match the primary part");
    std::vector<std::int64_t> residues(knot.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) residues[part.piece_indices[i]] = x[i];
    return Character(knot, std::move(residues));
}

void for_each_projective_isotropic(const PrimaryPart& part, const std::function<void(const PrimaryVector&)>& visit)
{
    const auto r = part.rank();
    if (r < 2) return;
    const auto p = part.p;
    const SquareRootTable sqrt_table(p);
    const std::size_t last = r - 1;

    // Leading zeros sort first, so walk the normalised position from the back.
    for (std::size_t lead = last; lead-- > 0;) {
        PrimaryVector x(r, 0);
        x[lead] = 1;
        while (true) {
            std::int64_t partial = 0;
            for (std::size_t i = lead; i < last; ++i) partial = (partial + part.signs[i] * (x[i] * x[i] % p)) % p;
            // ε_last·y² ≡ -partial
            std::int64_t target = (-partial * part.signs[last]) % p;
            if (target < 0) target += p;
            for (auto y : sqrt_table.roots(target)) {
                x[last] = y;
                visit(x);
            }
            x[last] = 0;

            // odometer over the free coordinates lead+1 .. last-1
            bool advanced = false;
            for (std::size_t i = last; i-- > lead + 1;) {
                if (++x[i] < p) {
                    advanced = true;
                    break;
                }
                x[i] = 0;
            }
            if (!advanced) break;
        }
    }
}

std::vector<PrimaryVector> enumerate_projective_isotropic(const PrimaryPart& part)
{
    std::vector<PrimaryVector> out;
    for_each_projective_isotropic(part, [&](const PrimaryVector& x) { out.push_back(x); });
    return out;
}

}  // namespace cgo
