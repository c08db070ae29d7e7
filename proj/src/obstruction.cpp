#include "cgobstruct/obstruction.hpp"

#include <limits>
#include <map>
#include <stdexcept>

#include "cgobstruct/knot_parse.hpp"
#include "cgobstruct/parallel.hpp"
#include "cgobstruct/signatures.hpp"

namespace cgo {

namespace {

constexpr std::int64_t kInt32Max = std::numeric_limits<std::int32_t>::max();

std::int32_t checked_int32(std::int64_t v, const char* what)
{
    if (v > kInt32Max || v < -kInt32Max) throw std::overflow_error(std::string("scaled value out of range: ") + what);
    return static_cast<std::int32_t>(v);
}

}  // namespace

PartScanner::PartScanner(const PrimaryPart& part, const SigmaTable& table, int genus, int sigma_minus_one,
                         const VerifyOptions& options)
    : part_(part),
      table_(table),
      genus_(genus),
      sigma_minus_one_(sigma_minus_one),
      scan_(kernels::scan_function(options.isa)),
      length_(static_cast<std::size_t>(part.p - 1))
{
    if (genus < 0) throw InputError("genus hypothesis must be >= 0");
    if (table.p != part.p || table.entries.size() != part.rank())
        throw std::logic_error("sigma table does not match the primary part");
    const auto p = part.p;
    const auto r = part.rank();

    // Worst case |offset| + Σ max|row| + threshold must fit the 32-bit lanes.
    std::int64_t bound = p * (std::abs(static_cast<std::int64_t>(sigma_minus_one)) + 4 * genus + 1 +
                              static_cast<std::int64_t>(r));
    base_sigma_.resize(r);
    base_eta_.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        base_sigma_[i].resize(static_cast<std::size_t>(p));
        base_eta_[i].resize(static_cast<std::size_t>(p));
        std::int64_t row_max = 0;
        for (std::int64_t a = 0; a < p; ++a) {
            const auto& e = table.at(i, a);
            const Rational scaled = e.sigma * Rational(p);
            if (!scaled.is_integer()) throw std::logic_error("sigma table entry has a denominator not dividing p");
            base_sigma_[i][static_cast<std::size_t>(a)] = checked_int32(scaled.num(), "sigma");
            base_eta_[i][static_cast<std::size_t>(a)] = checked_int32(p * e.eta, "eta");
            has_eta_ = has_eta_ || e.eta != 0;
            row_max = std::max(row_max, std::abs(scaled.num()) + p * e.eta);
        }
        bound += row_max;
    }
    checked_int32(bound, "lane accumulator");

    if (r * static_cast<std::size_t>(p) * length_ <= options.row_cache_limit) {
        const auto stride = static_cast<std::size_t>(p) * length_;
        rows_.assign(r * stride, 0);
        if (has_eta_) eta_rows_.assign(r * stride, 0);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::int64_t c = 1; c < p; ++c) {
                const auto offset = i * stride + static_cast<std::size_t>(c) * length_;
                fill_row(i, c, rows_.data() + offset);
                if (has_eta_) {
                    std::int64_t idx = 0;
                    for (std::size_t lane = 0; lane < length_; ++lane) {
                        idx += c;
                        if (idx >= p) idx -= p;
                        eta_rows_[offset + lane] = base_eta_[i][static_cast<std::size_t>(idx)];
                    }
                }
            }
        }
    }
}

void PartScanner::fill_row(std::size_t piece, std::int64_t multiplier, std::int32_t* out) const
{
    const auto p = part_.p;
    const auto& base = base_sigma_[piece];
    std::int64_t idx = 0;
    for (std::size_t lane = 0; lane < length_; ++lane) {
        idx += multiplier;
        if (idx >= p) idx -= p;
        out[lane] = base[static_cast<std::size_t>(idx)];
    }
}

PartScanner::Outcome PartScanner::scan(const PrimaryVector& x) const
{
    const auto p = part_.p;
    const auto r = part_.rank();
    if (x.size() != r) throw InputError("vector dimension does not match the primary part");

    std::vector<const std::int32_t*> sigma_rows;
    std::vector<const std::int32_t*> eta_rows;
    thread_local std::vector<std::int32_t> scratch;
    thread_local std::vector<std::int32_t> eta_scratch;
    if (!caches_rows()) {
        scratch.resize(r * length_);
        if (has_eta_) eta_scratch.resize(r * length_);
    }

    std::int64_t support = 0;
    const auto stride = static_cast<std::size_t>(p) * length_;
    for (std::size_t i = 0; i < r; ++i) {
        const std::int64_t c = x[i];
        if (c == 0) continue;
        ++support;
        if (caches_rows()) {
            const auto offset = i * stride + static_cast<std::size_t>(c) * length_;
            sigma_rows.push_back(rows_.data() + offset);
            if (has_eta_) eta_rows.push_back(eta_rows_.data() + offset);
        } else {
            std::int32_t* row = scratch.data() + i * length_;
            fill_row(i, c, row);
            sigma_rows.push_back(row);
            if (has_eta_) {
                std::int32_t* erow = eta_scratch.data() + i * length_;
                std::int64_t idx = 0;
                for (std::size_t lane = 0; lane < length_; ++lane) {
                    idx += c;
                    if (idx >= p) idx -= p;
                    erow[lane] = base_eta_[i][static_cast<std::size_t>(idx)];
                }
                eta_rows.push_back(erow);
            }
        }
    }
    if (support == 0) throw InputError("check_point requires a nonzero vector");

    kernels::ScanInput in;
    in.sigma_rows = sigma_rows;
    in.eta_rows = eta_rows;
    in.offset = static_cast<std::int32_t>(p * sigma_minus_one_);
    in.threshold = static_cast<std::int32_t>(p * (threshold() + support - 1));
    in.length = length_;
    const auto res = scan_(in);

    Outcome out;
    out.k = res.first_hit < 0 ? 0 : res.first_hit + 1;
    out.scaled_margin = static_cast<std::int64_t>(res.best) - p * (support - 1);
    return out;
}

Witness PartScanner::witness(const PrimaryVector& x, std::int64_t k) const
{
    const auto p = part_.p;
    Witness w;
    w.p = p;
    w.x = x;
    w.k = k;
    w.threshold = threshold();
    int support = 0;
    int cable_eta = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::int64_t y = (k * x[i]) % p;
        if (y == 0) continue;
        ++support;
        const auto& e = table_.at(i, y);
        w.sigma += e.sigma;
        cable_eta += e.eta;
    }
    w.eta = support == 0 ? 0 : support - 1 + cable_eta;
    if ((w.sigma + Rational(sigma_minus_one_)).abs() <= Rational(w.threshold + w.eta))
        throw std::logic_error("multiplier scan reported a witness that fails the exact comparison");
    return w;
}

std::optional<Witness> check_point(const PrimaryVector& x, const PrimaryPart& part, const SigmaTable& table, int genus,
                                   int sigma_minus_one)
{
    VerifyOptions opts;
    opts.row_cache_limit = 0;
    PartScanner scanner(part, table, genus, sigma_minus_one, opts);
    auto o = scanner.scan(x);
    if (o.k == 0) return std::nullopt;
    return scanner.witness(x, o.k);
}

PrimeResult verify_primary_part(const PrimaryPart& part, const SigmaTable& table, int genus, int sigma_minus_one,
                                const VerifyOptions& options)
{
    PrimeResult res;
    res.p = part.p;
    res.rank = part.rank();
    const auto points = enumerate_projective_isotropic(part);
    res.points = points.size();
    if (points.empty()) return res;

    const PartScanner scanner(part, table, genus, sigma_minus_one, options);
    std::vector<PartScanner::Outcome> outcomes(points.size());
    parallel_chunks(points.size(), resolve_threads(options.threads), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) outcomes[i] = scanner.scan(points[i]);
    });

    // Ordered reduction over the enumeration order.
    std::int64_t min_margin = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& o = outcomes[i];
        min_margin = std::min(min_margin, o.scaled_margin);
        if (o.k != 0) {
            ++res.witnessed;
            if (res.witnesses.size() < options.max_witnesses) res.witnesses.push_back(scanner.witness(points[i], o.k));
        } else if (!res.first_unwitnessed) {
            res.first_unwitnessed = points[i];
        }
    }
    res.margin = Rational(min_margin, part.p);
    res.verified = res.witnessed == res.points;
    return res;
}

PrimeResult verify_primary_part(const PrimaryPart& part, const GAKnot& knot, int genus, const VerifyOptions& options)
{
    return verify_primary_part(part, build_sigma_tables(knot, part.p), genus, signature_at_minus_one(knot), options);
}

ObstructionReport genus_lower_bound(const GAKnot& knot, int max_genus, const VerifyOptions& options)
{
    if (max_genus < 1) throw InputError("maximum genus hypothesis must be >= 1");
    ObstructionReport rep;
    rep.knot = format_knot(knot);
    rep.family = match_family(knot);
    rep.sigma_minus_one = signature_at_minus_one(knot);
    rep.max_genus = max_genus;

    const auto parts = primary_parts(knot);
    std::map<std::int64_t, SigmaTable> tables;

    for (int g = 1; g <= max_genus; ++g) {
        HypothesisResult hyp;
        hyp.genus = g;
        for (const auto& part : parts) {
            if (static_cast<int>(part.rank()) - 2 * g < 2) continue;
            hyp.eligible_primes.push_back(part.p);
            auto it = tables.find(part.p);
            if (it == tables.end()) it = tables.emplace(part.p, build_sigma_tables(knot, part.p)).first;
            hyp.primes.push_back(verify_primary_part(part, it->second, g, rep.sigma_minus_one, options));
        }
        hyp.refuted = !hyp.primes.empty();
        for (const auto& pr : hyp.primes) hyp.refuted = hyp.refuted && pr.verified;

        std::string line = "g=" + std::to_string(g) + ": ";
        if (hyp.eligible_primes.empty()) {
            line += "no prime has r_p - 2g >= 2, so a rank-2g summand can absorb every primary part; not refutable";
        } else {
            line += "primes with r_p - 2g >= 2:";
            for (auto p : hyp.eligible_primes) line += " " + std::to_string(p);
            line += hyp.refuted ? "; every isotropic point has a violating multiple, so g4_top > " + std::to_string(g)
                                : "; some isotropic point has no violating multiple, hypothesis not refuted";
        }
        rep.reasoning.push_back(line);
        if (hyp.refuted) {
            rep.refuted.push_back(g);
            rep.lower_bound = std::max(rep.lower_bound, g + 1);
        }
        rep.hypotheses.push_back(std::move(hyp));
    }

    if (rep.family) {
        rep.upper_bound = 2;
        rep.upper_bound_source = "cited: genus-two ribbon cobordism for K(p1,p2,q1,q2,q3) (not computed)";
    }
    if (rep.upper_bound && rep.lower_bound == *rep.upper_bound) {
        const auto g = std::to_string(rep.lower_bound);
        rep.conclusion = "g₄^top = g₄ = " + g;
    } else if (rep.lower_bound > 0) {
        rep.conclusion = "g₄^top ≥ " + std::to_string(rep.lower_bound);
    } else {
        rep.conclusion = "no lower bound certified";
    }
    return rep;
}

}  // namespace cgo
