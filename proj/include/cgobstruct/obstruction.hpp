#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgobstruct/casson_gordon.hpp"
#include "cgobstruct/kernels.hpp"
#include "cgobstruct/knots.hpp"
#include "cgobstruct/linking_form.hpp"
#include "cgobstruct/rational.hpp"

namespace cgo {

/// A multiple y = kx whose character violates the genus-g inequality:
/// |σ(K,χ_y) + σ_K(-1)| > threshold + η(K,χ_y), threshold = 4g+1.
struct Witness {
    std::int64_t p = 0;
    PrimaryVector x;
    std::int64_t k = 0;
    Rational sigma;  // σ(K,χ_{kx}), without the σ_K(-1) shift
    int eta = 0;
    int threshold = 0;
};

struct VerifyOptions {
    unsigned threads = 1;
    std::size_t max_witnesses = 3;
    kernels::Isa isa = kernels::active_isa();
    /// Multiplier rows are precomputed when rank·p² stays below this; larger
    /// primes permute the base rows per point instead.
    std::size_t row_cache_limit = std::size_t{1} << 24;
};

/// Scans all multipliers k = 1..p-1 of isotropic vectors in one primary part.
class PartScanner {
public:
    PartScanner(const PrimaryPart& part, const SigmaTable& table, int genus, int sigma_minus_one,
                const VerifyOptions& options = {});

    struct Outcome {
        std::int64_t k = 0;  // first violating multiplier, 0 if none
        /// max over k of (|σ + σ_K(-1)| - η), scaled by p.
        std::int64_t scaled_margin = 0;
    };

    /// x must be nonzero with rank() coordinates in [0, p).
    Outcome scan(const PrimaryVector& x) const;
    /// Exact witness for multiplier k, re-derived from the rational table.
    Witness witness(const PrimaryVector& x, std::int64_t k) const;
    Rational margin(const Outcome& o) const { return Rational(o.scaled_margin, part_.p); }

    int threshold() const { return 4 * genus_ + 1; }
    bool caches_rows() const { return !rows_.empty(); }

private:
    void fill_row(std::size_t piece, std::int64_t multiplier, std::int32_t* out) const;

    PrimaryPart part_;
    SigmaTable table_;
    int genus_;
    int sigma_minus_one_;
    kernels::ScanFn scan_;
    std::size_t length_;                      // p - 1 lanes, lane i is k = i + 1
    std::vector<std::vector<std::int32_t>> base_sigma_;  // p·σ by residue, per piece
    std::vector<std::vector<std::int32_t>> base_eta_;    // p·η by residue, per piece
    bool has_eta_ = false;
    std::vector<std::int32_t> rows_;  // [piece][multiplier][lane] when cached
    std::vector<std::int32_t> eta_rows_;
};

/// Builds a scanner and checks a single point.
std::optional<Witness> check_point(const PrimaryVector& x, const PrimaryPart& part, const SigmaTable& table, int genus,
                                   int sigma_minus_one);

struct PrimeResult {
    std::int64_t p = 0;
    std::size_t rank = 0;
    std::size_t points = 0;
    std::size_t witnessed = 0;
    bool verified = false;
    std::vector<Witness> witnesses;       // first few, in enumeration order
    std::optional<Rational> margin;       // min over points of max over k of |σ + σ_K(-1)| - η
    std::optional<PrimaryVector> first_unwitnessed;
};

PrimeResult verify_primary_part(const PrimaryPart& part, const GAKnot& knot, int genus,
                                const VerifyOptions& options = {});
PrimeResult verify_primary_part(const PrimaryPart& part, const SigmaTable& table, int genus, int sigma_minus_one,
                                const VerifyOptions& options = {});

struct HypothesisResult {
    int genus = 0;
    std::vector<std::int64_t> eligible_primes;  // r_p - 2g >= 2
    std::vector<PrimeResult> primes;
    bool refuted = false;  // g₄^top > genus
};

struct ObstructionReport {
    std::string knot;
    std::optional<FamilyParameters> family;
    int sigma_minus_one = 0;
    int max_genus = 0;
    std::vector<HypothesisResult> hypotheses;
    std::vector<int> refuted;
    int lower_bound = 0;
    std::optional<int> upper_bound;
    std::string upper_bound_source;
    std::string conclusion;
    std::vector<std::string> reasoning;
};

ObstructionReport genus_lower_bound(const GAKnot& knot, int max_genus, const VerifyOptions& options = {});

}  // namespace cgo
