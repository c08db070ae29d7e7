#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

// Multiplier-scan kernels: the inner loop of the obstruction check.
//
// For lanes k in [0, length):
//   value[k] = |offset + Σᵢ sigma_rows[i][k]| - Σᵢ eta_rows[i][k]
// and a lane is a hit when value[k] > threshold. Every variant must return
// the same first hit and the same maximum, bit for bit.

namespace cgo::kernels {

struct ScanInput {
    std::span<const std::int32_t* const> sigma_rows;
    std::span<const std::int32_t* const> eta_rows;
    std::int32_t offset = 0;
    std::int32_t threshold = 0;
    std::size_t length = 0;
};

struct ScanResult {
    std::int64_t first_hit = -1;  // lane index, -1 when no lane exceeds the threshold
    std::int32_t best = std::numeric_limits<std::int32_t>::min();

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

enum class Isa { scalar, avx2 };

ScanResult scan_scalar(const ScanInput& in);
ScanResult scan_avx2(const ScanInput& in);  // only callable when isa_supported(Isa::avx2)

using ScanFn = ScanResult (*)(const ScanInput&);

bool isa_supported(Isa isa);
const char* isa_name(Isa isa);
/// Widest supported variant, unless CG_OBSTRUCT_ISA=scalar forces the reference path.
Isa active_isa();
ScanFn scan_function(Isa isa);

}  // namespace cgo::kernels
