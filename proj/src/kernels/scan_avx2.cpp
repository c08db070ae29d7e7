#include "cgobstruct/kernels.hpp"

#if defined(CGO_HAVE_AVX2_KERNEL)

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace cgo::kernels {

ScanResult scan_avx2(const ScanInput& in)
{
    ScanResult out;
    const __m256i offset = _mm256_set1_epi32(in.offset);
    const __m256i threshold = _mm256_set1_epi32(in.threshold);
    __m256i best = _mm256_set1_epi32(out.best);

    std::size_t k = 0;
    for (; k + 8 <= in.length; k += 8) {
        __m256i sigma = offset;
        for (const auto* row : in.sigma_rows)
            sigma = _mm256_add_epi32(sigma, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k)));
        __m256i eta = _mm256_setzero_si256();
        for (const auto* row : in.eta_rows)
            eta = _mm256_add_epi32(eta, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k)));
        const __m256i value = _mm256_sub_epi32(_mm256_abs_epi32(sigma), eta);
        best = _mm256_max_epi32(best, value);
        if (out.first_hit < 0) {
            const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(value, threshold)));
            if (mask != 0) out.first_hit = static_cast<std::int64_t>(k) + std::countr_zero(static_cast<unsigned>(mask));
        }
    }

    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
    out.best = *std::max_element(lanes, lanes + 8);

    for (; k < in.length; ++k) {
        std::int32_t sigma = in.offset;
        for (const auto* row : in.sigma_rows) sigma += row[k];
        std::int32_t eta = 0;
        for (const auto* row : in.eta_rows) eta += row[k];
        const std::int32_t value = std::abs(sigma) - eta;
        if (value > in.threshold && out.first_hit < 0) out.first_hit = static_cast<std::int64_t>(k);
        out.best = std::max(out.best, value);
    }
    return out;
}

}  // namespace cgo::kernels

#else

namespace cgo::kernels {

ScanResult scan_avx2(const ScanInput& in) { return scan_scalar(in); }

}  // namespace cgo::kernels

#endif
