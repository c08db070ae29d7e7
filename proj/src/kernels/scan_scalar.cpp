#include <cstdlib>

#include "cgobstruct/kernels.hpp"

namespace cgo::kernels {

ScanResult scan_scalar(const ScanInput& in)
{
    ScanResult out;
    for (std::size_t k = 0; k < in.length; ++k) {
        std::int32_t sigma = in.offset;
        for (const auto* row : in.sigma_rows) sigma += row[k];
        std::int32_t eta = 0;
        for (const auto* row : in.eta_rows) eta += row[k];
        const std::int32_t value = std::abs(sigma) - eta;
        if (value > in.threshold && out.first_hit < 0) out.first_hit = static_cast<std::int64_t>(k);
        if (value > out.best) out.best = value;
    }
    return out;
}

}  // namespace cgo::kernels
