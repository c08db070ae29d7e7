#include <cstdlib>
#include <string_view>

#include "cgobstruct/kernels.hpp"

namespace cgo::kernels {

bool isa_supported(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(CGO_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

const char* isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

Isa active_isa()
{
    static const Isa chosen = [] {
        if (const char* env = std::getenv("CG_OBSTRUCT_ISA"); env && std::string_view(env) == "scalar")
            return Isa::scalar;
        return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    }();
    return chosen;
}

ScanFn scan_function(Isa isa)
{
    if (isa == Isa::avx2 && isa_supported(Isa::avx2)) return &scan_avx2;
    return &scan_scalar;
}

}  // namespace cgo::kernels
