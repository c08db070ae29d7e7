#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cgobstruct/knots.hpp"
#include "cgobstruct/obstruction.hpp"
#include "cgobstruct/signatures.hpp"

namespace cgo {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Necessary conditions for algebraic sliceness. A full Seifert-form
/// metabolizer is never constructed.
struct SlicenessDiagnostics {
    int sigma_minus_one = 0;
    FoxMilnorResult fox_milnor;
    std::int64_t resolution = 0;
    std::size_t samples = 0;
    std::size_t nonzero_samples = 0;
    std::size_t perturbed_samples = 0;
    std::optional<SignatureSample> first_nonzero;

    bool signature_function_vanishes() const { return nonzero_samples == 0; }
};

SlicenessDiagnostics sliceness_diagnostics(const GAKnot& knot, std::int64_t resolution);

Json witness_to_json(const Witness& w);
Json prime_result_to_json(const PrimeResult& r);
Json report_to_json(const ObstructionReport& report, const std::optional<SlicenessDiagnostics>& diagnostics = {});

std::string report_to_text(const ObstructionReport& report,
                           const std::optional<SlicenessDiagnostics>& diagnostics = {});

}  // namespace cgo
