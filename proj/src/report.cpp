#include "cgobstruct/report.hpp"

#include <iomanip>
#include <sstream>

namespace cgo {

namespace {

const char* kSlicenessNote =
    "only necessary conditions for algebraic sliceness are checked (sigma_K(-1), sampled signature function, "
    "structured Fox-Milnor pairing); no Seifert-form metabolizer is constructed";

std::string vector_text(const PrimaryVector& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

}  // namespace

SlicenessDiagnostics sliceness_diagnostics(const GAKnot& knot, std::int64_t resolution)
{
    SlicenessDiagnostics d;
    d.sigma_minus_one = signature_at_minus_one(knot);
    d.fox_milnor = fox_milnor_check(knot);
    d.resolution = resolution;
    for (const auto& s : signature_function_samples(knot, resolution)) {
        ++d.samples;
        if (s.perturbed) ++d.perturbed_samples;
        if (s.signature != 0) {
            if (!d.first_nonzero) d.first_nonzero = s;
            ++d.nonzero_samples;
        }
    }
    return d;
}

Json witness_to_json(const Witness& w)
{
    return Json{{"x", w.x}, {"k", w.k}, {"sigma", w.sigma.to_string()}, {"eta", w.eta}, {"threshold", w.threshold}};
}

Json prime_result_to_json(const PrimeResult& r)
{
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w));
    Json j{{"p", r.p},
           {"rank", r.rank},
           {"points", r.points},
           {"witnessed", r.witnessed},
           {"verified", r.verified},
           {"witnesses", std::move(witnesses)},
           {"margin", r.margin ? Json(r.margin->to_string()) : Json(nullptr)}};
    j["first_unwitnessed"] = r.first_unwitnessed ? Json(*r.first_unwitnessed) : Json(nullptr);
    return j;
}

Json report_to_json(const ObstructionReport& report, const std::optional<SlicenessDiagnostics>& diagnostics)
{
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["knot"] = report.knot;
    j["family"] = report.family ? Json(*report.family) : Json(nullptr);
    j["sigma_minus_one"] = report.sigma_minus_one;
    j["genus_hypothesis"] = report.max_genus;

    Json primes = Json::array();
    if (!report.hypotheses.empty())
        for (const auto& pr : report.hypotheses.back().primes) primes.push_back(prime_result_to_json(pr));
    j["primes"] = std::move(primes);

    Json hyps = Json::array();
    for (const auto& h : report.hypotheses) {
        Json hp = Json::array();
        for (const auto& pr : h.primes) hp.push_back(prime_result_to_json(pr));
        hyps.push_back(Json{{"genus", h.genus},
                            {"threshold", 4 * h.genus + 1},
                            {"eligible_primes", h.eligible_primes},
                            {"refuted", h.refuted},
                            {"primes", std::move(hp)}});
    }
    j["hypotheses"] = std::move(hyps);

    j["genus"] = Json{{"hypotheses_refuted", report.refuted},
                      {"lower_bound", report.lower_bound},
                      {"upper_bound", report.upper_bound ? Json(*report.upper_bound) : Json(nullptr)},
                      {"upper_bound_source", report.upper_bound ? Json(report.upper_bound_source) : Json(nullptr)},
                      {"conclusion", report.conclusion},
                      {"reasoning", report.reasoning}};

    if (diagnostics) {
        const auto& d = *diagnostics;
        Json factors = Json::array();
        for (const auto& f : d.fox_milnor.factors) factors.push_back(f.to_string());
        Json pairs = Json::array();
        for (const auto& [a, b] : d.fox_milnor.pairs) pairs.push_back(Json::array({a, b}));
        j["diagnostics"] = Json{
            {"sigma_minus_one", d.sigma_minus_one},
            {"fox_milnor",
             Json{{"satisfied", d.fox_milnor.satisfied},
                  {"factors", std::move(factors)},
                  {"pairs", std::move(pairs)},
                  {"unpaired", d.fox_milnor.unpaired}}},
            {"signature_function",
             Json{{"resolution", d.resolution},
                  {"samples", d.samples},
                  {"perturbed", d.perturbed_samples},
                  {"nonzero", d.nonzero_samples},
                  {"vanishes", d.signature_function_vanishes()}}},
            {"algebraic_sliceness", kSlicenessNote}};
    }
    return j;
}

std::string report_to_text(const ObstructionReport& report, const std::optional<SlicenessDiagnostics>& diagnostics)
{
    std::ostringstream os;
    os << "knot: " << report.knot << "\n";
    if (report.family) {
        const auto& f = *report.family;
        os << "family: K(" << f[0] << "," << f[1] << "," << f[2] << "," << f[3] << "," << f[4] << ")\n";
    }
    os << "sigma_K(-1) = " << report.sigma_minus_one << "\n";
    if (diagnostics) {
        const auto& d = *diagnostics;
        os << "Fox-Milnor pairing: " << (d.fox_milnor.satisfied ? "yes" : "no") << " (" << d.fox_milnor.pairs.size()
           << " pairs, " << d.fox_milnor.unpaired.size() << " unpaired)\n";
        os << "signature function: " << d.samples << " samples at resolution " << d.resolution << ", "
           << d.nonzero_samples << " nonzero\n";
        os << "note: " << kSlicenessNote << "\n";
    }
    for (const auto& h : report.hypotheses) {
        os << "\nhypothesis g4_top <= " << h.genus << "  (threshold 4g+1 = " << 4 * h.genus + 1 << ")\n";
        if (h.primes.empty()) {
            os << "  no eligible prime (r_p - 2g < 2 everywhere)\n";
            continue;
        }
        os << "  " << std::setw(6) << "p" << std::setw(6) << "r_p" << std::setw(10) << "points" << std::setw(10)
           << "witnessed" << std::setw(10) << "verified" << std::setw(12) << "margin" << "\n";
        for (const auto& pr : h.primes) {
            os << "  " << std::setw(6) << pr.p << std::setw(6) << pr.rank << std::setw(10) << pr.points
               << std::setw(10) << pr.witnessed << std::setw(10) << (pr.verified ? "yes" : "NO") << std::setw(12)
               << (pr.margin ? pr.margin->to_string() : "-") << "\n";
            for (const auto& w : pr.witnesses)
                os << "    x=" << vector_text(w.x) << " k=" << w.k << " sigma=" << w.sigma << " (" << std::fixed
                   << std::setprecision(4) << w.sigma.to_double() << std::defaultfloat << ") eta=" << w.eta
                   << " threshold=" << w.threshold << "\n";
            if (pr.first_unwitnessed) os << "    no violating multiple for x=" << vector_text(*pr.first_unwitnessed) << "\n";
        }
        os << "  " << (h.refuted ? "refuted" : "not refuted") << "\n";
    }
    os << "\n";
    for (const auto& line : report.reasoning) os << line << "\n";
    os << "lower bound: " << report.lower_bound << "\n";
    if (report.upper_bound) os << "upper bound: " << *report.upper_bound << " (" << report.upper_bound_source << ")\n";
    os << report.conclusion << "\n";
    return os.str();
}

}  // namespace cgo
