// cg-obstruct: Casson-Gordon four-genus obstructions for sums of cabled torus knots.
//
// Exit codes: 0 certified / success, 1 not certified, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cgobstruct/casson_gordon.hpp"
#include "cgobstruct/knot_parse.hpp"
#include "cgobstruct/obstruction.hpp"
#include "cgobstruct/report.hpp"
#include "cgobstruct/search.hpp"
#include "cgobstruct/signatures.hpp"

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitInputError = 2;

enum class OutputFormat { human, json, csv };

const std::map<std::string, OutputFormat> kFormats{
    {"human", OutputFormat::human}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

struct KnotArgs {
    std::string family;
    std::string knot;
};

cgo::GAKnot knot_from(const KnotArgs& a)
{
    if (!a.family.empty() && !a.knot.empty()) throw cgo::InputError("give either --family or --knot, not both");
    if (!a.family.empty()) return cgo::parse_knot("family(" + a.family + ")");
    if (!a.knot.empty()) return cgo::parse_knot(a.knot);
    throw cgo::InputError("one of --family or --knot is required");
}

std::vector<std::int64_t> parse_int_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoll(item, &used));
        } catch (const std::exception&) {
            throw cgo::InputError("expected a comma-separated list of integers, got '" + text + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw cgo::InputError("expected a comma-separated list of integers, got '" + text + "'");
    }
    return out;
}

std::string decimal(const cgo::Rational& r)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << r.to_double();
    return os.str();
}

struct VerifyArgs {
    KnotArgs knot;
    int genus = 1;
    OutputFormat format = OutputFormat::human;
    unsigned threads = 0;
    std::size_t witnesses = 3;
    std::int64_t resolution = 1000;
};

int run_verify(const VerifyArgs& a)
{
    const auto knot = knot_from(a.knot);
    if (a.genus < 1) throw cgo::InputError("--genus must be >= 1");
    cgo::VerifyOptions opts;
    opts.threads = a.threads;
    opts.max_witnesses = a.witnesses;
    const auto diagnostics = cgo::sliceness_diagnostics(knot, a.resolution);
    const auto report = cgo::genus_lower_bound(knot, a.genus, opts);
    if (a.format == OutputFormat::json)
        std::cout << cgo::report_to_json(report, diagnostics).dump(2) << "\n";
    else
        std::cout << cgo::report_to_text(report, diagnostics);
    return report.lower_bound >= a.genus + 1 ? kExitCertified : kExitNotCertified;
}

struct SignatureArgs {
    std::int64_t q = 3;
    std::int64_t m = 3;
    OutputFormat format = OutputFormat::csv;
};

int run_signature(const SignatureArgs& a)
{
    if (a.q < 1 || a.q % 2 == 0) throw cgo::InputError("--q must be odd and >= 1");
    if (a.m < 1) throw cgo::InputError("--m must be >= 1");
    cgo::Json rows = cgo::Json::array();
    if (a.format == OutputFormat::csv) std::cout << "q,a,m,sigma,eta\n";
    for (std::int64_t k = 0; k < a.m; ++k) {
        const cgo::RootOfUnity w(k, a.m);
        const int s = cgo::lt_signature(a.q, w);
        const int n = cgo::lt_nullity(a.q, w);
        switch (a.format) {
        case OutputFormat::csv:
            std::cout << a.q << "," << k << "," << a.m << "," << s << "," << n << "\n";
            break;
        case OutputFormat::human:
            std::cout << "sigma_T(2," << a.q << ")(xi_" << a.m << "^" << k << ") = " << s << "   eta = " << n << "\n";
            break;
        case OutputFormat::json:
            rows.push_back(cgo::Json{{"q", a.q}, {"a", k}, {"m", a.m}, {"sigma", s}, {"eta", n}});
            break;
        }
    }
    if (a.format == OutputFormat::json) std::cout << rows.dump(2) << "\n";
    return kExitCertified;
}

struct CgArgs {
    KnotArgs knot;
    std::string character;
    OutputFormat format = OutputFormat::human;
};

int run_cg(const CgArgs& a)
{
    const auto knot = knot_from(a.knot);
    const cgo::Character chi(knot, parse_int_list(a.character));
    const auto sigma = cgo::sigma_knot(knot, chi);
    const int eta = cgo::eta_knot(knot, chi);
    switch (a.format) {
    case OutputFormat::json:
        std::cout << cgo::Json{{"knot", cgo::format_knot(knot)},
                               {"character", chi.residues()},
                               {"sigma", sigma.to_string()},
                               {"sigma_decimal", sigma.to_double()},
                               {"eta", eta}}
                         .dump(2)
                  << "\n";
        break;
    case OutputFormat::csv:
        std::cout << "sigma,sigma_decimal,eta\n" << sigma << "," << decimal(sigma) << "," << eta << "\n";
        break;
    case OutputFormat::human:
        std::cout << "knot:  " << cgo::format_knot(knot) << "\n"
                  << "sigma = " << sigma << "  (" << decimal(sigma) << ")\n"
                  << "eta   = " << eta << "\n";
        break;
    }
    return kExitCertified;
}

struct SearchArgs {
    std::string config_file;
    cgo::SearchConfig cfg;
    std::string ranking = "product";
    bool allow_non_algebraic = false;
    std::string checkpoint;
    OutputFormat format = OutputFormat::json;
};

int run_search(SearchArgs a, const CLI::App& sub)
{
    cgo::SearchConfig cfg = a.cfg;
    if (!a.config_file.empty()) {
        std::ifstream in(a.config_file);
        if (!in) throw cgo::InputError("cannot read config file " + a.config_file);
        cfg = cgo::parse_search_config(in, cfg);
        // explicit flags win over the file
        auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
        if (given("--p-min")) cfg.p_min = a.cfg.p_min;
        if (given("--p-max")) cfg.p_max = a.cfg.p_max;
        if (given("--q-min")) cfg.q_min = a.cfg.q_min;
        if (given("--q-max")) cfg.q_max = a.cfg.q_max;
        if (given("--genus")) cfg.genus = a.cfg.genus;
        if (given("--limit")) cfg.limit = a.cfg.limit;
        if (given("--threads")) cfg.threads = a.cfg.threads;
        if (given("--witnesses")) cfg.max_witnesses = a.cfg.max_witnesses;
        if (given("--rank-key")) cfg.ranking = cgo::parse_ranking_key(a.ranking);
        if (given("--allow-non-algebraic")) cfg.require_algebraic = false;
    } else {
        cfg.ranking = cgo::parse_ranking_key(a.ranking);
        cfg.require_algebraic = !a.allow_non_algebraic;
    }
    std::optional<std::filesystem::path> checkpoint;
    if (!a.checkpoint.empty()) checkpoint = a.checkpoint;

    const auto outcome = cgo::search(cfg, checkpoint);
    std::size_t rank = 0;
    for (const auto& rec : outcome.verified) {
        ++rank;
        if (a.format == OutputFormat::human) {
            const auto& t = rec.tuple;
            std::cout << std::setw(4) << rank << "  K(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ","
                      << t[4] << ")  margin " << rec.margin.value_or("-") << "\n";
        } else {
            cgo::Json line{{"rank", rank}, {"ranking_key", cgo::ranking_key_name(cfg.ranking)}};
            const auto body = rec.to_json();
            for (const auto& [k, v] : body.items()) line[k] = v;
            std::cout << line.dump() << "\n";
        }
    }
    std::cerr << "candidates: " << outcome.candidates << ", evaluated: " << outcome.evaluated
              << ", resumed: " << outcome.resumed << ", errors: " << outcome.errors
              << ", verified: " << outcome.verified.size() << " (ranking " << cgo::ranking_key_name(cfg.ranking)
              << ")\n";
    return kExitCertified;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Casson-Gordon four-genus obstructions for generalized algebraic knots"};
    app.require_subcommand(1);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "certify a four-genus lower bound");
    v->add_option("--family", verify.knot.family, "family parameters p1,p2,q1,q2,q3");
    v->add_option("--knot", verify.knot.knot, "knot, e.g. \"T(2,5;2,7) # -T(2,5;2,7)\"");
    v->add_option("--genus", verify.genus, "genus hypothesis g to refute (certifies g4_top > g)");
    v->add_option("--format", verify.format, "human or json")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    v->add_option("--threads", verify.threads, "worker threads (0 = all cores)");
    v->add_option("--witnesses", verify.witnesses, "witnesses listed per prime");
    v->add_option("--resolution", verify.resolution, "signature function sampling resolution");

    SearchArgs search;
    auto* s = app.add_subcommand("search", "sweep family parameters for certified examples");
    s->add_option("--config", search.config_file, "key = value config file");
    s->add_option("--p-min", search.cfg.p_min);
    s->add_option("--p-max", search.cfg.p_max);
    s->add_option("--q-min", search.cfg.q_min);
    s->add_option("--q-max", search.cfg.q_max);
    s->add_option("--genus", search.cfg.genus);
    s->add_option("--limit", search.cfg.limit, "stop after this many verified tuples");
    s->add_option("--threads", search.cfg.threads, "worker threads (0 = all cores)");
    s->add_option("--witnesses", search.cfg.max_witnesses);
    s->add_option("--rank-key", search.ranking, "product, max_prime or lexicographic");
    s->add_flag("--allow-non-algebraic", search.allow_non_algebraic, "drop the p > 4q algebraicity filter");
    s->add_option("--checkpoint", search.checkpoint, "append-only JSON-lines progress file");
    s->add_option("--format", search.format, "json (JSON lines) or human")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    SignatureArgs sig;
    auto* g = app.add_subcommand("signature", "Levine-Tristram signatures of T(2,q) at m-th roots of unity");
    g->add_option("--q", sig.q)->required();
    g->add_option("--m", sig.m)->required();
    g->add_option("--format", sig.format, "csv, json or human")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    CgArgs cg;
    auto* c = app.add_subcommand("cg", "Casson-Gordon sigma and eta at a character");
    c->add_option("--family", cg.knot.family);
    c->add_option("--knot", cg.knot.knot);
    c->add_option("--character", cg.character, "residues, one per piece")->required();
    c->add_option("--format", cg.format, "human, json or csv")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (v->parsed()) return run_verify(verify);
        if (s->parsed()) return run_search(search, *s);
        if (g->parsed()) return run_signature(sig);
        if (c->parsed()) return run_cg(cg);
    } catch (const cgo::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
