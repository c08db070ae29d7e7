#include "cgobstruct/search.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "cgobstruct/parallel.hpp"

namespace cgo {

namespace {

std::vector<std::int64_t> odd_primes_in(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n)
        if (is_odd_prime(n)) out.push_back(n);
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw InputError("expected a boolean, got '" + v + "'");
}

std::int64_t parse_int(const std::string& v)
{
    std::size_t used = 0;
    std::int64_t out = 0;
    try {
        out = std::stoll(v, &used);
    } catch (const std::exception&) {
        throw InputError("expected an integer, got '" + v + "'");
    }
    if (used != v.size()) throw InputError("expected an integer, got '" + v + "'");
    return out;
}

}  // namespace

RankingKey parse_ranking_key(const std::string& name)
{
    if (name == "product") return RankingKey::product;
    if (name == "max_prime") return RankingKey::max_prime;
    if (name == "lexicographic" || name == "lex") return RankingKey::lexicographic;
    throw InputError("unknown ranking key '" + name + "' (product, max_prime, lexicographic)");
}

std::string ranking_key_name(RankingKey key)
{
    switch (key) {
    case RankingKey::product:
        return "product";
    case RankingKey::max_prime:
        return "max_prime";
    case RankingKey::lexicographic:
        return "lexicographic";
    }
    return "product";
}

void SearchConfig::validate() const
{
    if (p_min > p_max) throw InputError("empty p range");
    if (q_min > q_max) throw InputError("empty q range");
    if (genus < 1) throw InputError("search genus hypothesis must be >= 1");
}

SearchConfig parse_search_config(std::istream& in, SearchConfig cfg)
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        try {
            if (key == "p_min") cfg.p_min = parse_int(value);
            else if (key == "p_max") cfg.p_max = parse_int(value);
            else if (key == "q_min") cfg.q_min = parse_int(value);
            else if (key == "q_max") cfg.q_max = parse_int(value);
            else if (key == "require_algebraic") cfg.require_algebraic = parse_bool(value);
            else if (key == "genus") cfg.genus = static_cast<int>(parse_int(value));
            else if (key == "ranking") cfg.ranking = parse_ranking_key(value);
            else if (key == "limit") cfg.limit = static_cast<std::size_t>(parse_int(value));
            else if (key == "threads") cfg.threads = static_cast<unsigned>(parse_int(value));
            else if (key == "witnesses") cfg.max_witnesses = static_cast<std::size_t>(parse_int(value));
            else throw InputError("unknown key '" + key + "'");
        } catch (const InputError& e) {
            throw InputError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

std::vector<FamilyParameters> enumerate_candidates(const SearchConfig& cfg)
{
    cfg.validate();
    const auto ps = odd_primes_in(cfg.p_min, cfg.p_max);
    const auto qs = odd_primes_in(cfg.q_min, cfg.q_max);
    std::vector<FamilyParameters> out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            const auto p1 = ps[i];
            const auto p2 = ps[j];
            for (std::size_t a = 0; a < qs.size(); ++a) {
                for (std::size_t b = a + 1; b < qs.size(); ++b) {
                    for (std::size_t c = b + 1; c < qs.size(); ++c) {
                        const std::array<std::int64_t, 3> q{qs[a], qs[b], qs[c]};
                        if (std::find(q.begin(), q.end(), p1) != q.end() || std::find(q.begin(), q.end(), p2) != q.end())
                            continue;
                        if (cfg.require_algebraic && p1 <= 4 * q[2]) continue;  // p2 > p1
                        // q2 < q3 are the two slots not taken by q1
                        out.push_back({p1, p2, q[0], q[1], q[2]});
                        out.push_back({p1, p2, q[1], q[0], q[2]});
                        out.push_back({p1, p2, q[2], q[0], q[1]});
                    }
                }
            }
        }
    }
    auto key = [&](const FamilyParameters& t) {
        const std::int64_t product = t[0] * t[1];
        const std::int64_t biggest = *std::max_element(t.begin(), t.end());
        switch (cfg.ranking) {
        case RankingKey::product:
            return std::make_tuple(product, std::int64_t{0}, t);
        case RankingKey::max_prime:
            return std::make_tuple(biggest, product, t);
        case RankingKey::lexicographic:
            break;
        }
        return std::make_tuple(std::int64_t{0}, std::int64_t{0}, t);
    };
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return out;
}

Json SearchRecord::to_json() const
{
    Json j{{"tuple", tuple}, {"verdict", verdict}, {"margin", margin ? Json(*margin) : Json(nullptr)}};
    if (!error.empty()) j["error"] = error;
    j["report"] = report;
    return j;
}

std::optional<SearchRecord> SearchRecord::from_json(const Json& j)
{
    try {
        SearchRecord r;
        r.tuple = j.at("tuple").get<FamilyParameters>();
        r.verdict = j.at("verdict").get<std::string>();
        if (!j.at("margin").is_null()) r.margin = j.at("margin").get<std::string>();
        if (j.contains("error")) r.error = j.at("error").get<std::string>();
        r.report = j.at("report");
        if (r.verdict != "verified" && r.verdict != "rejected" && r.verdict != "error") return std::nullopt;
        return r;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

SearchRecord evaluate_candidate(const FamilyParameters& tuple, const SearchConfig& cfg)
{
    SearchRecord rec;
    rec.tuple = tuple;
    try {
        VerifyOptions opts;
        opts.threads = 1;
        opts.max_witnesses = cfg.max_witnesses;
        const auto rep = genus_lower_bound(build_family(tuple), cfg.genus, opts);
        std::optional<Rational> margin;
        for (const auto& pr : rep.hypotheses.back().primes)
            if (pr.margin && (!margin || *pr.margin < *margin)) margin = pr.margin;
        if (margin) rec.margin = margin->to_string();
        rec.verdict = rep.lower_bound >= cfg.genus + 1 ? "verified" : "rejected";
        rec.report = report_to_json(rep);
    } catch (const std::exception& e) {
        rec.verdict = "error";
        rec.error = e.what();
        rec.report = nullptr;
    }
    return rec;
}

SearchOutcome search(const SearchConfig& cfg, const std::optional<std::filesystem::path>& checkpoint,
                     const std::function<void(const SearchRecord&)>& on_record)
{
    cfg.validate();
    SearchOutcome outcome;
    const auto candidates = enumerate_candidates(cfg);
    outcome.candidates = candidates.size();

    std::map<FamilyParameters, SearchRecord> done;
    bool torn_tail = false;
    if (checkpoint && std::filesystem::exists(*checkpoint)) {
        std::ifstream in(*checkpoint);
        std::string line;
        while (std::getline(in, line)) {
            // a torn trailing line from an interrupted run is skipped
            torn_tail = in.eof() && !line.empty();
            auto j = Json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            if (auto rec = SearchRecord::from_json(j)) done.insert_or_assign(rec->tuple, std::move(*rec));
        }
    }
    std::ofstream log;
    if (checkpoint) {
        log.open(*checkpoint, std::ios::app);
        if (!log) throw InputError("cannot open checkpoint file " + checkpoint->string());
        if (torn_tail) log << '\n';
    }

    const unsigned workers = resolve_threads(cfg.threads);
    std::size_t next = 0;
    while (next < candidates.size()) {
        if (cfg.limit != 0 && outcome.verified.size() >= cfg.limit) break;
        // bounded batch: at most `workers` candidates in flight
        const std::size_t end = std::min(candidates.size(), next + workers);
        std::vector<std::optional<SearchRecord>> batch(end - next);
        std::vector<std::size_t> todo;
        for (std::size_t i = next; i < end; ++i) {
            auto it = done.find(candidates[i]);
            if (it != done.end()) {
                batch[i - next] = it->second;
                ++outcome.resumed;
            } else {
                todo.push_back(i);
            }
        }
        parallel_chunks(todo.size(), workers, [&](std::size_t, std::size_t b, std::size_t e) {
            for (std::size_t t = b; t < e; ++t) batch[todo[t] - next] = evaluate_candidate(candidates[todo[t]], cfg);
        });
        for (auto i : todo) {
            const auto& rec = *batch[i - next];
            ++outcome.evaluated;
            if (log) {
                log << rec.to_json().dump() << '\n';
                log.flush();
            }
        }
        for (auto& rec : batch) {
            if (rec->verdict == "error") ++outcome.errors;
            if (on_record) on_record(*rec);
            if (rec->verdict == "verified" && (cfg.limit == 0 || outcome.verified.size() < cfg.limit))
                outcome.verified.push_back(std::move(*rec));
        }
        next = end;
    }
    return outcome;
}

}  // namespace cgo
