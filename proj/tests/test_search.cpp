#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cgobstruct/search.hpp"

using namespace cgo;

namespace {

SearchConfig region(std::int64_t p_min, std::int64_t p_max, std::int64_t q_min, std::int64_t q_max)
{
    SearchConfig cfg;
    cfg.p_min = p_min;
    cfg.p_max = p_max;
    cfg.q_min = q_min;
    cfg.q_max = q_max;
    return cfg;
}

bool contains(const std::vector<FamilyParameters>& v, const FamilyParameters& t)
{
    return std::find(v.begin(), v.end(), t) != v.end();
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name)
    {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("candidate enumeration")
{
    const auto c = enumerate_candidates(region(83, 103, 11, 17));
    CHECK(contains(c, {83, 103, 17, 11, 13}));
    CHECK(contains(c, {83, 103, 11, 13, 17}));
    CHECK(contains(c, {83, 103, 13, 11, 17}));
    // 5 primes in [83,103] give 10 pairs, one q-set, three slot assignments
    CHECK(c.size() == 30);
    for (const auto& t : c) {
        CHECK(t[0] < t[1]);
        CHECK(t[3] < t[4]);
    }
    // default order: p1·p2 first
    CHECK(c.front()[0] * c.front()[1] == 83 * 89);
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1][0] * c[i - 1][1] <= c[i][0] * c[i][1]);

    auto lex = region(83, 103, 11, 17);
    lex.ranking = RankingKey::lexicographic;
    const auto l = enumerate_candidates(lex);
    CHECK(std::is_sorted(l.begin(), l.end()));
    CHECK(l.size() == c.size());

    auto mp = region(83, 103, 11, 17);
    mp.ranking = RankingKey::max_prime;
    const auto m = enumerate_candidates(mp);
    CHECK(m.front()[1] == 89);
}

TEST_CASE("algebraicity filter")
{
    const auto c = enumerate_candidates(region(67, 71, 17, 23));
    for (const auto& t : c) CHECK(t[0] != 67);  // 67 < 4·17
    auto loose = region(67, 71, 17, 23);
    loose.require_algebraic = false;
    const auto all = enumerate_candidates(loose);
    CHECK(contains(all, {67, 71, 17, 19, 23}));
    CHECK_FALSE(contains(c, {67, 71, 17, 19, 23}));

    // q-primes may not collide with the p-primes
    loose = region(5, 11, 3, 11);
    for (const auto& t : enumerate_candidates(loose))
        for (int i = 2; i < 5; ++i) CHECK((t[i] != t[0] && t[i] != t[1]));
}

TEST_CASE("empty ranges")
{
    CHECK(enumerate_candidates(region(83, 103, 12, 12)).empty());
    CHECK(enumerate_candidates(region(83, 83, 11, 17)).empty());
    CHECK_THROWS_AS(enumerate_candidates(region(83, 103, 17, 11)), InputError);
    auto bad = region(83, 103, 11, 17);
    bad.genus = 0;
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("config file parsing")
{
    std::istringstream in("# sweep\np_min = 83\np_max=103 # upper\n\nq_min = 11\nq_max = 17\nranking = max_prime\n"
                          "require_algebraic = false\nlimit = 2\nthreads = 4\nwitnesses = 2\ngenus = 1\n");
    const auto cfg = parse_search_config(in);
    CHECK(cfg.p_min == 83);
    CHECK(cfg.p_max == 103);
    CHECK(cfg.q_min == 11);
    CHECK(cfg.q_max == 17);
    CHECK(cfg.ranking == RankingKey::max_prime);
    CHECK_FALSE(cfg.require_algebraic);
    CHECK(cfg.limit == 2);
    CHECK(cfg.threads == 4);
    CHECK(cfg.max_witnesses == 2);

    std::istringstream bad_key("p_min = 3\nbogus = 1\n");
    CHECK_THROWS_AS(parse_search_config(bad_key), InputError);
    std::istringstream bad_value("p_min = three\n");
    CHECK_THROWS_AS(parse_search_config(bad_value), InputError);
    std::istringstream no_eq("p_min 3\n");
    CHECK_THROWS_AS(parse_search_config(no_eq), InputError);
    CHECK(parse_ranking_key("lexicographic") == RankingKey::lexicographic);
    CHECK_THROWS_AS(parse_ranking_key("crossings"), InputError);
}

TEST_CASE("records round-trip through JSON")
{
    SearchRecord r;
    r.tuple = {83, 103, 17, 11, 13};
    r.verdict = "verified";
    r.margin = "7";
    r.report = Json{{"knot", "x"}};
    const auto back = SearchRecord::from_json(r.to_json());
    REQUIRE(back.has_value());
    CHECK(back->tuple == r.tuple);
    CHECK(back->verdict == r.verdict);
    CHECK(back->margin == r.margin);
    CHECK(back->report == r.report);
    CHECK_FALSE(SearchRecord::from_json(Json{{"tuple", 3}}).has_value());
}

TEST_CASE("search at g = 2 finds nothing")
{
    auto cfg = region(83, 103, 11, 17);
    cfg.genus = 2;
    cfg.threads = 0;
    const auto out = search(cfg);
    CHECK(out.verified.empty());
    CHECK(out.evaluated == 30);
    CHECK(out.errors == 0);
}

TEST_CASE("search resumes from a checkpoint with an identical result")
{
    auto cfg = region(83, 103, 11, 17);
    cfg.threads = 0;
    const auto full = search(cfg);
    CHECK(full.errors == 0);
    std::vector<FamilyParameters> verified;
    for (const auto& rec : full.verified) verified.push_back(rec.tuple);
    CHECK(contains(verified, {83, 103, 17, 11, 13}));
    CHECK_FALSE(contains(verified, {83, 103, 11, 13, 17}));
    CHECK_FALSE(contains(verified, {83, 103, 13, 11, 17}));
    // a smaller N in the same region also certifies
    REQUIRE_FALSE(verified.empty());
    CHECK(verified.front() == FamilyParameters{83, 89, 17, 11, 13});
    CHECK(verified.size() == 10);

    TempFile ck("cg_obstruct_search_checkpoint.jsonl");
    auto partial = cfg;
    partial.p_max = 97;  // the first part of the same sweep, ordered identically
    const auto first = search(partial, ck.path);
    CHECK(first.resumed == 0);
    // simulate a crash mid-write
    {
        std::ofstream torn(ck.path, std::ios::app);
        torn << "{\"tuple\": [83, 1";
    }
    const auto resumed = search(cfg, ck.path);
    CHECK(resumed.resumed == first.evaluated);
    CHECK(resumed.resumed + resumed.evaluated == resumed.candidates);
    REQUIRE(resumed.verified.size() == full.verified.size());
    for (std::size_t i = 0; i < full.verified.size(); ++i)
        CHECK(resumed.verified[i].to_json().dump() == full.verified[i].to_json().dump());

    // a second resume does no work at all
    const auto again = search(cfg, ck.path);
    CHECK(again.evaluated == 0);
    CHECK(again.resumed == again.candidates);

    // every verified report re-validates
    for (const auto& rec : full.verified) {
        const auto fresh = evaluate_candidate(rec.tuple, cfg);
        CHECK(fresh.verdict == "verified");
        CHECK(fresh.to_json().dump() == rec.to_json().dump());
    }
}

TEST_CASE("limit truncates the ranked list")
{
    auto cfg = region(83, 103, 11, 17);
    cfg.threads = 0;
    cfg.limit = 1;
    const auto out = search(cfg);
    REQUIRE(out.verified.size() == 1);
    CHECK(out.verified.front().tuple == FamilyParameters{83, 89, 17, 11, 13});
}

TEST_CASE("sweep around the second family example")
{
    auto cfg = region(107, 131, 17, 23);
    cfg.threads = 0;
    const auto out = search(cfg);
    std::vector<FamilyParameters> verified;
    for (const auto& rec : out.verified) verified.push_back(rec.tuple);
    CHECK(contains(verified, {107, 131, 23, 17, 19}));
    for (const auto& rec : out.verified) CHECK(rec.report["genus"]["lower_bound"] == 2);
}
