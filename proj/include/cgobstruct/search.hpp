#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cgobstruct/knots.hpp"
#include "cgobstruct/report.hpp"

namespace cgo {

enum class RankingKey {
    product,        // p1·p2, then the tuple lexicographically
    max_prime,      // largest of the five primes, then product, then lexicographic
    lexicographic,
};

RankingKey parse_ranking_key(const std::string& name);
std::string ranking_key_name(RankingKey key);

struct SearchConfig {
    std::int64_t p_min = 3;
    std::int64_t p_max = 3;
    std::int64_t q_min = 3;
    std::int64_t q_max = 3;
    bool require_algebraic = true;  // p1, p2 > 4·max(q)
    int genus = 1;
    RankingKey ranking = RankingKey::product;
    std::size_t limit = 0;  // stop after this many verified tuples; 0 = no limit
    unsigned threads = 1;
    std::size_t max_witnesses = 1;

    void validate() const;
};

/// Reads `key = value` lines; '#' starts a comment. Keys: p_min, p_max,
/// q_min, q_max, require_algebraic, genus, ranking, limit, threads, witnesses.
/// Unset keys keep the values already in `base`.
SearchConfig parse_search_config(std::istream& in, SearchConfig base = {});

/// All candidate tuples, sorted by the configured ranking key. Each set of
/// q-primes appears with each of its three choices of q1 (q2 < q3).
std::vector<FamilyParameters> enumerate_candidates(const SearchConfig& cfg);

struct SearchRecord {
    FamilyParameters tuple{};
    std::string verdict;  // "verified", "rejected" or "error"
    std::optional<std::string> margin;  // smallest per-prime margin at the tested genus
    std::string error;
    Json report;  // ObstructionReport JSON, absent on error

    Json to_json() const;
    static std::optional<SearchRecord> from_json(const Json& j);
};

struct SearchOutcome {
    std::vector<SearchRecord> verified;  // ranked, truncated to cfg.limit
    std::size_t candidates = 0;
    std::size_t evaluated = 0;  // freshly computed in this run
    std::size_t resumed = 0;    // taken from the checkpoint
    std::size_t errors = 0;
};

/// Evaluates a single family tuple at the configured genus.
SearchRecord evaluate_candidate(const FamilyParameters& tuple, const SearchConfig& cfg);

/// Runs the sweep. With a checkpoint path, finished tuples are appended as
/// JSON lines and reused on the next run.
SearchOutcome search(const SearchConfig& cfg, const std::optional<std::filesystem::path>& checkpoint = {},
                     const std::function<void(const SearchRecord&)>& on_record = {});

}  // namespace cgo
