#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seqrecover/oracle.hpp"

namespace seqrecover {

/// Walks every binary query of length 1..max_len depth-first (0 before 1) and keeps one DP row
/// per input, so each query costs one row update per input. Answers are integers; every
/// distance here is integer-valued on binary pairs.
class QueryScanner {
public:
    QueryScanner(std::vector<Sequence> inputs, DistanceKind kind);

    /// Calls visit(query, answers) for every query of length [min_len, max_len] in depth-first
    /// order. The empty query is visited when min_len == 0 and the kind is edit.
    /// Returning false from visit skips the subtree below that query.
    void scan(std::size_t min_len, std::size_t max_len,
              const std::function<bool(const std::vector<std::uint8_t>&, const std::vector<std::int64_t>&)>& visit) const;

    const std::vector<Sequence>& inputs() const noexcept { return inputs_; }

private:
    std::vector<Sequence> inputs_;
    std::vector<std::vector<std::uint8_t>> bits_;
    DistanceKind kind_;
};

Sequence from_bits(const std::vector<std::uint8_t>& bits);

/// First query (length-major, then lexicographic) with d(s, q) != d(t, q), if any. Binary alphabet.
std::optional<Sequence> brute_distinguish(const Sequence& s, const Sequence& t, DistanceKind kind, std::size_t max_query_len);

/// Same search over an arbitrary finite alphabet of query symbols, using the exact distances.
std::optional<Sequence> brute_distinguish(const Sequence& s, const Sequence& t, const DistanceSpec& spec,
                                          std::size_t max_query_len, const std::vector<Symbol>& alphabet);

/// s = 0 1^3 0 1^3 (0^3 1^3)^c 0 and s' = 0 1^3 0^2 1^3 0^2 1^3 (0^3 1^3)^(c-1) 0.
std::pair<Sequence, Sequence> lowerbound_pair(std::size_t c, std::size_t cap);
/// q = 0 (10)^c 10.
Sequence lowerbound_query(std::size_t c);

struct RunsWindowResult {
    bool ok = true;
    std::size_t distinguishing = 0;
    std::optional<Sequence> counterexample;
};

/// Checks that every binary query up to max_query_len separating the pair has #runs in [2c, 2c + 6].
RunsWindowResult verify_runs_window(std::size_t c, std::size_t max_query_len);

/// Answer vector of s against the plan.
std::vector<Rational> embed(const Sequence& s, const std::vector<Sequence>& plan, const DistanceSpec& spec);

using Partition = std::vector<std::vector<Sequence>>;

/// Sorted groups, each sorted; groups ordered by their first member.
Partition normalize(Partition p);

/// Groups all inputs of length <= n (nonempty for DTW / Frechet) by their answers to every binary
/// query of length <= max_query_len.
Partition class_partition(std::size_t n, DistanceKind kind, std::size_t max_query_len);

/// Groups the same inputs by their answers to a fixed plan.
Partition plan_partition(std::size_t n, const DistanceSpec& spec, const std::vector<Sequence>& plan);

struct VerificationReport {
    std::string claim_id;
    nlohmann::json params;
    nlohmann::json bound;
    bool result = false;
    std::optional<nlohmann::json> counterexample;

    nlohmann::json to_json() const;
};

/// Named suites runnable from the command line. Config keys override suite defaults.
std::vector<std::string> suite_ids();
std::vector<VerificationReport> run_suite(const std::string& id, const std::map<std::string, std::string>& config = {});

}  // namespace seqrecover
