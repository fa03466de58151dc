#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqrecover/oracle.hpp"

namespace seqrecover {

struct Strategy {
    std::string id;
    DistanceSpec spec;
    Mode mode = Mode::Adaptive;
    RecoveryLevel level = RecoveryLevel::Exact;
    std::string extra_chars;  // query symbols beyond {0, 1}
    std::string bound_text;
    bool nonempty_only = false;
    std::function<RecoveryReport(OracleSession&)> run;
};

const std::vector<Strategy>& strategies();
/// Throws DomainError for an unknown id.
const Strategy& find_strategy(const std::string& id);

struct Outcome {
    std::string strategy_id;
    Sequence hidden;
    std::size_t n = 0;
    RecoveryReport report;
    bool correct = false;
    std::optional<nlohmann::json> transcript;

    bool ok() const noexcept { return correct && report.bound_ok; }
    nlohmann::json to_json() const;
};

/// Runs the strategy against one hidden input and checks the result at the strategy's level.
Outcome run_strategy(const Strategy& strategy, const Sequence& hidden, std::size_t n, bool keep_transcript = false);

/// All inputs the strategy accepts for a given n: lengths 0..n, or 1..n when nonempty_only.
std::vector<Sequence> strategy_inputs(const Strategy& strategy, std::size_t n);

struct TableRow {
    std::string strategy_id;
    std::string distance;
    std::string mode;
    std::string level;
    std::string extra_chars;
    std::string bound_text;
    std::size_t inputs = 0;
    std::size_t max_queries = 0;
    std::size_t max_bound = 0;
    std::size_t failures = 0;

    nlohmann::json to_json() const;
};

/// Exhaustive run of every strategy at size n.
std::vector<TableRow> summary_table(std::size_t n);

}  // namespace seqrecover
