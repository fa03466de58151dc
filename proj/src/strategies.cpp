#include "seqrecover/strategies.hpp"

#include <algorithm>

#include "seqrecover/descent.hpp"
#include "seqrecover/errors.hpp"
#include "seqrecover/recovery_dtw.hpp"
#include "seqrecover/recovery_edit.hpp"
#include "seqrecover/recovery_frechet.hpp"

namespace seqrecover {

namespace {

std::vector<Strategy> build() {
    using K = RecoveryLevel;
    const auto A = Mode::Adaptive;
    const auto N = Mode::NonAdaptive;
    const auto edit = DistanceSpec::edit();
    const auto dtw = DistanceSpec::dtw();
    const auto fr = DistanceSpec::frechet();
    return {
        {"edit.adaptive.runs", edit, A, K::Exact, "0", "2k*ceil(log2(n/k)) + k + ceil(log2 n) + 3", false, adaptive_runs_recover},
        {"edit.adaptive.unit", edit, A, K::Exact, "0", "n+2", false, adaptive_unit_recover},
        {"edit.nonadaptive.wildcard", edit, N, K::Exact, "1 (W)", "n+1", false, wildcard_recover},
        {"edit.nonadaptive.binary", edit, N, K::Exact, "0", "(n^2+3n)/2", false, binary_nonadaptive_recover},
        {"dtw.adaptive.half", dtw, A, K::Exact, "1 (1/2)", "n+1", true, dtw_adaptive_recover},
        {"dtw.nonadaptive.equiv2n", dtw, N, K::EquivalenceClass, "0", "2n", true, equivalence_recover},
        {"dtw.nonadaptive.oneextra", dtw, N, K::Exact, "1 (1/2)", "n^2+n", true, one_extra_recover},
        {"dtw.nonadaptive.twoextra", dtw, N, K::Exact, "2 (1/3, 2/5)", "n+2", true,
         [](OracleSession& s) { return two_extra_recover(s); }},
        {"dtw.nonadaptive.fourquery", dtw, N, K::Exact, "n (x/p per prime)", "4", true, four_query_recover},
        {"frechet.nonadaptive.classes", fr, N, K::EquivalenceClass, "0", "2n-1", true, frechet_recover},
        {"cd.edit", edit, A, K::Exact, "0", "(3n+2)n", false, [](OracleSession& s) { return descent_recover(s); }},
        {"cd.dtw", dtw, A, K::ZeroDistance, "0", "(n+1)(2n+3)", true, [](OracleSession& s) { return descent_recover(s); }},
        {"cd.frechet", fr, A, K::EquivalenceClass, "0", "2n+1", true, [](OracleSession& s) { return descent_recover(s); }},
    };
}

bool level_holds(const Strategy& st, const Sequence& hidden, const Sequence& recovered, std::size_t n) {
    switch (st.level) {
        case RecoveryLevel::Exact: return recovered == hidden;
        case RecoveryLevel::EquivalenceClass:
            if (st.spec.kind == DistanceKind::Frechet) return FrechetClass::of(recovered) == FrechetClass::of(hidden);
            if (st.spec.kind == DistanceKind::Dtw) {
                const auto& table = equivalence_table(n);
                return table.signature(recovered) == table.signature(hidden);
            }
            return recovered == hidden;
        case RecoveryLevel::ZeroDistance: return evaluate(st.spec, hidden, recovered).is_zero();
    }
    return false;
}

}  // namespace

const std::vector<Strategy>& strategies() {
    static const std::vector<Strategy> all = build();
    return all;
}

const Strategy& find_strategy(const std::string& id) {
    for (const auto& s : strategies()) {
        if (s.id == id) return s;
    }
    throw DomainError("unknown strategy '" + id + "'");
}

nlohmann::json Outcome::to_json() const {
    auto j = report.to_json();
    j["hidden"] = format(hidden);
    j["n"] = n;
    j["correct"] = correct;
    if (transcript) j["transcript"] = *transcript;
    return j;
}

Outcome run_strategy(const Strategy& strategy, const Sequence& hidden, std::size_t n, bool keep_transcript) {
    if (strategy.nonempty_only && hidden.empty()) throw DomainError(strategy.id + " needs a nonempty hidden input");
    OracleSession session(hidden, strategy.spec, n, strategy.mode);
    Outcome out;
    out.strategy_id = strategy.id;
    out.hidden = hidden;
    out.n = n;
    out.report = strategy.run(session);
    out.correct = level_holds(strategy, hidden, out.report.recovered, n);
    if (keep_transcript) out.transcript = session.transcript_json(strategy.id, true);
    return out;
}

std::vector<Sequence> strategy_inputs(const Strategy& strategy, std::size_t n) {
    return all_binary_sequences(strategy.nonempty_only ? 1 : 0, n);
}

nlohmann::json TableRow::to_json() const {
    return {{"strategy", strategy_id}, {"distance", distance},       {"mode", mode},
            {"level", level},          {"extra_chars", extra_chars}, {"bound", bound_text},
            {"inputs", inputs},        {"max_queries", max_queries}, {"max_bound", max_bound},
            {"failures", failures}};
}

std::vector<TableRow> summary_table(std::size_t n) {
    std::vector<TableRow> rows;
    for (const auto& st : strategies()) {
        TableRow row{st.id, st.spec.name(), st.mode == Mode::Adaptive ? "adaptive" : "non-adaptive", to_string(st.level),
                     st.extra_chars, st.bound_text};
        for (const auto& s : strategy_inputs(st, n)) {
            ++row.inputs;
            try {
                const auto o = run_strategy(st, s, n);
                row.max_queries = std::max(row.max_queries, o.report.queries_used);
                row.max_bound = std::max(row.max_bound, o.report.bound);
                if (!o.ok()) ++row.failures;
            } catch (const Error&) {
                ++row.failures;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace seqrecover
