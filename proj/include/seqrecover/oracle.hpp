#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqrecover/distances.hpp"
#include "seqrecover/rational.hpp"
#include "seqrecover/sequence.hpp"

namespace seqrecover {

enum class DistanceKind { Edit, Dtw, Frechet };

struct DistanceSpec {
    DistanceKind kind = DistanceKind::Edit;
    Exponent p{1};

    static DistanceSpec edit() { return {DistanceKind::Edit, Exponent(1)}; }
    static DistanceSpec dtw(Exponent p = Exponent(1)) { return {DistanceKind::Dtw, p}; }
    static DistanceSpec frechet() { return {DistanceKind::Frechet, Exponent::infinity()}; }

    /// "edit", "dtw", "dtw2", ..., "frechet".
    std::string name() const;
    static DistanceSpec parse(const std::string& name);

    friend bool operator==(const DistanceSpec&, const DistanceSpec&) = default;
};

/// Throws UnsupportedAlphabet when q uses a symbol the cost model cannot price.
void check_alphabet(const DistanceSpec& spec, const Sequence& q);

/// d(s, q) under the given cost model.
Rational evaluate(const DistanceSpec& spec, const Sequence& s, const Sequence& q);

enum class Mode { Adaptive, NonAdaptive };

std::size_t default_query_cap(std::size_t n);

struct TranscriptEntry {
    Sequence query;
    Rational answer;
};

/// Holds a hidden binary input and answers distance queries against it.
class OracleSession {
public:
    OracleSession(Sequence hidden, DistanceSpec spec, std::size_t n, Mode mode = Mode::Adaptive,
                  std::optional<std::size_t> query_cap = std::nullopt);

    /// Adaptive mode only.
    Rational query(const Sequence& q);
    /// Non-adaptive mode only, at most once. The whole plan is validated before any answer is computed.
    std::vector<Rational> submit_plan(const std::vector<Sequence>& plan);

    std::size_t n() const noexcept { return n_; }
    std::size_t query_cap() const noexcept { return cap_; }
    std::size_t query_count() const noexcept { return transcript_.size(); }
    Mode mode() const noexcept { return mode_; }
    const DistanceSpec& spec() const noexcept { return spec_; }
    const std::vector<TranscriptEntry>& transcript() const noexcept { return transcript_; }
    /// For auditing reports; strategies never read it.
    const Sequence& hidden() const noexcept { return hidden_; }

    nlohmann::json transcript_json(const std::string& strategy, bool include_hidden) const;

private:
    void validate(const Sequence& q) const;

    Sequence hidden_;
    DistanceSpec spec_;
    std::size_t n_;
    Mode mode_;
    std::size_t cap_;
    bool plan_submitted_ = false;
    std::vector<TranscriptEntry> transcript_;
};

enum class RecoveryLevel { Exact, EquivalenceClass, ZeroDistance };

std::string to_string(RecoveryLevel level);

struct RecoveryReport {
    Sequence recovered;
    std::size_t queries_used = 0;
    RecoveryLevel level = RecoveryLevel::Exact;
    std::size_t bound = 0;
    bool bound_ok = false;
    std::string strategy_id;

    nlohmann::json to_json() const;
};

RecoveryReport make_report(std::string strategy_id, Sequence recovered, RecoveryLevel level, std::size_t queries_used,
                           std::size_t bound);

}  // namespace seqrecover
