#include "seqrecover/oracle.hpp"

#include <algorithm>

#include "seqrecover/errors.hpp"

namespace seqrecover {

std::string DistanceSpec::name() const {
    switch (kind) {
        case DistanceKind::Edit: return "edit";
        case DistanceKind::Frechet: return "frechet";
        case DistanceKind::Dtw:
            if (p.is_infinite()) return "frechet";
            return p.value() == 1 ? "dtw" : "dtw" + std::to_string(p.value());
    }
    return "?";
}

DistanceSpec DistanceSpec::parse(const std::string& name) {
    if (name == "edit") return edit();
    if (name == "frechet") return frechet();
    if (name == "dtw") return dtw();
    if (name.rfind("dtw", 0) == 0 && name.size() > 3 &&
        std::all_of(name.begin() + 3, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        const unsigned long p = std::stoul(name.substr(3));
        if (p == 0 || p > 64) throw DomainError("p-DTW exponent out of range: " + name);
        return dtw(Exponent(static_cast<unsigned>(p)));
    }
    throw DomainError("unknown distance '" + name + "' (expected edit, dtw, dtw<p> or frechet)");
}

void check_alphabet(const DistanceSpec& spec, const Sequence& q) {
    if (spec.kind == DistanceKind::Edit) {
        if (q.has_frac()) throw UnsupportedAlphabet("fractional symbols are not allowed under edit distance");
    } else if (q.has_wildcard()) {
        throw UnsupportedAlphabet("the wildcard is only allowed under edit distance");
    }
}

Rational evaluate(const DistanceSpec& spec, const Sequence& s, const Sequence& q) {
    switch (spec.kind) {
        case DistanceKind::Edit: return Rational(edit_distance(s, q));
        case DistanceKind::Dtw: return dtw_distance(s, q, spec.p);
        case DistanceKind::Frechet: return frechet_distance(s, q);
    }
    throw DomainError("unknown distance kind");
}

std::size_t default_query_cap(std::size_t n) {
    const std::size_t tight = n >= 1 ? 3 * n - 2 : 0;
    return std::max(2 * n + 4, tight);
}

OracleSession::OracleSession(Sequence hidden, DistanceSpec spec, std::size_t n, Mode mode,
                             std::optional<std::size_t> query_cap)
    : hidden_(std::move(hidden)), spec_(spec), n_(n), mode_(mode), cap_(query_cap.value_or(default_query_cap(n))) {
    if (!hidden_.is_binary()) throw UnsupportedAlphabet("hidden input must be binary");
    if (hidden_.size() > n_) {
        throw DomainError("hidden input has length " + std::to_string(hidden_.size()) + " > n = " + std::to_string(n_));
    }
}

void OracleSession::validate(const Sequence& q) const {
    if (q.size() > cap_) {
        throw SessionError("query of length " + std::to_string(q.size()) + " exceeds the cap " + std::to_string(cap_));
    }
    check_alphabet(spec_, q);
}

Rational OracleSession::query(const Sequence& q) {
    if (mode_ != Mode::Adaptive) throw SessionError("non-adaptive session: submit the whole plan instead");
    validate(q);
    Rational a = evaluate(spec_, hidden_, q);
    transcript_.push_back({q, a});
    return a;
}

std::vector<Rational> OracleSession::submit_plan(const std::vector<Sequence>& plan) {
    if (mode_ != Mode::NonAdaptive) throw SessionError("adaptive session: use query()");
    if (plan_submitted_) throw SessionError("query plan already submitted");
    for (const auto& q : plan) validate(q);
    plan_submitted_ = true;
    std::vector<Rational> answers;
    answers.reserve(plan.size());
    for (const auto& q : plan) {
        answers.push_back(evaluate(spec_, hidden_, q));
        transcript_.push_back({q, answers.back()});
    }
    return answers;
}

nlohmann::json OracleSession::transcript_json(const std::string& strategy, bool include_hidden) const {
    nlohmann::json j;
    j["strategy"] = strategy;
    j["distance"] = spec_.name();
    j["n"] = n_;
    if (include_hidden) j["hidden"] = format(hidden_);
    auto& qs = j["queries"] = nlohmann::json::array();
    for (const auto& e : transcript_) qs.push_back({{"seq", format(e.query)}, {"answer", e.answer.str()}});
    return j;
}

std::string to_string(RecoveryLevel level) {
    switch (level) {
        case RecoveryLevel::Exact: return "exact";
        case RecoveryLevel::EquivalenceClass: return "equivalence-class";
        case RecoveryLevel::ZeroDistance: return "zero-distance";
    }
    return "?";
}

nlohmann::json RecoveryReport::to_json() const {
    return {{"strategy", strategy_id},
            {"recovered", format(recovered)},
            {"queries_used", queries_used},
            {"level", to_string(level)},
            {"bound", bound},
            {"bound_ok", bound_ok}};
}

RecoveryReport make_report(std::string strategy_id, Sequence recovered, RecoveryLevel level, std::size_t queries_used,
                           std::size_t bound) {
    RecoveryReport r;
    r.strategy_id = std::move(strategy_id);
    r.recovered = std::move(recovered);
    r.level = level;
    r.queries_used = queries_used;
    r.bound = bound;
    r.bound_ok = queries_used <= bound;
    return r;
}

}  // namespace seqrecover
