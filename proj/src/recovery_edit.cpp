#include "seqrecover/recovery_edit.hpp"

#include <optional>

#include "seqrecover/errors.hpp"

namespace seqrecover {

namespace {

void require(const OracleSession& session, Mode mode) {
    if (session.spec().kind != DistanceKind::Edit) throw SessionError("strategy needs an edit-distance oracle");
    if (session.mode() != mode) {
        throw SessionError(mode == Mode::Adaptive ? "strategy needs an adaptive session" : "strategy needs a non-adaptive session");
    }
}

std::int64_t as_int(const Rational& r) {
    if (!r.is_integer() || r.sign() < 0) throw AdversarialOracle("edit distance answer " + r.str() + " is not a nonnegative integer");
    return r.to_int64();
}

/// Subsequence test against an input of known length l.
class SubsequenceProbe {
public:
    SubsequenceProbe(OracleSession& session, std::int64_t length) : session_(session), length_(length) {}

    bool operator()(const Sequence& q) {
        const std::int64_t d = as_int(session_.query(q));
        const std::int64_t gap = length_ - static_cast<std::int64_t>(q.size());
        if (d < gap) throw AdversarialOracle("answer " + std::to_string(d) + " below the length gap for " + format(q));
        return d == gap;
    }

private:
    OracleSession& session_;
    std::int64_t length_;
};

}  // namespace

std::size_t ceil_log2(std::size_t v) {
    std::size_t e = 0;
    while ((std::size_t{1} << e) < v) ++e;
    return e;
}

std::size_t adaptive_runs_bound(std::size_t n, std::size_t k) {
    const std::size_t base = ceil_log2(std::max<std::size_t>(n, 1)) + 3;
    if (k == 0) return base;
    std::size_t e = 0;
    while ((std::size_t{1} << e) * k < n) ++e;
    return 2 * k * e + k + base;
}

Sequence unit_vector(std::size_t len, std::size_t i) {
    Sequence s = Sequence::repeat(Symbol::zero(), len);
    std::vector<Symbol> v(s.begin(), s.end());
    v.at(i) = Symbol::one();
    return Sequence(std::move(v));
}

RecoveryReport adaptive_runs_recover(OracleSession& session) {
    require(session, Mode::Adaptive);
    const std::size_t start = session.query_count();
    const std::int64_t len = as_int(session.query(Sequence{}));
    if (len > static_cast<std::int64_t>(session.n())) throw AdversarialOracle("length answer exceeds n");
    const auto l = static_cast<std::size_t>(len);
    auto finish = [&](Sequence s) {
        const std::size_t k = run_count(s);
        return make_report("edit.adaptive.runs", std::move(s), RecoveryLevel::Exact, session.query_count() - start,
                           adaptive_runs_bound(session.n(), k));
    };
    if (l == 0) return finish(Sequence{});

    SubsequenceProbe is_sub(session, len);

    // Longest alternating subsequence starting with 0.
    std::size_t lo = 0, hi = l;
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if (is_sub(Sequence::alternating(Bit::Zero, mid))) lo = mid;
        else hi = mid - 1;
    }
    Sequence cond = Sequence::alternating(Bit::Zero, lo);
    if (lo + 1 <= l) {
        Sequence with_one = Sequence::alternating(Bit::One, lo + 1);
        if (is_sub(with_one)) cond = std::move(with_one);
    }
    if (cond.empty()) throw AdversarialOracle("no alternating subsequence found for a nonempty input");

    const std::size_t k = cond.size();
    RunDecomposition runs;
    runs.first_char = cond.front().bit();
    std::size_t known = 0;
    for (std::size_t r = 0; r + 1 < k; ++r) {
        const Bit c = cond[r].bit();
        const std::size_t later = k - 1 - r;
        if (l < known + later + 1) throw AdversarialOracle("run layout does not fit the reported length");
        Sequence prefix = reconstruct(runs);
        Sequence tail = Sequence::alternating(flip(c), later);
        auto probe = [&](std::size_t p) { return is_sub(prefix + Sequence::repeat(Symbol(c), p) + tail); };

        std::size_t good = 1;
        std::size_t top = l - known - later;
        while (good < top) {
            const std::size_t p = std::min(2 * good, top);
            if (probe(p)) {
                good = p;
            } else {
                top = p - 1;
                break;
            }
        }
        while (good < top) {
            const std::size_t mid = (good + top + 1) / 2;
            if (probe(mid)) good = mid;
            else top = mid - 1;
        }
        runs.run_lengths.push_back(good);
        known += good;
    }
    if (known >= l) throw AdversarialOracle("no room left for the last run");
    runs.run_lengths.push_back(l - known);
    return finish(reconstruct(runs));
}

RecoveryReport adaptive_unit_recover(OracleSession& session) {
    require(session, Mode::Adaptive);
    const std::size_t start = session.query_count();
    const std::int64_t len = as_int(session.query(Sequence{}));
    if (len > static_cast<std::int64_t>(session.n())) throw AdversarialOracle("length answer exceeds n");
    const auto l = static_cast<std::size_t>(len);
    Sequence s;
    if (l > 0) {
        const std::int64_t base = as_int(session.query(Sequence::repeat(Symbol::zero(), l)));
        for (std::size_t i = 0; i < l; ++i) {
            const std::int64_t diff = base - as_int(session.query(unit_vector(l, i)));
            if (diff > 1) throw AdversarialOracle("unit-vector answer dropped by " + std::to_string(diff));
            s.push_back(diff == 1 ? Symbol::one() : Symbol::zero());
        }
    }
    return make_report("edit.adaptive.unit", std::move(s), RecoveryLevel::Exact, session.query_count() - start,
                       session.n() + 2);
}

std::vector<Sequence> wildcard_plan(std::size_t n) {
    std::vector<Sequence> plan;
    plan.reserve(n + 1);
    plan.emplace_back();
    for (std::size_t j = 1; j <= n; ++j) {
        plan.push_back(Sequence::repeat(Symbol::one(), j).append(Symbol::wildcard(), n - j));
    }
    return plan;
}

Sequence wildcard_decode(std::size_t n, const std::vector<Rational>& answers) {
    if (answers.size() != n + 1) throw DomainError("wildcard plan expects " + std::to_string(n + 1) + " answers");
    const std::int64_t len = as_int(answers[0]);
    if (len > static_cast<std::int64_t>(n)) throw AdversarialOracle("length answer exceeds n");
    Sequence s;
    std::int64_t prev = 0;
    for (std::int64_t j = 1; j <= len; ++j) {
        const std::int64_t ones = static_cast<std::int64_t>(n) - as_int(answers[static_cast<std::size_t>(j)]);
        const std::int64_t bit = ones - prev;
        if (bit != 0 && bit != 1) throw AdversarialOracle("prefix one-count is not monotone at position " + std::to_string(j));
        s.push_back(bit == 1 ? Symbol::one() : Symbol::zero());
        prev = ones;
    }
    return s;
}

RecoveryReport wildcard_recover(OracleSession& session) {
    require(session, Mode::NonAdaptive);
    const std::size_t n = session.n();
    const auto answers = session.submit_plan(wildcard_plan(n));
    return make_report("edit.nonadaptive.wildcard", wildcard_decode(n, answers), RecoveryLevel::Exact, answers.size(), n + 1);
}

std::vector<Sequence> binary_nonadaptive_plan(std::size_t n) {
    std::vector<Sequence> plan;
    plan.reserve((n * n + 3 * n) / 2);
    for (std::size_t l = 1; l <= n; ++l) {
        plan.push_back(Sequence::repeat(Symbol::zero(), l));
        for (std::size_t i = 0; i < l; ++i) plan.push_back(unit_vector(l, i));
    }
    return plan;
}

Sequence binary_nonadaptive_decode(std::size_t n, const std::vector<Rational>& answers) {
    const auto plan = binary_nonadaptive_plan(n);
    if (answers.size() != plan.size()) throw DomainError("binary plan expects " + std::to_string(plan.size()) + " answers");
    std::vector<std::int64_t> observed;
    observed.reserve(answers.size());
    for (const auto& a : answers) observed.push_back(as_int(a));

    auto consistent = [&](const Sequence& candidate) {
        for (std::size_t q = 0; q < plan.size(); ++q) {
            if (edit_distance(candidate, plan[q]) != observed[q]) return false;
        }
        return true;
    };

    std::optional<Sequence> found;
    std::size_t offset = 0;
    for (std::size_t l = 1; l <= n; ++l) {
        const std::int64_t base = observed[offset];
        Sequence candidate;
        bool valid = true;
        for (std::size_t i = 0; i < l && valid; ++i) {
            const std::int64_t diff = base - observed[offset + 1 + i];
            if (diff > 1) valid = false;
            candidate.push_back(diff == 1 ? Symbol::one() : Symbol::zero());
        }
        offset += l + 1;
        if (!valid || !consistent(candidate)) continue;
        if (found) throw TheoremViolation("two inputs share the binary-plan signature: " + format(*found) + " and " + format(candidate));
        found = std::move(candidate);
    }
    if (found) return *found;
    for (std::size_t q = 0; q < plan.size(); ++q) {
        if (observed[q] != static_cast<std::int64_t>(plan[q].size())) throw AdversarialOracle("no input of length <= n matches the answers");
    }
    return Sequence{};
}

RecoveryReport binary_nonadaptive_recover(OracleSession& session) {
    require(session, Mode::NonAdaptive);
    const std::size_t n = session.n();
    const auto answers = session.submit_plan(binary_nonadaptive_plan(n));
    return make_report("edit.nonadaptive.binary", binary_nonadaptive_decode(n, answers), RecoveryLevel::Exact,
                       answers.size(), (n * n + 3 * n) / 2);
}

}  // namespace seqrecover
