#include "seqrecover/recovery_frechet.hpp"

#include <random>

#include "seqrecover/errors.hpp"

namespace seqrecover {

FrechetClass FrechetClass::of(const Sequence& s) {
    if (s.empty()) throw DomainError("the empty sequence has no Frechet class");
    const auto runs = decompose_runs(s);
    return {runs.run_count(), runs.first_char};
}

std::vector<FrechetClass> frechet_classes(std::size_t n) {
    std::vector<FrechetClass> out;
    out.reserve(2 * n);
    for (std::size_t len = 1; len <= n; ++len) {
        out.push_back({len, Bit::Zero});
        out.push_back({len, Bit::One});
    }
    return out;
}

std::vector<Sequence> frechet_plan(std::size_t n) {
    if (n == 0) throw DomainError("n must be at least 1");
    const auto classes = frechet_classes(n);
    std::vector<Sequence> plan;
    plan.reserve(classes.size() - 1);
    for (std::size_t i = 0; i + 1 < classes.size(); ++i) plan.push_back(classes[i].representative());
    return plan;
}

FrechetClass frechet_decode(std::size_t n, const std::vector<Rational>& answers) {
    const auto classes = frechet_classes(n);
    if (answers.size() + 1 != classes.size()) throw DomainError("Frechet plan expects " + std::to_string(classes.size() - 1) + " answers");
    std::optional<std::size_t> zero;
    for (std::size_t i = 0; i < answers.size(); ++i) {
        if (!answers[i].is_zero()) continue;
        if (zero) throw AdversarialOracle("more than one Frechet class at distance zero");
        zero = i;
    }
    return classes[zero.value_or(classes.size() - 1)];
}

RecoveryReport frechet_recover(OracleSession& session) {
    if (session.spec().kind != DistanceKind::Frechet) throw SessionError("strategy needs a Frechet oracle");
    if (session.mode() != Mode::NonAdaptive) throw SessionError("strategy needs a non-adaptive session");
    const std::size_t n = session.n();
    const auto answers = session.submit_plan(frechet_plan(n));
    return make_report("frechet.nonadaptive.classes", frechet_decode(n, answers).representative(),
                       RecoveryLevel::EquivalenceClass, answers.size(), 2 * n - 1);
}

bool extra_chars_useless_check(const Sequence& s, const Sequence& t, std::size_t trials, std::uint64_t seed,
                               std::size_t max_query_len) {
    if (!frechet_distance(s, t).is_zero()) throw DomainError("inputs are not Frechet-equivalent");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len_dist(1, std::max<std::size_t>(max_query_len, 1));
    std::uniform_int_distribution<std::int64_t> den_dist(2, 12);
    std::uniform_int_distribution<int> kind_dist(0, 3);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Sequence q;
        const std::size_t len = len_dist(rng);
        for (std::size_t i = 0; i < len; ++i) {
            const int kind = kind_dist(rng);
            if (kind == 0) {
                q.push_back(Symbol::zero());
            } else if (kind == 1) {
                q.push_back(Symbol::one());
            } else {
                const std::int64_t den = den_dist(rng);
                q.push_back(Symbol::frac(std::uniform_int_distribution<std::int64_t>(1, den - 1)(rng), den));
            }
        }
        if (frechet_distance(s, q) != frechet_distance(t, q)) return false;
    }
    return true;
}

}  // namespace seqrecover
