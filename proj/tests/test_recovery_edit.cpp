#include <doctest.h>

#include "oracles.hpp"
#include "seqrecover/errors.hpp"
#include "seqrecover/recovery_edit.hpp"

using namespace seqrecover;

namespace {

template <class F>
RecoveryReport run(F strategy, const Sequence& hidden, std::size_t n, Mode mode) {
    OracleSession s(hidden, DistanceSpec::edit(), n, mode);
    return strategy(s);
}

std::vector<Rational> answers_for(const Sequence& hidden, const std::vector<Sequence>& plan) {
    std::vector<Rational> out;
    for (const auto& q : plan) out.emplace_back(oracle::edit(hidden, q));
    return out;
}

}  // namespace

TEST_SUITE("recovery_edit") {

TEST_CASE("bound helpers") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(8) == 3);
    CHECK(adaptive_runs_bound(8, 0) == 6);
    CHECK(adaptive_runs_bound(8, 4) == 2 * 4 * 1 + 4 + 3 + 3);
    CHECK(adaptive_runs_bound(10, 3) == 2 * 3 * 2 + 3 + 4 + 3);
}

TEST_CASE("adaptive runs") {
    for (const char* h : {"0010111", "0", "1", "10", "11111111"}) {
        const auto r = run(adaptive_runs_recover, Sequence::binary(h), 8, Mode::Adaptive);
        CHECK(r.recovered == Sequence::binary(h));
        CHECK(r.bound_ok);
        CHECK(r.strategy_id == "edit.adaptive.runs");
    }
    const auto empty = run(adaptive_runs_recover, Sequence{}, 8, Mode::Adaptive);
    CHECK(empty.recovered.empty());
    CHECK(empty.queries_used == 1);
    CHECK(run(adaptive_runs_recover, Sequence::binary("0"), 8, Mode::Adaptive).queries_used <= 6);
}

TEST_CASE("adaptive unit vectors") {
    OracleSession s(Sequence::binary("101"), DistanceSpec::edit(), 5);
    const auto r = adaptive_unit_recover(s);
    CHECK(r.recovered == Sequence::binary("101"));
    CHECK(s.transcript()[1].answer == Rational(2));
    CHECK(s.transcript()[2].answer == Rational(1));
    CHECK(r.queries_used == 5);
    CHECK(run(adaptive_unit_recover, Sequence::binary("000"), 5, Mode::Adaptive).recovered == Sequence::binary("000"));
    CHECK(unit_vector(4, 1) == Sequence::binary("0100"));
}

TEST_CASE("wildcard plan and decoding") {
    const auto plan = wildcard_plan(6);
    REQUIRE(plan.size() == 7);
    CHECK(plan[0].empty());
    CHECK(format(plan[2]) == "1,1,W,W,W,W");
    const auto a = answers_for(Sequence::binary("0101"), plan);
    CHECK(a[0] == Rational(4));
    CHECK(a[1] == Rational(6));
    CHECK(a[2] == Rational(5));
    CHECK(a[3] == Rational(5));
    CHECK(a[4] == Rational(4));
    CHECK(wildcard_decode(6, a) == Sequence::binary("0101"));
    CHECK(wildcard_decode(6, answers_for(Sequence{}, plan)).empty());

    auto bad = a;
    bad[3] = Rational(3);
    CHECK_THROWS_AS(wildcard_decode(6, bad), AdversarialOracle);
    CHECK_THROWS_AS(wildcard_decode(6, std::vector<Rational>(3)), DomainError);
}

TEST_CASE("wildcard answers count prefix ones") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& s : all_binary_sequences(0, n)) {
            std::int64_t ones = 0;
            for (std::size_t j = 1; j <= s.size(); ++j) {
                ones += s[j - 1] == Symbol::one();
                const Sequence q = Sequence::repeat(Symbol::one(), j).append(Symbol::wildcard(), n - j);
                CHECK(edit_distance(s, q) == static_cast<std::int64_t>(n) - ones);
            }
        }
    }
}

TEST_CASE("binary non-adaptive plan") {
    CHECK(binary_nonadaptive_plan(3).size() == 9);
    const auto r = run(binary_nonadaptive_recover, Sequence::binary("11"), 3, Mode::NonAdaptive);
    CHECK(r.recovered == Sequence::binary("11"));
    CHECK(r.queries_used == 9);
    CHECK(run(binary_nonadaptive_recover, Sequence{}, 4, Mode::NonAdaptive).recovered.empty());

    auto bad = answers_for(Sequence::binary("01"), binary_nonadaptive_plan(3));
    bad.back() = Rational(0);
    CHECK_THROWS_AS(binary_nonadaptive_decode(3, bad), AdversarialOracle);
}

TEST_CASE("all edit strategies are exact for n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& h : all_binary_sequences(0, n)) {
            const auto a = run(adaptive_runs_recover, h, n, Mode::Adaptive);
            CHECK(a.recovered == h);
            CHECK(a.queries_used <= adaptive_runs_bound(n, run_count(h)));
            const auto u = run(adaptive_unit_recover, h, n, Mode::Adaptive);
            CHECK(u.recovered == h);
            CHECK(u.queries_used <= n + 2);
            CHECK(run(wildcard_recover, h, n, Mode::NonAdaptive).recovered == h);
            CHECK(run(binary_nonadaptive_recover, h, n, Mode::NonAdaptive).recovered == h);
        }
    }
}

TEST_CASE("mode mismatches are rejected") {
    CHECK_THROWS_AS(run(wildcard_recover, Sequence{}, 3, Mode::Adaptive), SessionError);
    CHECK_THROWS_AS(run(adaptive_unit_recover, Sequence{}, 3, Mode::NonAdaptive), SessionError);
    OracleSession d(Sequence::binary("0"), DistanceSpec::dtw(), 3);
    CHECK_THROWS_AS(adaptive_runs_recover(d), SessionError);
}

}
