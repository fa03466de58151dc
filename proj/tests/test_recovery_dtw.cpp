#include <doctest.h>

#include <numeric>
#include <set>
#include <random>

#include "oracles.hpp"
#include "seqrecover/errors.hpp"
#include "seqrecover/recovery_dtw.hpp"

using namespace seqrecover;

namespace {

Sequence B(const char* s) { return Sequence::binary(s); }

std::vector<Rational> answers_for(const Sequence& hidden, const std::vector<Sequence>& plan) {
    std::vector<Rational> out;
    for (const auto& q : plan) out.push_back(oracle::warp(hidden, q, 1));
    return out;
}

template <class F>
RecoveryReport run(F strategy, const Sequence& hidden, std::size_t n, Mode mode) {
    OracleSession s(hidden, DistanceSpec::dtw(), n, mode);
    return strategy(s);
}

}  // namespace

TEST_SUITE("recovery_dtw") {

TEST_CASE("adaptive half-character strategy") {
    OracleSession s(B("01011"), DistanceSpec::dtw(), 8);
    const auto r = dtw_adaptive_recover(s);
    CHECK(s.transcript()[0].query == parse("1/2"));
    CHECK(s.transcript()[0].answer == Rational(5, 2));
    CHECK(s.transcript()[1].answer == Rational(2));
    CHECK(r.recovered == B("01011"));
    CHECK(r.queries_used <= 9);
    CHECK_THROWS_AS(run(dtw_adaptive_recover, Sequence{}, 4, Mode::Adaptive), DomainError);
}

TEST_CASE("equivalence plan") {
    const auto plan = equivalence_plan(4);
    REQUIRE(plan.size() == 8);
    CHECK(format(plan[0]) == "0");
    CHECK(format(plan[1]) == "00001111");
    CHECK(format(plan[2]) == "000010000");
    CHECK(format(plan[3]) == "0000101111");
    CHECK(format(plan[4]) == "1");
    CHECK(format(plan[6]) == "111101111");
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto p = equivalence_plan(n);
        CHECK(p.size() == 2 * n);
        std::set<Sequence> cond;
        for (const auto& q : p) {
            CHECK(q.size() <= default_query_cap(n));
            cond.insert(condensed(q));
        }
        CHECK(cond.size() == 2 * n);
        for (const auto& s : all_binary_sequences(1, n)) CHECK(cond.count(condensed(s)) == 1);
    }
}

TEST_CASE("equivalence classes") {
    const auto& t = equivalence_table(6);
    CHECK(&t == &equivalence_table(6));
    CHECK(t.signature(B("010110")) == t.signature(B("011010")));
    const auto w = run(equivalence_recover, B("011010"), 6, Mode::NonAdaptive);
    CHECK(w.recovered == B("010110"));
    CHECK(w.level == RecoveryLevel::EquivalenceClass);
    CHECK(w.queries_used == 12);
    const auto sig0 = t.signature(B("0"));
    CHECK(sig0[0] == 0);
    CHECK(sig0[6] == 1);
    CHECK(t.lookup(sig0) == B("0"));
    CHECK_THROWS_AS(t.lookup(std::vector<std::int64_t>(12, 99)), AdversarialOracle);

    std::set<std::vector<std::int64_t>> sigs;
    for (const auto& s : all_binary_sequences(1, 6)) sigs.insert(t.signature(s));
    CHECK(sigs.size() == t.class_count());
}

TEST_CASE("one extra character") {
    const auto plan = one_extra_plan(4);
    CHECK(plan.size() == 20);
    CHECK(format(plan[0]) == "0");
    CHECK(format(plan[1]) == "0,1/2");
    const auto a = answers_for(B("0110"), plan);
    // z_{3,0} = "010" sits after the i = 1 block (4 queries) and the i = 2 block (3 queries).
    CHECK(format(plan[7]) == "010");
    CHECK(a[7] == Rational(0));
    CHECK(one_extra_decode(4, a) == B("0110"));
    auto bad = a;
    bad[7] = Rational(1);
    CHECK_THROWS_AS(one_extra_decode(4, bad), AdversarialOracle);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& h : all_binary_sequences(1, n)) {
            const auto r = run(one_extra_recover, h, n, Mode::NonAdaptive);
            CHECK(r.recovered == h);
            CHECK(r.queries_used == n * n + n);
        }
    }
}

TEST_CASE("two extra characters: residues") {
    const TwoExtraParams p;
    CHECK(p.residues() == std::pair<std::int64_t, std::int64_t>{1, 4});
    TwoExtraParams p2;
    p2.scale = 2;
    CHECK(p2.residues() == std::pair<std::int64_t, std::int64_t>{2, 3});
    // 15 |c - v| mod 5 for the four character pairs.
    CHECK(Rational(15) * Rational(1, 3) == Rational(5));
    CHECK(Rational(15) * Rational(2, 5) == Rational(6));
    CHECK(Rational(15) * Rational(2, 3) == Rational(10));
    CHECK(Rational(15) * Rational(3, 5) == Rational(9));

    TwoExtraParams wrong;
    wrong.b = Symbol::frac(1, 4);
    CHECK_THROWS_AS(wrong.validate(), DomainError);
    TwoExtraParams shared;
    shared.a = Symbol::frac(2, 7);
    shared.b = Symbol::frac(3, 7);
    CHECK_THROWS_AS(shared.validate(), DomainError);
}

TEST_CASE("two extra characters: recovery") {
    const auto plan = two_extra_plan(3);
    REQUIRE(plan.size() == 5);
    CHECK(format(plan[0]) == "1/3,1/3,2/5");
    CHECK(format(plan[2]) == "2/5,2/5,2/5");
    CHECK(two_extra_decode(6, answers_for(B("000"), two_extra_plan(6))) == B("000"));
    CHECK(two_extra_decode(6, answers_for(B("11"), two_extra_plan(6))) == B("11"));

    TwoExtraParams scaled;
    scaled.scale = 2;
    TwoExtraParams other;
    other.a = Symbol::frac(2, 7);
    other.b = Symbol::frac(3, 8);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& h : all_binary_sequences(1, n)) {
            CHECK(run([](OracleSession& x) { return two_extra_recover(x); }, h, n, Mode::NonAdaptive).recovered == h);
            OracleSession s2(h, DistanceSpec::dtw(), n, Mode::NonAdaptive);
            CHECK(two_extra_recover(s2, scaled).recovered == h);
            OracleSession s3(h, DistanceSpec::dtw(), n, Mode::NonAdaptive);
            CHECK(two_extra_recover(s3, other).recovered == h);
        }
    }
    auto bad = answers_for(B("0110"), two_extra_plan(6));
    bad[2] += Rational(1, 15);
    CHECK_THROWS_AS(two_extra_decode(6, bad), AdversarialOracle);
}

TEST_CASE("four queries") {
    const auto p = four_query_params(5);
    CHECK(p.primes == std::vector<std::int64_t>{3, 5, 7, 11, 13});
    for (std::size_t t = 0; t < 5; ++t) {
        CHECK(4 * p.residues[t] > p.primes[t]);
        CHECK(2 * p.residues[t] < p.primes[t]);
        CHECK((4 * (p.residues[t] - 1) <= p.primes[t] || 2 * (p.residues[t] - 1) >= p.primes[t]));
    }
    for (std::size_t k = 1; k < 5; ++k) {
        const auto a = p.order[k - 1], b = p.order[k];
        CHECK(Rational(p.residues[a], p.primes[a]) < Rational(p.residues[b], p.primes[b]));
    }
    const auto plan = four_query_plan(5);
    REQUIRE(plan.size() == 4);
    for (std::size_t k = 0; k < 5; ++k) CHECK(plan[2][k].value() + plan[3][k].value() == Rational(1));

    mpz_class product = 1;
    for (auto prime : p.primes) product *= prime;
    for (const auto& h : all_binary_sequences(1, 5)) {
        const auto a = answers_for(h, plan);
        if (h.count(Symbol::zero()) && h.count(Symbol::one())) {
            mpz_class g;
            const mpz_class u = a[2].numerator();
            mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), product.get_mpz_t());
            CHECK(g == 1);
            CHECK(a[2].denominator() == product);
            const auto m = four_query_matched(p, a[2], false);
            Sequence ms;
            for (Bit b : m) ms.push_back(b);
            CHECK(run_count(ms) == run_count(h));
        }
        CHECK(four_query_decode(5, a) == h);
    }
    auto bad = answers_for(B("0110"), plan);
    bad[2] += Rational(1, 3);
    CHECK_THROWS_AS(four_query_decode(5, bad), AdversarialOracle);
}

TEST_CASE("isomorphic matchings") {
    const Matching m = build_isomorphic_matching(B("1001"), 2, 6);
    m.validate(6, 4);
    const auto a = to_assignment(m, 6);
    CHECK(a == std::vector<std::size_t>{0, 1, 1, 1, 2, 3});
    CHECK(from_assignment(a) == m);
    CHECK_THROWS_AS(build_isomorphic_matching(B("000"), 1, 4), DomainError);
    CHECK_THROWS_AS(build_isomorphic_matching(B("01"), 0, 4), DomainError);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + t % 9;
        Sequence s = oracle::random_binary(rng, 2, n);
        if (!s.count(Symbol::zero()) || !s.count(Symbol::one())) continue;
        const auto plan = two_extra_plan(n);
        for (std::size_t i = 1; i <= n; ++i) {
            const Matching mi = build_isomorphic_matching(s, i, n);
            mi.validate(n, s.size());
            CHECK(mi.edges == build_isomorphic_matching(s, 1, n).edges);
            const Rational cost = matching_cost(mi, plan[i - 1], s);
            CHECK(cost == oracle::warp(plan[i - 1], s, 1));
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (s[j] == Symbol::one()) CHECK(mi.input_degree(j) == 1);
            }
            for (const auto& shifted : shifting_operations(to_assignment(mi, n), s)) {
                const Matching ms = from_assignment(shifted);
                ms.validate(n, s.size());
                CHECK(matching_cost(ms, plan[i - 1], s) >= cost);
            }
        }
    }
}

TEST_CASE("shifting operations move surplus to a later zero") {
    const Sequence s = B("0110");
    const std::vector<std::size_t> a{0, 0, 0, 1, 2, 3};
    const auto shifts = shifting_operations(a, s);
    REQUIRE(shifts.size() == 1);
    CHECK(shifts[0] == std::vector<std::size_t>{0, 0, 1, 2, 3, 3});
    CHECK(shifting_operations({0, 1, 2, 3}, s).empty());
}

}
