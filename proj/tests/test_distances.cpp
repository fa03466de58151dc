#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seqrecover/distances.hpp"
#include "seqrecover/errors.hpp"

using namespace seqrecover;

namespace {
Sequence B(const char* s) { return Sequence::binary(s); }
}

TEST_SUITE("exact_distances") {

TEST_CASE("edit distance examples") {
    CHECK(edit_distance(B("0101"), Sequence{}) == 4);
    CHECK(edit_distance(B("10"), B("01")) == 2);
    CHECK(edit_distance(B("0101"), parse("1,1,W,W,W,W")) == 5);
    CHECK_THROWS_AS(edit_distance(B("01"), parse("1/2")), UnsupportedAlphabet);
}

TEST_CASE("edit distance matches the recursive oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 3000; ++t) {
        Sequence x = oracle::random_binary(rng, 0, 9);
        Sequence y = oracle::random_binary(rng, 0, 9);
        if (t % 3 == 0) y.append(Symbol::wildcard(), t % 4);
        CHECK(edit_distance(x, y) == oracle::edit(x, y));
        CHECK(edit_distance(x, y) == edit_distance(y, x));
    }
}

TEST_CASE("edit distance is a metric on short binary sequences") {
    const auto all = all_binary_sequences(0, 4);
    for (const auto& a : all) {
        for (const auto& b : all) {
            const auto ab = edit_distance(a, b);
            CHECK((ab == 0) == (a == b));
            for (const auto& c : all) CHECK(edit_distance(a, c) <= ab + edit_distance(b, c));
        }
    }
}

TEST_CASE("triangle inequality up to length 6, sampled third point") {
    const auto all = all_binary_sequences(0, 6);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 20000; ++t) {
        const auto& a = all[pick(rng)];
        const auto& b = all[pick(rng)];
        const auto& c = all[pick(rng)];
        CHECK(edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c));
    }
}

TEST_CASE("length gap equals edit distance iff subsequence") {
    const auto all = all_binary_sequences(0, 7);
    for (std::size_t i = 0; i < all.size(); i += 3) {
        for (std::size_t j = 0; j < all.size(); j += 5) {
            const auto& x = all[i];
            const auto& y = all[j];
            const auto gap = static_cast<std::int64_t>(x.size() > y.size() ? x.size() - y.size() : y.size() - x.size());
            const bool sub = x.size() <= y.size() ? is_subsequence(x, y) : is_subsequence(y, x);
            CHECK((edit_distance(x, y) == gap) == sub);
        }
    }
}

TEST_CASE("DTW examples") {
    CHECK(dtw_distance(B("010110"), B("010")) == Rational(1));
    CHECK(dtw_distance(B("000"), B("1")) == Rational(3));
    CHECK(dtw_distance(B("01"), B("0011")) == Rational(0));
    CHECK(dtw_distance(B("01011"), parse("1/2")) == Rational(5, 2));
    CHECK(dtw_distance(B("101"), B("1011")) == Rational(0));
    CHECK_THROWS_AS(dtw_distance(Sequence{}, B("0")), DomainError);
    CHECK_THROWS_AS(dtw_distance(B("0"), Sequence{}), DomainError);
    CHECK_THROWS_AS(dtw_distance(B("0"), parse("W")), UnsupportedAlphabet);
}

TEST_CASE("Frechet examples") {
    CHECK(frechet_distance(B("1"), B("11")) == Rational(0));
    CHECK(frechet_distance(B("010"), B("101")) == Rational(1));
    CHECK(frechet_distance(B("0110"), B("0110")) == Rational(0));
    CHECK(dtw_distance(B("010"), B("101"), Exponent::infinity()) == frechet_distance(B("010"), B("101")));
}

TEST_CASE("p-DTW and Frechet match the recursive oracle on rational sequences") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1500; ++t) {
        const Sequence x = oracle::random_numeric(rng, 1, 7);
        const Sequence y = oracle::random_numeric(rng, 1, 7);
        for (unsigned p : {0u, 1u, 2u, 3u}) {
            const Exponent e = p == 0 ? Exponent::infinity() : Exponent(p);
            const Rational d = dtw_distance(x, y, e);
            CHECK(d == oracle::warp(x, y, p));
            CHECK(d == dtw_distance(y, x, e));
        }
        CHECK(frechet_distance(x, y) == oracle::warp(x, y, 0));
    }
}

TEST_CASE("large exponents take the wide integer paths") {
    const Sequence x = parse("1/97,89/97,1/3,0,1");
    const Sequence y = parse("96/97,1,2/89,1/2");
    for (unsigned p : {5u, 9u, 14u, 25u}) CHECK(dtw_distance(x, y, Exponent(p)) == oracle::warp(x, y, p));
}

TEST_CASE("binary p-DTW equals the p = 1 value") {
    for (const auto& x : all_binary_sequences(1, 5)) {
        for (const auto& y : all_binary_sequences(1, 5)) {
            const Rational d1 = dtw_distance(x, y);
            CHECK(d1.is_integer());
            CHECK(dtw_distance(x, y, Exponent(2)) == d1);
            CHECK(dtw_distance(x, y, Exponent(3)) == d1);
        }
    }
}

TEST_CASE("Frechet on binary pairs is 0 exactly for equal condensed forms") {
    for (const auto& x : all_binary_sequences(1, 7)) {
        for (const auto& y : all_binary_sequences(1, 5)) {
            const Rational d = frechet_distance(x, y);
            CHECK((d == Rational(0) || d == Rational(1)));
            CHECK(d.is_zero() == (condensed(x) == condensed(y)));
        }
    }
}

TEST_CASE("optimal matchings") {
    auto [m, cost] = optimal_matching(B("0"), B("000"));
    CHECK(cost == Rational(0));
    CHECK(m.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}, {0, 2}});

    auto [m2, c2] = optimal_matching(B("010110"), B("010"));
    CHECK(c2 == Rational(1));
    m2.validate(6, 3);
    CHECK(matching_cost(m2, B("010110"), B("010")) == Rational(1));

    const Matching hand{{{0, 0}, {0, 1}, {1, 2}, {1, 3}}};
    CHECK(matching_cost(hand, B("01"), B("0011")) == Rational(0));
    CHECK(hand.query_degree(0) == 2);
    CHECK(hand.input_degree(3) == 1);

    std::mt19937_64 rng(9);
    for (int t = 0; t < 1000; ++t) {
        const Sequence x = oracle::random_numeric(rng, 1, 8);
        const Sequence y = oracle::random_numeric(rng, 1, 8);
        const Exponent p(1 + t % 3);
        auto [mm, c] = optimal_matching(x, y, p);
        mm.validate(x.size(), y.size());
        CHECK(c == dtw_distance(x, y, p));
        CHECK(matching_cost(mm, x, y, p) == c);
    }
}

TEST_CASE("invalid matchings are rejected") {
    const Sequence x = B("01"), y = B("011");
    CHECK_THROWS_AS(matching_cost(Matching{{{0, 0}, {1, 2}}}, x, y), InvalidMatching);
    CHECK_THROWS_AS(matching_cost(Matching{{{0, 0}, {0, 2}, {1, 1}}}, x, y), InvalidMatching);
    CHECK_THROWS_AS(matching_cost(Matching{{{0, 0}, {1, 1}}}, x, y), InvalidMatching);
    CHECK_THROWS_AS(matching_cost(Matching{{{0, 0}, {0, 2}, {1, 1}, {1, 2}}}, x, y), InvalidMatching);
}

}
