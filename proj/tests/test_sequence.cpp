#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seqrecover/errors.hpp"
#include "seqrecover/sequence.hpp"

using namespace seqrecover;

TEST_SUITE("sequence_core") {

TEST_CASE("runs of 0010111") {
    const auto r = decompose_runs(Sequence::binary("0010111"));
    CHECK(r.first_char == Bit::Zero);
    CHECK(r.run_lengths == std::vector<std::size_t>{2, 1, 1, 3});
    CHECK(decompose_runs(Sequence{}).run_count() == 0);
    const auto one = decompose_runs(Sequence::binary("1"));
    CHECK(one.first_char == Bit::One);
    CHECK(one.run_lengths == std::vector<std::size_t>{1});
}

TEST_CASE("condensed expressions") {
    CHECK(format(condensed(Sequence::binary("0010111"))) == "0101");
    CHECK(format(condensed(Sequence::binary("0"))) == "0");
    CHECK(format(condensed(Sequence::binary("111000"))) == "10");
    for (const auto& s : all_binary_sequences(1, 8)) {
        const Sequence c = condensed(s);
        CHECK(condensed(c) == c);
        CHECK(run_count(c) == run_count(s));
        CHECK(c.front() == s.front());
        CHECK(c.back() == s.back());
        CHECK(reconstruct(decompose_runs(s)) == s);
    }
}

TEST_CASE("subsequences") {
    const Sequence y = Sequence::binary("0010111");
    CHECK(is_subsequence(Sequence::binary("0111"), y));
    CHECK(is_subsequence(Sequence{}, y));
    CHECK_FALSE(is_subsequence(Sequence::binary("11111"), y));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const Sequence a = oracle::random_binary(rng, 0, 4);
        const Sequence b = oracle::random_binary(rng, 0, 6);
        const Sequence c = oracle::random_binary(rng, 0, 8);
        CHECK(is_subsequence(a, a));
        if (is_subsequence(a, b) && is_subsequence(b, c)) CHECK(is_subsequence(a, c));
    }
}

TEST_CASE("parse and format") {
    const Sequence b = parse("010110");
    CHECK(b.size() == 6);
    CHECK(b.is_binary());
    CHECK(format(b) == "010110");

    const Sequence f = parse("1/3,1/3,2/5");
    CHECK(f.size() == 3);
    CHECK(f[0] == Symbol::frac(1, 3));
    CHECK(f[2] == Symbol::frac(2, 5));
    CHECK(format(f) == "1/3,1/3,2/5");

    const Sequence w = parse("1,W,0");
    CHECK(w == Sequence{Symbol::one(), Symbol::wildcard(), Symbol::zero()});
    CHECK(format(w) == "1,W,0");
    CHECK(parse("").empty());
    CHECK(format(Sequence{}).empty());
}

TEST_CASE("parse errors name the token") {
    CHECK_THROWS_AS(parse("0,2"), ParseError);
    CHECK_THROWS_AS(parse("1,2/4"), ParseError);
    CHECK_THROWS_AS(parse("3/2"), ParseError);
    CHECK_THROWS_AS(parse("0,,1"), ParseError);
    try {
        parse("0,1,x,0");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.token() == "x");
        CHECK(e.position() == 2);
    }
}

TEST_CASE("fractions are reduced and ordered") {
    CHECK(Symbol::frac(2, 6) == Symbol::frac(1, 3));
    CHECK_THROWS_AS(Symbol::frac(0, 3), DomainError);
    CHECK_THROWS_AS(Symbol::frac(3, 3), DomainError);
    CHECK(Symbol::zero() < Symbol::frac(1, 3));
    CHECK(Symbol::frac(1, 3) < Symbol::frac(2, 5));
    CHECK(Symbol::frac(2, 5) < Symbol::one());
}

TEST_CASE("enumeration order") {
    const auto all = all_binary_sequences(0, 2);
    REQUIRE(all.size() == 7);
    CHECK(format(all[0]).empty());
    CHECK(format(all[1]) == "0");
    CHECK(format(all[3]) == "00");
    CHECK(format(all[6]) == "11");
    CHECK(all_binary_sequences(1, 10).size() == 2046);
}

}
