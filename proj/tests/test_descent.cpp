#include <doctest.h>

#include <set>

#include "seqrecover/descent.hpp"
#include "seqrecover/errors.hpp"

using namespace seqrecover;

namespace {
Sequence B(const char* s) { return Sequence::binary(s); }

RecoveryReport descend_on(const Sequence& hidden, DistanceSpec spec, std::size_t n, DescentTrace* trace = nullptr) {
    OracleSession s(hidden, spec, n);
    return descent_recover(s, trace);
}
}  // namespace

TEST_SUITE("coordinate_descent") {

TEST_CASE("edit neighbourhood") {
    const auto h = neighborhood_for(DistanceKind::Edit, 4);
    const auto nb = h.generate(B("01"));
    const std::set<Sequence> got(nb.begin(), nb.end());
    CHECK(got.size() == nb.size());
    for (const char* s : {"1", "0", "11", "00", "001", "011", "010", "101"}) CHECK(got.count(B(s)) == 1);
    CHECK(got.count(B("01")) == 0);
    CHECK(nb.size() <= 3 * 2 + 1 + 1);
    for (const auto& q : all_binary_sequences(0, 4)) CHECK(h.generate(q).size() <= 3 * q.size() + 2);
    for (const auto& q : all_binary_sequences(4, 4)) {
        for (const auto& c : h.generate(q)) CHECK(c.size() <= 4);
    }
}

TEST_CASE("DTW neighbourhood size") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto h = neighborhood_for(DistanceKind::Dtw, n);
        CHECK(h.size_bound == std::max<std::size_t>(2 * n + 2, 8));
        for (const auto& q : all_binary_sequences(1, std::min<std::size_t>(n + 2, 9))) {
            const auto nb = h.generate(q);
            CHECK(nb.size() <= h.size_bound);
            for (const auto& c : nb) {
                CHECK(c.size() <= default_query_cap(n));
                CHECK_FALSE(c.empty());
            }
        }
    }
}

TEST_CASE("Frechet neighbourhood") {
    const auto h = neighborhood_for(DistanceKind::Frechet, 4);
    CHECK(h.generate(B("0")).size() == 7);
    CHECK(h.generate(B("0011")).size() == 8);
    CHECK(h.size_bound == 8);
}

TEST_CASE("edit descent is exact") {
    DescentTrace trace;
    const auto r = descend_on(B("0110"), DistanceSpec::edit(), 4, &trace);
    CHECK(r.recovered == B("0110"));
    CHECK(r.level == RecoveryLevel::Exact);
    CHECK(trace.path.front().empty());
    for (std::size_t i = 1; i < trace.distances.size(); ++i) CHECK(trace.distances[i] + Rational(1) <= trace.distances[i - 1]);
}

TEST_CASE("DTW descent reaches zero distance") {
    const auto r = descend_on(B("1011"), DistanceSpec::dtw(), 4);
    CHECK(dtw_distance(B("1011"), r.recovered).is_zero());
    CHECK(r.level == RecoveryLevel::ZeroDistance);
    CHECK(dtw_distance(B("1011"), B("101")).is_zero());
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& h : all_binary_sequences(1, n)) {
            DescentTrace trace;
            const auto rr = descend_on(h, DistanceSpec::dtw(), n, &trace);
            CHECK(dtw_distance(h, rr.recovered).is_zero());
            CHECK(rr.bound_ok);
            for (std::size_t i = 1; i < trace.distances.size(); ++i) CHECK(trace.distances[i] + Rational(1) <= trace.distances[i - 1]);
        }
    }
}

TEST_CASE("Frechet descent") {
    for (const auto& h : all_binary_sequences(1, 6)) {
        const auto r = descend_on(h, DistanceSpec::frechet(), 6);
        CHECK(condensed(r.recovered) == condensed(h));
        CHECK(r.queries_used <= 2 * 6 + 1);
    }
}

TEST_CASE("stuck and budget errors") {
    Neighborhood none{DistanceKind::Edit, 3, 0, [](const Sequence&) { return std::vector<Sequence>{}; }};
    OracleSession s(B("01"), DistanceSpec::edit(), 3);
    CHECK_THROWS_AS(descend(s, none, Sequence{}, 10), DescentStuck);
    OracleSession t(B("0101"), DistanceSpec::edit(), 4);
    CHECK_THROWS_AS(descend(t, neighborhood_for(DistanceKind::Edit, 4), Sequence{}, 3), BudgetExhausted);
    OracleSession u(B("01"), DistanceSpec::dtw(), 3, Mode::NonAdaptive);
    CHECK_THROWS_AS(descent_recover(u), SessionError);
    OracleSession v(B("01"), DistanceSpec::dtw(Exponent(2)), 3);
    CHECK_THROWS_AS(descent_recover(v), SessionError);
}

TEST_CASE("budgets") {
    CHECK(descent_budget(DistanceKind::Edit, 10) == 320);
    CHECK(descent_budget(DistanceKind::Dtw, 8) == 171);
    CHECK(descent_budget(DistanceKind::Frechet, 8) == 17);
    CHECK(default_descent_init(DistanceKind::Edit).empty());
    CHECK(default_descent_init(DistanceKind::Dtw) == B("0"));
}

}
