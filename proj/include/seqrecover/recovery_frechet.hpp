#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqrecover/oracle.hpp"

namespace seqrecover {

/// All binary inputs of length 1..n fall into 2n classes, one per alternating sequence.
struct FrechetClass {
    std::size_t length = 1;
    Bit start = Bit::Zero;

    Sequence representative() const { return Sequence::alternating(start, length); }
    static FrechetClass of(const Sequence& s);

    friend bool operator==(const FrechetClass&, const FrechetClass&) = default;
};

/// "0", "1", "01", "10", "010", ... (length-major, 0-start first).
std::vector<FrechetClass> frechet_classes(std::size_t n);

/// The first 2n - 1 representatives; the last class is left out.
std::vector<Sequence> frechet_plan(std::size_t n);
FrechetClass frechet_decode(std::size_t n, const std::vector<Rational>& answers);
RecoveryReport frechet_recover(OracleSession& session);

/// Samples random rational queries and checks that s and t get equal Frechet distances.
/// Requires frechet_distance(s, t) == 0.
bool extra_chars_useless_check(const Sequence& s, const Sequence& t, std::size_t trials, std::uint64_t seed = 1,
                               std::size_t max_query_len = 12);

}  // namespace seqrecover
