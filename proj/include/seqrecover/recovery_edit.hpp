#pragma once

#include <cstddef>
#include <vector>

#include "seqrecover/oracle.hpp"

namespace seqrecover {

/// ceil(log2(v)) for v >= 1.
std::size_t ceil_log2(std::size_t v);

/// 2k*ceil(log2(n/k)) + k + ceil(log2 n) + 3, where k = #runs of the input.
std::size_t adaptive_runs_bound(std::size_t n, std::size_t k);

/// Finds the condensed form by binary search over alternating subsequences, then
/// line-searches every run length. Subsequence tests use d(s, q) = |s| - |q|.
RecoveryReport adaptive_runs_recover(OracleSession& session);

/// phi, 0^l, then the l unit vectors; at most n + 2 queries.
RecoveryReport adaptive_unit_recover(OracleSession& session);

/// phi followed by 1^j W^(n-j) for j = 1..n.
std::vector<Sequence> wildcard_plan(std::size_t n);
Sequence wildcard_decode(std::size_t n, const std::vector<Rational>& answers);
RecoveryReport wildcard_recover(OracleSession& session);

/// For each length l = 1..n: 0^l followed by the l unit vectors of that length.
std::vector<Sequence> binary_nonadaptive_plan(std::size_t n);
/// Decodes one candidate per length and keeps the one whose re-simulated answers match.
/// The empty input is reported when no candidate matches and every answer equals its query length.
Sequence binary_nonadaptive_decode(std::size_t n, const std::vector<Rational>& answers);
RecoveryReport binary_nonadaptive_recover(OracleSession& session);

/// 0^(i) 1 0^(len-i-1), 0-based position i.
Sequence unit_vector(std::size_t len, std::size_t i);

}  // namespace seqrecover
