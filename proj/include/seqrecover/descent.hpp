#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "seqrecover/oracle.hpp"

namespace seqrecover {

/// Deterministic candidate generator for local search.
struct Neighborhood {
    DistanceKind kind = DistanceKind::Edit;
    std::size_t n = 0;
    std::size_t size_bound = 0;
    std::function<std::vector<Sequence>(const Sequence&)> generate;
};

/// Edit: single deletions, substitutions and insertions (length kept <= n).
/// DTW: drop one or two runs at either end, add an opposite run of length 1..max(1, n-2) or a
/// two-run block "ab" at either end; a single-run query may also flip to the opposite character.
/// Frechet: the 2n alternating sequences.
Neighborhood neighborhood_for(DistanceKind kind, std::size_t n);

Sequence default_descent_init(DistanceKind kind);
std::size_t descent_budget(DistanceKind kind, std::size_t n);

struct DescentTrace {
    std::vector<Sequence> path;
    std::vector<Rational> distances;
};

/// First-improvement local search until the oracle answers 0. Throws DescentStuck when no
/// neighbour improves and BudgetExhausted when more than `budget` queries would be needed.
RecoveryReport descend(OracleSession& session, const Neighborhood& hood, Sequence init, std::size_t budget,
                       DescentTrace* trace = nullptr);

/// descend() with the defaults above; ids cd.edit, cd.dtw, cd.frechet.
RecoveryReport descent_recover(OracleSession& session, DescentTrace* trace = nullptr);

}  // namespace seqrecover
