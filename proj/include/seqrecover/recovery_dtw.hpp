#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqrecover/distances.hpp"
#include "seqrecover/oracle.hpp"

namespace seqrecover {

/// q1 = 1/2 yields the length, then one query per position: s[1..k] s[k] (1/2)^(l-k-1).
/// Needs a nonempty input.
RecoveryReport dtw_adaptive_recover(OracleSession& session);

/// z_i / o_i families: 2n binary queries of length up to 3n - 2. z_1 = "0" and o_1 = "1".
std::vector<Sequence> equivalence_plan(std::size_t n);

/// Signature of every nonempty input of length <= n under the 2n-query plan, mapped to the
/// lexicographically smallest input sharing it. Built once per n and cached.
class EquivalenceTable {
public:
    explicit EquivalenceTable(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    /// Throws AdversarialOracle when no input has this signature.
    const Sequence& lookup(const std::vector<std::int64_t>& signature) const;
    std::vector<std::int64_t> signature(const Sequence& s) const;

private:
    std::size_t n_;
    std::vector<Sequence> plan_;
    std::vector<std::pair<std::vector<std::int64_t>, Sequence>> classes_;  // sorted by signature
};

const EquivalenceTable& equivalence_table(std::size_t n);
Sequence equivalence_decode(std::size_t n, const std::vector<Rational>& answers);
RecoveryReport equivalence_recover(OracleSession& session);

/// z_{i,k} and o_{i,k}, 1 <= i <= n, 0 <= k <= n - i; every z first (i-major), then every o.
std::vector<Sequence> one_extra_plan(std::size_t n);
Sequence one_extra_decode(std::size_t n, const std::vector<Rational>& answers);
RecoveryReport one_extra_recover(OracleSession& session);

/// The two fractional characters of the n + 2 query plan. `scale` multiplies the residue
/// arithmetic: 1 gives residues {1, 4} mod 5 for the defaults, 2 gives {2, 3}.
struct TwoExtraParams {
    Symbol a = Symbol::frac(1, 3);
    Symbol b = Symbol::frac(2, 5);
    std::int64_t scale = 1;

    /// Throws DomainError unless 0 < b - a < a < b < 1/2, the denominators are coprime and
    /// the two residues are distinct.
    void validate() const;
    /// Residue of a position matched to 0 and to 1.
    std::pair<std::int64_t, std::int64_t> residues() const;
};

/// a^(n-i) b^i for i = 1..n, then "0" and "1".
std::vector<Sequence> two_extra_plan(std::size_t n, const TwoExtraParams& params = {});
Sequence two_extra_decode(std::size_t n, const std::vector<Rational>& answers, const TwoExtraParams& params = {});
RecoveryReport two_extra_recover(OracleSession& session, const TwoExtraParams& params = {});

struct FourQueryParams {
    std::vector<std::int64_t> primes;    // first n odd primes
    std::vector<std::int64_t> residues;  // smallest x with 1/4 < x/p < 1/2
    std::vector<std::size_t> order;      // prime indices sorted by increasing x/p
};

FourQueryParams four_query_params(std::size_t n);
/// "0", "1", q and q' = 1 - q.
std::vector<Sequence> four_query_plan(std::size_t n);
Sequence four_query_decode(std::size_t n, const std::vector<Rational>& answers);
RecoveryReport four_query_recover(OracleSession& session);

/// Matched character per query position, recovered from one answer against the monotone
/// query q (or q' when `complement`). Throws AdversarialOracle when a residue fits neither bit
/// or the reduced denominator is not the full prime product.
std::vector<Bit> four_query_matched(const FourQueryParams& params, const Rational& answer, bool complement);

/// The matching that amplifies the first 0 of s against a length-n query a^(n-i) b^i.
/// Edges are (query index, input index), 0-based.
Matching build_isomorphic_matching(const Sequence& s, std::size_t i, std::size_t n);

/// For a matching where every query position has degree 1, assignment[k] is the input index
/// matched to query position k.
std::vector<std::size_t> to_assignment(const Matching& m, std::size_t query_len);
Matching from_assignment(const std::vector<std::size_t>& assignment);

/// Every matching reachable from `assignment` by one shifting operation.
std::vector<std::vector<std::size_t>> shifting_operations(const std::vector<std::size_t>& assignment, const Sequence& s);

}  // namespace seqrecover
