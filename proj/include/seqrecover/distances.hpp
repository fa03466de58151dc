#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqrecover/rational.hpp"
#include "seqrecover/sequence.hpp"

namespace seqrecover {

/// The p of p-DTW. Infinity turns the sum into a max, i.e. the discrete Frechet distance.
class Exponent {
public:
    constexpr Exponent() = default;
    constexpr explicit Exponent(unsigned p) : p_(p) {}
    static constexpr Exponent infinity() { return Exponent(0U); }

    constexpr bool is_infinite() const noexcept { return p_ == 0; }
    /// Only meaningful when finite.
    constexpr unsigned value() const noexcept { return p_; }
    std::string str() const { return is_infinite() ? "inf" : std::to_string(p_); }

    friend constexpr bool operator==(Exponent, Exponent) = default;

private:
    unsigned p_ = 1;  // 0 encodes infinity
};

/// Levenshtein distance over {0, 1, W}. Fractions raise UnsupportedAlphabet.
std::int64_t edit_distance(const Sequence& x, const Sequence& y);

/// Exact p-DTW cost. For finite p this is the minimum over warpings of the sum of
/// p-th powers of |x_i - y_j| (no root taken); for infinite p it is the Frechet distance.
/// Both operands must be non-empty and free of wildcards.
Rational dtw_distance(const Sequence& x, const Sequence& y, Exponent p = Exponent(1));
Rational frechet_distance(const Sequence& x, const Sequence& y);

/// Edges (i, j) with i indexing the first sequence (the query) and j the second, 0-based.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Throws InvalidMatching unless the edges cover both sides, include both corners
    /// and are jointly monotone.
    void validate(std::size_t query_len, std::size_t input_len) const;
    /// Number of edges touching query index i / input index j.
    std::size_t query_degree(std::size_t i) const;
    std::size_t input_degree(std::size_t j) const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// A cost-minimal matching from the DP backtrace. Ties prefer the predecessor that
/// advanced only the query index, then the diagonal, then the input index.
std::pair<Matching, Rational> optimal_matching(const Sequence& x, const Sequence& y, Exponent p = Exponent(1));

Rational matching_cost(const Matching& m, const Sequence& x, const Sequence& y, Exponent p = Exponent(1));

}  // namespace seqrecover
