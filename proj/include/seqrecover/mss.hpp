#pragma once

#include <cstdint>
#include <vector>

#include "seqrecover/sequence.hpp"

namespace seqrecover {

/// Min 1-separated sum: pick r pairwise non-adjacent entries of values minimising their sum.
struct MssInstance {
    std::vector<std::int64_t> values;
    std::size_t r = 0;

    bool feasible() const noexcept { return r <= (values.size() + 1) / 2; }
};

/// Throws InfeasibleError when r exceeds ceil(len/2), DomainError on non-positive values.
std::int64_t mss_solve(const MssInstance& inst);

/// MSS over the inner runs of x: values lor(x, 2..#runs-1).
MssInstance mss_instance(const Sequence& x, std::size_t r);

struct MssDtwResult {
    std::int64_t value = 0;
    /// How many times the run-offset recursion was applied before every branch
    /// reached a pair with matching endpoints. Zero when the reduction applies directly.
    std::size_t offset_steps = 0;
};

/// Binary DTW distance through the MSS reduction and the run-offset recursion.
MssDtwResult dtw_via_mss_detailed(const Sequence& x, const Sequence& y);
std::int64_t dtw_via_mss(const Sequence& x, const Sequence& y);

}  // namespace seqrecover
