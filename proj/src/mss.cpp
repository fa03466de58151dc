#include "seqrecover/mss.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "seqrecover/errors.hpp"

namespace seqrecover {

std::int64_t mss_solve(const MssInstance& inst) {
    if (!inst.feasible()) {
        throw InfeasibleError("cannot pick " + std::to_string(inst.r) + " separated values out of " +
                              std::to_string(inst.values.size()));
    }
    for (auto v : inst.values) {
        if (v <= 0) throw DomainError("MSS values must be positive");
    }
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    const std::size_t r = inst.r;
    // free[k]: best sum with k picks where the previous entry was not picked; taken[k]: it was.
    std::vector<std::int64_t> free(r + 1, inf), taken(r + 1, inf);
    free[0] = 0;
    for (auto v : inst.values) {
        std::vector<std::int64_t> nf(r + 1, inf), nt(r + 1, inf);
        for (std::size_t k = 0; k <= r; ++k) {
            nf[k] = std::min(free[k], taken[k]);
            if (k > 0 && free[k - 1] < inf) nt[k] = free[k - 1] + v;
        }
        free = std::move(nf);
        taken = std::move(nt);
    }
    return std::min(free[r], taken[r]);
}

MssInstance mss_instance(const Sequence& x, std::size_t r) {
    const auto runs = decompose_runs(x);
    MssInstance inst;
    inst.r = r;
    for (std::size_t i = 1; i + 1 < runs.run_count(); ++i) inst.values.push_back(static_cast<std::int64_t>(runs.run_lengths[i]));
    return inst;
}

namespace {

/// Run windows [a, b) into the run-length lists of both sequences.
class OffsetRecursion {
public:
    OffsetRecursion(const RunDecomposition& x, const RunDecomposition& y) : x_(x), y_(y) {}

    std::int64_t solve(std::size_t xa, std::size_t xb, std::size_t ya, std::size_t yb, bool swapped) {
        const auto key = std::make_tuple(xa, xb, ya, yb, swapped);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const std::int64_t v = compute(xa, xb, ya, yb, swapped);
        memo_.emplace(key, v);
        return v;
    }

    std::size_t steps() const noexcept { return steps_; }

private:
    const RunDecomposition& side(bool swapped, bool first) const { return (swapped == first) ? y_ : x_; }

    std::int64_t compute(std::size_t xa, std::size_t xb, std::size_t ya, std::size_t yb, bool swapped) {
        const RunDecomposition& X = side(swapped, true);
        const RunDecomposition& Y = side(swapped, false);
        std::size_t mp = xb - xa;
        std::size_t np = yb - ya;
        if (mp < np) return solve(ya, yb, xa, xb, !swapped);

        auto ch = [](const RunDecomposition& r, std::size_t idx) {
            return idx % 2 == 0 ? r.first_char : flip(r.first_char);
        };
        auto lor = [](const RunDecomposition& r, std::size_t idx) { return static_cast<std::int64_t>(r.run_lengths[idx]); };

        const bool first_eq = ch(X, xa) == ch(Y, ya);
        const bool last_eq = ch(X, xb - 1) == ch(Y, yb - 1);
        if (first_eq && last_eq) {
            MssInstance inst;
            inst.r = (mp - np) / 2;
            for (std::size_t i = xa + 1; i + 1 < xb; ++i) inst.values.push_back(lor(X, i));
            return mss_solve(inst);
        }
        ++steps_;
        if (!first_eq) {
            const std::int64_t a = lor(X, xa);
            const std::int64_t b = lor(Y, ya);
            if (mp == 1 && np == 1) return std::max(a, b);
            if (np == 1) return a + solve(xa + 1, xb, ya, yb, swapped);
            return std::min(a + solve(xa + 1, xb, ya, yb, swapped), b + solve(xa, xb, ya + 1, yb, swapped));
        }
        const std::int64_t a2 = lor(X, xb - 1);
        const std::int64_t b2 = lor(Y, yb - 1);
        if (np == 1) return a2 + solve(xa, xb - 1, ya, yb, swapped);
        return std::min(a2 + solve(xa, xb - 1, ya, yb, swapped), b2 + solve(xa, xb, ya, yb - 1, swapped));
    }

    const RunDecomposition& x_;
    const RunDecomposition& y_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, bool>, std::int64_t> memo_;
    std::size_t steps_ = 0;
};

}  // namespace

MssDtwResult dtw_via_mss_detailed(const Sequence& x, const Sequence& y) {
    if (x.empty() || y.empty()) throw DomainError("DTW distance is undefined for the empty sequence");
    if (!x.is_binary() || !y.is_binary()) throw UnsupportedAlphabet("the MSS reduction needs binary sequences");
    const auto rx = decompose_runs(x);
    const auto ry = decompose_runs(y);
    OffsetRecursion rec(rx, ry);
    MssDtwResult r;
    r.value = rec.solve(0, rx.run_count(), 0, ry.run_count(), false);
    r.offset_steps = rec.steps();
    return r;
}

std::int64_t dtw_via_mss(const Sequence& x, const Sequence& y) { return dtw_via_mss_detailed(x, y).value; }

}  // namespace seqrecover
