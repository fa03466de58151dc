#include "seqrecover/descent.hpp"

#include <algorithm>
#include <set>

#include "seqrecover/errors.hpp"
#include "seqrecover/recovery_frechet.hpp"

namespace seqrecover {

namespace {

std::vector<Sequence> dedup(std::vector<Sequence> candidates, const Sequence& self) {
    std::set<Sequence> seen{self};
    std::vector<Sequence> out;
    for (auto& c : candidates) {
        if (seen.insert(c).second) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Sequence> edit_neighbors(const Sequence& q, std::size_t n) {
    std::vector<Sequence> out;
    const auto& v = q.symbols();
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<Symbol> w = v;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        out.emplace_back(std::move(w));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<Symbol> w = v;
        w[i] = Symbol(flip(w[i].bit()));
        out.emplace_back(std::move(w));
    }
    if (v.size() < n) {
        for (std::size_t i = 0; i <= v.size(); ++i) {
            for (Bit b : {Bit::Zero, Bit::One}) {
                std::vector<Symbol> w = v;
                w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), Symbol(b));
                out.emplace_back(std::move(w));
            }
        }
    }
    return dedup(std::move(out), q);
}

std::vector<Sequence> dtw_neighbors(const Sequence& q, std::size_t n, std::size_t cap) {
    std::vector<Sequence> out;
    if (q.empty()) {
        out.push_back(Sequence{Symbol::zero()});
        out.push_back(Sequence{Symbol::one()});
        return dedup(std::move(out), q);
    }
    const auto runs = decompose_runs(q);
    const auto& len = runs.run_lengths;
    const std::size_t k = runs.run_count();
    if (k >= 2) {
        out.push_back(q.slice(len.front(), q.size()));
        out.push_back(q.slice(0, q.size() - len.back()));
    }
    if (k >= 3) {
        out.push_back(q.slice(len[0] + len[1], q.size()));
        out.push_back(q.slice(0, q.size() - len[k - 1] - len[k - 2]));
    }
    if (k == 1) out.push_back(Sequence{Symbol(flip(runs.first_char))});
    const Symbol head(flip(q.front().bit()));
    const Symbol tail(flip(q.back().bit()));
    for (std::size_t l = 1; l + 2 <= std::max<std::size_t>(n, 3) && q.size() + l <= cap; ++l) {
        out.push_back(Sequence::repeat(head, l).append(q));
        out.push_back(Sequence(q).append(tail, l));
    }
    if (q.size() + 2 <= cap) {
        out.push_back(Sequence{q.front(), head}.append(q));
        out.push_back(Sequence(q).append(tail, 1).append(q.back(), 1));
    }
    return dedup(std::move(out), q);
}

}  // namespace

Neighborhood neighborhood_for(DistanceKind kind, std::size_t n) {
    Neighborhood h;
    h.kind = kind;
    h.n = n;
    switch (kind) {
        case DistanceKind::Edit:
            h.size_bound = 3 * n + 1;
            h.generate = [n](const Sequence& q) { return edit_neighbors(q, n); };
            break;
        case DistanceKind::Dtw: {
            const std::size_t cap = default_query_cap(n);
            h.size_bound = std::max<std::size_t>(2 * n + 2, 8);
            h.generate = [n, cap](const Sequence& q) { return dtw_neighbors(q, n, cap); };
            break;
        }
        case DistanceKind::Frechet: {
            h.size_bound = 2 * n;
            std::vector<Sequence> reps;
            for (const auto& c : frechet_classes(n)) reps.push_back(c.representative());
            h.generate = [reps](const Sequence& q) {
                std::vector<Sequence> out;
                for (const auto& r : reps) {
                    if (r != q) out.push_back(r);
                }
                return out;
            };
            break;
        }
    }
    return h;
}

Sequence default_descent_init(DistanceKind kind) {
    return kind == DistanceKind::Edit ? Sequence{} : Sequence{Symbol::zero()};
}

std::size_t descent_budget(DistanceKind kind, std::size_t n) {
    switch (kind) {
        case DistanceKind::Edit: return (3 * n + 2) * n;
        case DistanceKind::Dtw: return (n + 1) * (2 * n + 3);
        case DistanceKind::Frechet: return 2 * n + 1;
    }
    return 0;
}

RecoveryReport descend(OracleSession& session, const Neighborhood& hood, Sequence init, std::size_t budget,
                       DescentTrace* trace) {
    if (session.mode() != Mode::Adaptive) throw SessionError("descent needs an adaptive session");
    if (session.spec().kind != hood.kind) throw SessionError("neighbourhood does not match the oracle's distance");
    const std::size_t start = session.query_count();
    auto ask = [&](const Sequence& q) {
        if (session.query_count() - start >= budget) throw BudgetExhausted("descent used its budget of " + std::to_string(budget) + " queries");
        return session.query(q);
    };

    Sequence q = std::move(init);
    Rational d = ask(q);
    if (trace) {
        trace->path.push_back(q);
        trace->distances.push_back(d);
    }
    while (!d.is_zero()) {
        bool moved = false;
        for (auto& cand : hood.generate(q)) {
            const Rational dc = ask(cand);
            if (dc < d) {
                q = std::move(cand);
                d = dc;
                moved = true;
                break;
            }
        }
        if (!moved) throw DescentStuck("no neighbour of " + format(q) + " improves on distance " + d.str());
        if (trace) {
            trace->path.push_back(q);
            trace->distances.push_back(d);
        }
    }
    const RecoveryLevel level = hood.kind == DistanceKind::Edit      ? RecoveryLevel::Exact
                                : hood.kind == DistanceKind::Frechet ? RecoveryLevel::EquivalenceClass
                                                                     : RecoveryLevel::ZeroDistance;
    const std::string id = hood.kind == DistanceKind::Edit ? "cd.edit" : hood.kind == DistanceKind::Dtw ? "cd.dtw" : "cd.frechet";
    return make_report(id, std::move(q), level, session.query_count() - start, budget);
}

RecoveryReport descent_recover(OracleSession& session, DescentTrace* trace) {
    const DistanceKind kind = session.spec().kind;
    if (kind == DistanceKind::Dtw && session.spec().p != Exponent(1)) throw SessionError("descent is defined for p = 1 DTW");
    const std::size_t n = session.n();
    return descend(session, neighborhood_for(kind, n), default_descent_init(kind), descent_budget(kind, n), trace);
}

}  // namespace seqrecover
