#include "seqrecover/distances.hpp"

#include <algorithm>
#include <limits>

#include "seqrecover/errors.hpp"

namespace seqrecover {

std::int64_t edit_distance(const Sequence& x, const Sequence& y) {
    if (x.has_frac() || y.has_frac()) throw UnsupportedAlphabet("edit distance is defined over {0, 1, W} only");
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    std::vector<std::int64_t> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<std::int64_t>(j);
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = static_cast<std::int64_t>(i);
        for (std::size_t j = 1; j <= n; ++j) {
            const std::int64_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
            cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

namespace {

void check_warpable(const Sequence& s) {
    if (s.empty()) throw DomainError("DTW / Frechet distance is undefined for the empty sequence");
    if (s.has_wildcard()) throw UnsupportedAlphabet("wildcard is only valid under edit distance");
}

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

mpz_class to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

const mpz_class& to_mpz(const mpz_class& v) { return v; }

template <class T>
T power(T base, unsigned p) {
    T r = 1;
    for (unsigned k = 0; k < p; ++k) r *= base;
    return r;
}

template <class T>
T absdiff(const T& a, const T& b) {
    return a < b ? T(b - a) : T(a - b);
}

/// Edge costs for every (i, j), already scaled to integers and raised to the p-th power.
template <class T>
std::vector<T> cost_matrix(const std::vector<T>& xs, const std::vector<T>& ys, Exponent p) {
    std::vector<T> c(xs.size() * ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
            T d = absdiff(xs[i], ys[j]);
            c[i * ys.size() + j] = p.is_infinite() ? d : power(d, p.value());
        }
    }
    return c;
}

template <class T>
T combine(const T& acc, const T& edge, bool infinite) {
    if (infinite) return acc < edge ? edge : acc;
    return acc + edge;
}

/// Full DP table, D[i][j] = best cost of warping x[0..i] with y[0..j].
template <class T>
std::vector<T> dp_table(const std::vector<T>& c, std::size_t m, std::size_t n, bool infinite) {
    std::vector<T> d(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const T& e = c[i * n + j];
            if (i == 0 && j == 0) {
                d[0] = e;
                continue;
            }
            const T* best = nullptr;
            if (i > 0) best = &d[(i - 1) * n + j];
            if (i > 0 && j > 0 && (best == nullptr || d[(i - 1) * n + j - 1] < *best)) best = &d[(i - 1) * n + j - 1];
            if (j > 0 && (best == nullptr || d[i * n + j - 1] < *best)) best = &d[i * n + j - 1];
            d[i * n + j] = combine(*best, e, infinite);
        }
    }
    return d;
}

template <class T>
Matching backtrace(const std::vector<T>& d, std::size_t m, std::size_t n) {
    Matching mt;
    std::size_t i = m - 1;
    std::size_t j = n - 1;
    mt.edges.emplace_back(i, j);
    while (i > 0 || j > 0) {
        std::size_t bi = 0, bj = 0;
        bool have = false;
        auto consider = [&](std::size_t pi, std::size_t pj) {
            if (!have || d[pi * n + pj] < d[bi * n + bj]) {
                bi = pi;
                bj = pj;
                have = true;
            }
        };
        if (i > 0) consider(i - 1, j);
        if (i > 0 && j > 0) consider(i - 1, j - 1);
        if (j > 0) consider(i, j - 1);
        i = bi;
        j = bj;
        mt.edges.emplace_back(i, j);
    }
    std::reverse(mt.edges.begin(), mt.edges.end());
    return mt;
}

/// Common denominator of every symbol, and the scaled integer value of each symbol.
struct Scaling {
    mpz_class denom = 1;
    std::vector<mpz_class> xs, ys;
};

Scaling scale(const Sequence& x, const Sequence& y) {
    Scaling s;
    for (const auto* seq : {&x, &y}) {
        for (const auto& sym : *seq) {
            if (sym.den() != 1) mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), to_mpz(sym.den()).get_mpz_t());
        }
    }
    auto fill = [&](const Sequence& seq, std::vector<mpz_class>& out) {
        out.reserve(seq.size());
        for (const auto& sym : seq) out.push_back(to_mpz(sym.num()) * (s.denom / to_mpz(sym.den())));
    };
    fill(x, s.xs);
    fill(y, s.ys);
    return s;
}

template <class T>
std::vector<T> narrow(const std::vector<mpz_class>& v) {
    std::vector<T> out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(static_cast<T>(z.get_si()));
    return out;
}

enum class Tier { I64, I128, Big };

Tier pick_tier(const Scaling& s, std::size_t m, std::size_t n, Exponent p) {
    if (!s.denom.fits_slong_p()) return Tier::Big;
    const mpz_class edge_max = p.is_infinite() ? s.denom : power(s.denom, p.value());
    const mpz_class total_max = edge_max * to_mpz(static_cast<std::int64_t>(m + n));
    const std::size_t bits = mpz_sizeinbase(total_max.get_mpz_t(), 2);
    if (bits <= 62) return Tier::I64;
    if (bits <= 125) return Tier::I128;
    return Tier::Big;
}

template <class T, class Fn>
auto with_tier(const Scaling& s, Fn&& fn) {
    if constexpr (std::is_same_v<T, mpz_class>) {
        return fn(s.xs, s.ys);
    } else {
        return fn(narrow<T>(s.xs), narrow<T>(s.ys));
    }
}

template <class T>
std::pair<Matching, mpz_class> solve_with(const Scaling& s, Exponent p, bool want_matching) {
    return with_tier<T>(s, [&](const std::vector<T>& xs, const std::vector<T>& ys) {
        const std::size_t m = xs.size();
        const std::size_t n = ys.size();
        const auto c = cost_matrix(xs, ys, p);
        const auto d = dp_table(c, m, n, p.is_infinite());
        Matching mt;
        if (want_matching) mt = backtrace(d, m, n);
        return std::make_pair(std::move(mt), mpz_class(to_mpz(d.back())));
    });
}

std::pair<Matching, Rational> solve(const Sequence& x, const Sequence& y, Exponent p, bool want_matching) {
    check_warpable(x);
    check_warpable(y);
    const Scaling s = scale(x, y);
    std::pair<Matching, mpz_class> r;
    switch (pick_tier(s, x.size(), y.size(), p)) {
        case Tier::I64: r = solve_with<std::int64_t>(s, p, want_matching); break;
        case Tier::I128: r = solve_with<__int128>(s, p, want_matching); break;
        case Tier::Big: r = solve_with<mpz_class>(s, p, want_matching); break;
    }
    const mpz_class den = p.is_infinite() ? s.denom : power(s.denom, p.value());
    return {std::move(r.first), Rational(r.second, den)};
}

}  // namespace

Rational dtw_distance(const Sequence& x, const Sequence& y, Exponent p) {
    return solve(x, y, p, false).second;
}

Rational frechet_distance(const Sequence& x, const Sequence& y) {
    return solve(x, y, Exponent::infinity(), false).second;
}

std::pair<Matching, Rational> optimal_matching(const Sequence& x, const Sequence& y, Exponent p) {
    return solve(x, y, p, true);
}

void Matching::validate(std::size_t query_len, std::size_t input_len) const {
    if (query_len == 0 || input_len == 0) throw InvalidMatching("matching over an empty sequence");
    if (edges.empty()) throw InvalidMatching("matching has no edges");
    std::vector<bool> q_seen(query_len), s_seen(input_len);
    bool first = false, last = false;
    for (const auto& [i, j] : edges) {
        if (i >= query_len || j >= input_len) {
            throw InvalidMatching("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
        }
        q_seen[i] = true;
        s_seen[j] = true;
        first = first || (i == 0 && j == 0);
        last = last || (i + 1 == query_len && j + 1 == input_len);
    }
    if (!first || !last) throw InvalidMatching("matching must contain both corner edges");
    if (std::find(q_seen.begin(), q_seen.end(), false) != q_seen.end() ||
        std::find(s_seen.begin(), s_seen.end(), false) != s_seen.end()) {
        throw InvalidMatching("matching leaves a vertex uncovered");
    }
    for (const auto& [i, j] : edges) {
        for (const auto& [k, l] : edges) {
            if ((i > k && j < l) || (j > l && i < k)) {
                throw InvalidMatching("edges (" + std::to_string(i) + ", " + std::to_string(j) + ") and (" +
                                      std::to_string(k) + ", " + std::to_string(l) + ") cross");
            }
        }
    }
}

std::size_t Matching::query_degree(std::size_t i) const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [i](const auto& e) { return e.first == i; }));
}

std::size_t Matching::input_degree(std::size_t j) const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [j](const auto& e) { return e.second == j; }));
}

Rational matching_cost(const Matching& m, const Sequence& x, const Sequence& y, Exponent p) {
    check_warpable(x);
    check_warpable(y);
    m.validate(x.size(), y.size());
    Rational total = 0;
    for (const auto& [i, j] : m.edges) {
        const Rational d = (x[i].value() - y[j].value()).abs();
        if (p.is_infinite()) {
            if (total < d) total = d;
        } else {
            Rational e = 1;
            for (unsigned k = 0; k < p.value(); ++k) e *= d;
            total += e;
        }
    }
    return total;
}

}  // namespace seqrecover
