#include "seqrecover/recovery_dtw.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

#include "seqrecover/errors.hpp"

namespace seqrecover {

namespace {

void require(const OracleSession& session, Mode mode) {
    if (session.spec() != DistanceSpec::dtw()) throw SessionError("strategy needs a DTW (p = 1) oracle");
    if (session.mode() != mode) {
        throw SessionError(mode == Mode::Adaptive ? "strategy needs an adaptive session" : "strategy needs a non-adaptive session");
    }
}

const Symbol kHalf = Symbol::frac(1, 2);

std::int64_t as_count(const Rational& r) {
    if (!r.is_integer() || r.sign() < 0) throw AdversarialOracle("expected a nonnegative integer answer, got " + r.str());
    return r.to_int64();
}

void expect_answers(const std::vector<Rational>& answers, std::size_t count, const char* plan) {
    if (answers.size() != count) {
        throw DomainError(std::string(plan) + " plan expects " + std::to_string(count) + " answers, got " +
                          std::to_string(answers.size()));
    }
}

}  // namespace

RecoveryReport dtw_adaptive_recover(OracleSession& session) {
    require(session, Mode::Adaptive);
    const std::size_t start = session.query_count();
    const Rational half_len = session.query(Sequence{kHalf});
    const std::int64_t len = as_count(half_len * Rational(2));
    if (len < 1 || len > static_cast<std::int64_t>(session.n())) throw AdversarialOracle("length answer out of range");
    const auto l = static_cast<std::size_t>(len);

    auto floor_of = [&](std::size_t tail) { return Rational(static_cast<std::int64_t>(tail), 2); };
    auto probe = [&](const Sequence& q, std::size_t tail) {
        const Rational d = session.query(q);
        if (d < floor_of(tail)) throw AdversarialOracle("answer " + d.str() + " below the half-character floor");
        return d == floor_of(tail);
    };

    Sequence s;
    const Sequence first = Sequence{Symbol::zero()}.append(kHalf, l - 1);
    s.push_back(probe(first, l - 1) ? Symbol::zero() : Symbol::one());
    for (std::size_t k = 1; k < l; ++k) {
        const std::size_t tail = l - k - 1;
        Sequence q = s;
        q.push_back(s.back());
        q.append(kHalf, tail);
        const Bit prev = s.back().bit();
        s.push_back(probe(q, tail) ? prev : flip(prev));
    }
    return make_report("dtw.adaptive.half", std::move(s), RecoveryLevel::Exact, session.query_count() - start,
                       session.n() + 1);
}

std::vector<Sequence> equivalence_plan(std::size_t n) {
    const Sequence zeros = Sequence::repeat(Symbol::zero(), n);
    const Sequence ones = Sequence::repeat(Symbol::one(), n);
    auto family = [&](Bit c) {
        const Sequence& same = c == Bit::Zero ? zeros : ones;
        const Sequence& other = c == Bit::Zero ? ones : zeros;
        std::vector<Sequence> out;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == 1) {
                out.push_back(Sequence{Symbol(c)});
            } else if (i % 2 == 1) {
                const std::size_t m = (i - 1) / 2;
                // c^n c' (c c')^(m-1) c^n
                out.push_back(same + Sequence::alternating(flip(c), 2 * m - 1) + same);
            } else {
                const std::size_t m = i / 2;
                // c^n (c' c)^(m-1) c'^n
                out.push_back(same + Sequence::alternating(flip(c), 2 * (m - 1)) + other);
            }
        }
        return out;
    };
    auto plan = family(Bit::Zero);
    auto o = family(Bit::One);
    plan.insert(plan.end(), o.begin(), o.end());
    return plan;
}

EquivalenceTable::EquivalenceTable(std::size_t n) : n_(n), plan_(equivalence_plan(n)) {
    std::map<std::vector<std::int64_t>, Sequence> groups;
    for (auto& s : all_binary_sequences(1, n)) {
        auto sig = signature(s);
        auto it = groups.find(sig);
        if (it == groups.end()) groups.emplace(std::move(sig), std::move(s));
        else if (s < it->second) it->second = std::move(s);
    }
    classes_.assign(std::make_move_iterator(groups.begin()), std::make_move_iterator(groups.end()));
}

std::vector<std::int64_t> EquivalenceTable::signature(const Sequence& s) const {
    std::vector<std::int64_t> sig;
    sig.reserve(plan_.size());
    for (const auto& q : plan_) sig.push_back(dtw_distance(s, q).to_int64());
    return sig;
}

const Sequence& EquivalenceTable::lookup(const std::vector<std::int64_t>& sig) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), sig,
                               [](const auto& entry, const auto& key) { return entry.first < key; });
    if (it == classes_.end() || it->first != sig) throw AdversarialOracle("no input of length <= n has this signature");
    return it->second;
}

const EquivalenceTable& equivalence_table(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<EquivalenceTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<EquivalenceTable>(n);
    return *slot;
}

Sequence equivalence_decode(std::size_t n, const std::vector<Rational>& answers) {
    expect_answers(answers, 2 * n, "equivalence");
    std::vector<std::int64_t> sig;
    sig.reserve(answers.size());
    for (const auto& a : answers) sig.push_back(as_count(a));
    return equivalence_table(n).lookup(sig);
}

RecoveryReport equivalence_recover(OracleSession& session) {
    require(session, Mode::NonAdaptive);
    const std::size_t n = session.n();
    const auto answers = session.submit_plan(equivalence_plan(n));
    return make_report("dtw.nonadaptive.equiv2n", equivalence_decode(n, answers), RecoveryLevel::EquivalenceClass,
                       answers.size(), 2 * n);
}

namespace {

/// Condensed prefix of z_{i,k} / o_{i,k}: the alternating sequence of length i starting with c.
Sequence one_extra_query(Bit c, std::size_t i, std::size_t k) {
    return Sequence::alternating(c, i).append(kHalf, k);
}

/// Offset of block (family, i) inside the plan; k indexes within the block.
std::size_t one_extra_index(std::size_t n, Bit c, std::size_t i) {
    // Block i (1-based) holds n - i + 1 queries; blocks 1..i-1 hold sum_{j<i} (n - j + 1).
    std::size_t before = 0;
    for (std::size_t j = 1; j < i; ++j) before += n - j + 1;
    const std::size_t family = (n * n + n) / 2;
    return (c == Bit::Zero ? 0 : family) + before;
}

}  // namespace

std::vector<Sequence> one_extra_plan(std::size_t n) {
    std::vector<Sequence> plan;
    plan.reserve(n * n + n);
    for (Bit c : {Bit::Zero, Bit::One}) {
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k + i <= n; ++k) plan.push_back(one_extra_query(c, i, k));
        }
    }
    return plan;
}

Sequence one_extra_decode(std::size_t n, const std::vector<Rational>& answers) {
    expect_answers(answers, n * n + n, "one-extra");
    std::optional<std::pair<Bit, std::size_t>> zero;
    for (Bit c : {Bit::Zero, Bit::One}) {
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t base = one_extra_index(n, c, i);
            for (std::size_t k = 0; k + i <= n; ++k) {
                if (!answers[base + k].is_zero()) continue;
                if (zero || k != 0) throw AdversarialOracle("zero answers do not single out one condensed form");
                zero = std::make_pair(c, i);
            }
        }
    }
    if (!zero) throw AdversarialOracle("no query has zero distance");
    const auto [c, t] = *zero;

    // suffix[i] = total length of runs i+1..t, read off the first k with answer k/2.
    std::vector<std::size_t> suffix(t + 1, 0);
    for (std::size_t i = 1; i <= t; ++i) {
        const std::size_t base = one_extra_index(n, c, i);
        std::optional<std::size_t> found;
        for (std::size_t k = 0; k + i <= n && !found; ++k) {
            const Rational floor(static_cast<std::int64_t>(k), 2);
            if (answers[base + k] < floor) throw AdversarialOracle("answer below the half-character floor");
            if (answers[base + k] == floor) found = k;
        }
        if (!found) throw AdversarialOracle("run suffix length not found for run " + std::to_string(i));
        suffix[i] = *found;
    }
    RunDecomposition runs;
    runs.first_char = c;
    runs.run_lengths.assign(t, 0);
    for (std::size_t i = 2; i <= t; ++i) {
        if (suffix[i - 1] <= suffix[i]) throw AdversarialOracle("run suffix lengths are not decreasing");
        runs.run_lengths[i - 1] = suffix[i - 1] - suffix[i];
    }

    const auto plan = one_extra_plan(n);
    std::optional<Sequence> match;
    for (std::size_t first = 1; first + suffix[1] <= n; ++first) {
        runs.run_lengths[0] = first;
        Sequence candidate = reconstruct(runs);
        bool ok = true;
        for (std::size_t q = 0; q < plan.size() && ok; ++q) ok = dtw_distance(candidate, plan[q]) == answers[q];
        if (!ok) continue;
        if (match) throw TheoremViolation("two inputs share the one-extra signature: " + format(*match) + ", " + format(candidate));
        match = std::move(candidate);
    }
    if (!match) throw AdversarialOracle("no first-run length reproduces the answers");
    return *match;
}

RecoveryReport one_extra_recover(OracleSession& session) {
    require(session, Mode::NonAdaptive);
    const std::size_t n = session.n();
    const auto answers = session.submit_plan(one_extra_plan(n));
    return make_report("dtw.nonadaptive.oneextra", one_extra_decode(n, answers), RecoveryLevel::Exact, answers.size(),
                       n * n + n);
}

void TwoExtraParams::validate() const {
    if (a.kind() != Symbol::Kind::Frac || b.kind() != Symbol::Kind::Frac) throw DomainError("a and b must be fractions");
    const Rational ra = a.value(), rb = b.value();
    const Rational half(1, 2);
    if (!(Rational(0) < rb - ra && rb - ra < ra && ra < rb && rb < half)) {
        throw DomainError("need 0 < b - a < a < b < 1/2, got a = " + ra.str() + ", b = " + rb.str());
    }
    if (std::gcd(a.den(), b.den()) != 1) throw DomainError("denominators of a and b must be coprime");
    if (scale <= 0) throw DomainError("scale must be positive");
    const auto [r0, r1] = residues();
    if (r0 == r1) throw DomainError("a and b do not separate the two bits modulo the denominator of b");
}

std::pair<std::int64_t, std::int64_t> TwoExtraParams::residues() const {
    const std::int64_t m = b.den();
    const std::int64_t r0 = static_cast<std::int64_t>((static_cast<__int128>(scale) * a.den() % m * b.num()) % m);
    const std::int64_t r1 = (m - r0) % m;
    return {r0, r1};
}

std::vector<Sequence> two_extra_plan(std::size_t n, const TwoExtraParams& params) {
    params.validate();
    std::vector<Sequence> plan;
    plan.reserve(n + 2);
    for (std::size_t i = 1; i <= n; ++i) plan.push_back(Sequence::repeat(params.a, n - i).append(params.b, i));
    plan.push_back(Sequence{Symbol::zero()});
    plan.push_back(Sequence{Symbol::one()});
    return plan;
}

Sequence two_extra_decode(std::size_t n, const std::vector<Rational>& answers, const TwoExtraParams& params) {
    params.validate();
    expect_answers(answers, n + 2, "two-extra");
    const std::int64_t ones = as_count(answers[n]);       // d(s, "0")
    const std::int64_t zeros = as_count(answers[n + 1]);  // d(s, "1")
    if (ones + zeros > static_cast<std::int64_t>(n)) throw AdversarialOracle("character counts exceed n");
    if (ones == 0) return Sequence::repeat(Symbol::zero(), static_cast<std::size_t>(zeros));
    if (zeros == 0) return Sequence::repeat(Symbol::one(), static_cast<std::size_t>(ones));

    const mpz_class modulus(static_cast<long>(params.b.den()));
    const mpz_class factor = mpz_class(static_cast<long>(params.scale)) * params.a.den() * params.b.den();
    const auto [r0, r1] = params.residues();

    // amplified[j]: bit matched to query position j in the amplified-first-zero matching.
    std::vector<Bit> amplified(n);
    mpz_class prev = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const mpq_class scaled = answers[i - 1].raw() * factor;
        if (scaled.get_den() != 1) throw AdversarialOracle("answer " + answers[i - 1].str() + " has an unexpected denominator");
        mpz_class coef = scaled.get_num() % modulus;
        if (coef < 0) coef += modulus;
        mpz_class diff = (coef - prev) % modulus;
        if (diff < 0) diff += modulus;
        prev = coef;
        const std::int64_t r = diff.get_si();
        Bit bit;
        if (r == r0) bit = Bit::Zero;
        else if (r == r1) bit = Bit::One;
        else throw AdversarialOracle("residue " + std::to_string(r) + " at position " + std::to_string(n - i + 1) + " is neither bit");
        amplified[n - i] = bit;
    }

    const auto len = static_cast<std::size_t>(ones + zeros);
    const std::size_t surplus = n - len;
    const auto u = static_cast<std::size_t>(std::find(amplified.begin(), amplified.end(), Bit::Zero) - amplified.begin());
    if (u == n || u + surplus >= n) throw AdversarialOracle("amplified block does not fit");
    Sequence s;
    for (std::size_t j = 0; j < u; ++j) s.push_back(Bit::One);
    for (std::size_t j = u; j <= u + surplus; ++j) {
        if (amplified[j] != Bit::Zero) throw AdversarialOracle("amplified first zero is interrupted");
    }
    for (std::size_t j = u + surplus; j < n; ++j) s.push_back(amplified[j]);
    if (static_cast<std::int64_t>(s.count(Symbol::zero())) != zeros || static_cast<std::int64_t>(s.count(Symbol::one())) != ones) {
        throw AdversarialOracle("decoded sequence disagrees with the character counts");
    }
    return s;
}

RecoveryReport two_extra_recover(OracleSession& session, const TwoExtraParams& params) {
    require(session, Mode::NonAdaptive);
    const std::size_t n = session.n();
    const auto answers = session.submit_plan(two_extra_plan(n, params));
    return make_report("dtw.nonadaptive.twoextra", two_extra_decode(n, answers, params), RecoveryLevel::Exact,
                       answers.size(), n + 2);
}

FourQueryParams four_query_params(std::size_t n) {
    FourQueryParams p;
    for (std::int64_t c = 3; p.primes.size() < n; c += 2) {
        bool prime = true;
        for (std::int64_t d = 3; d * d <= c; d += 2) {
            if (c % d == 0) {
                prime = false;
                break;
            }
        }
        if (!prime) continue;
        p.primes.push_back(c);
        std::int64_t x = 1;
        while (!(4 * x > c && 2 * x < c)) ++x;
        p.residues.push_back(x);
    }
    p.order.resize(n);
    std::iota(p.order.begin(), p.order.end(), 0);
    std::sort(p.order.begin(), p.order.end(), [&](std::size_t i, std::size_t j) {
        return static_cast<__int128>(p.residues[i]) * p.primes[j] < static_cast<__int128>(p.residues[j]) * p.primes[i];
    });
    return p;
}

std::vector<Sequence> four_query_plan(std::size_t n) {
    const auto p = four_query_params(n);
    Sequence q, qc;
    for (std::size_t t : p.order) {
        q.push_back(Symbol::frac(p.residues[t], p.primes[t]));
        qc.push_back(Symbol::frac(p.primes[t] - p.residues[t], p.primes[t]));
    }
    return {Sequence{Symbol::zero()}, Sequence{Symbol::one()}, q, qc};
}

std::vector<Bit> four_query_matched(const FourQueryParams& params, const Rational& answer, bool complement) {
    mpz_class product = 1;
    for (auto prime : params.primes) product *= prime;
    const mpz_class u = answer.numerator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), product.get_mpz_t());
    if (g != 1 || answer.denominator() != product) {
        throw AdversarialOracle("answer " + answer.str() + " is not a reduced fraction over the prime product");
    }
    std::vector<Bit> matched;
    matched.reserve(params.order.size());
    for (std::size_t t : params.order) {
        const mpz_class p(static_cast<long>(params.primes[t]));
        const mpz_class rest = product / p;
        const mpz_class x(static_cast<long>(params.residues[t]));
        auto residue = [&](const mpz_class& v) {
            mpz_class r = v % p;
            if (r < 0) r += p;
            return r;
        };
        const mpz_class got = residue(u);
        // |0 - x/p| carries x, |1 - x/p| carries p - x; the complement query swaps them.
        const mpz_class for_zero = residue((complement ? p - x : x) * rest);
        const mpz_class for_one = residue((complement ? x : p - x) * rest);
        if (got == for_zero) matched.push_back(Bit::Zero);
        else if (got == for_one) matched.push_back(Bit::One);
        else throw AdversarialOracle("residue modulo " + p.get_str() + " fits neither bit");
    }
    return matched;
}

Sequence four_query_decode(std::size_t n, const std::vector<Rational>& answers) {
    expect_answers(answers, 4, "four-query");
    const std::int64_t ones = as_count(answers[0]);
    const std::int64_t zeros = as_count(answers[1]);
    if (ones + zeros > static_cast<std::int64_t>(n)) throw AdversarialOracle("character counts exceed n");
    if (ones == 0) return Sequence::repeat(Symbol::zero(), static_cast<std::size_t>(zeros));
    if (zeros == 0) return Sequence::repeat(Symbol::one(), static_cast<std::size_t>(ones));

    const auto params = four_query_params(n);
    Sequence m, mc;
    for (Bit b : four_query_matched(params, answers[2], false)) m.push_back(b);
    for (Bit b : four_query_matched(params, answers[3], true)) mc.push_back(b);
    const auto a = decompose_runs(m);
    const auto b = decompose_runs(mc);
    if (a.run_count() != b.run_count() || a.first_char != b.first_char) {
        throw AdversarialOracle("matched strings of q and q' have different block structure");
    }
    RunDecomposition out;
    out.first_char = a.first_char;
    Bit c = a.first_char;
    for (std::size_t i = 0; i < a.run_count(); ++i, c = flip(c)) {
        out.run_lengths.push_back(c == Bit::One ? a.run_lengths[i] : b.run_lengths[i]);
    }
    Sequence s = reconstruct(out);
    if (static_cast<std::int64_t>(s.count(Symbol::zero())) != zeros || static_cast<std::int64_t>(s.count(Symbol::one())) != ones) {
        throw AdversarialOracle("decoded sequence disagrees with the character counts");
    }
    return s;
}

RecoveryReport four_query_recover(OracleSession& session) {
    require(session, Mode::NonAdaptive);
    const std::size_t n = session.n();
    const auto answers = session.submit_plan(four_query_plan(n));
    return make_report("dtw.nonadaptive.fourquery", four_query_decode(n, answers), RecoveryLevel::Exact, answers.size(), 4);
}

Matching build_isomorphic_matching(const Sequence& s, std::size_t i, std::size_t n) {
    const std::size_t l = s.size();
    if (!s.is_binary() || s.count(Symbol::zero()) == 0 || s.count(Symbol::one()) == 0) {
        throw DomainError("isomorphic matching needs an input containing both 0 and 1");
    }
    if (i < 1 || i > n) throw DomainError("query index out of range");
    if (l > n) throw DomainError("input longer than the query");
    std::size_t u = 0;
    while (s[u] != Symbol::zero()) ++u;
    const std::size_t surplus = n - l;
    Matching m;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t target;
        if (j < u) target = j;
        else if (j <= u + surplus) target = u;
        else target = j - surplus;
        m.edges.emplace_back(j, target);
    }
    return m;
}

std::vector<std::size_t> to_assignment(const Matching& m, std::size_t query_len) {
    std::vector<std::size_t> a(query_len, 0);
    std::vector<std::size_t> deg(query_len, 0);
    for (const auto& [i, j] : m.edges) {
        if (i >= query_len) throw InvalidMatching("query index out of range");
        a[i] = j;
        ++deg[i];
    }
    for (auto d : deg) {
        if (d != 1) throw InvalidMatching("query position does not have degree 1");
    }
    return a;
}

Matching from_assignment(const std::vector<std::size_t>& assignment) {
    Matching m;
    for (std::size_t k = 0; k < assignment.size(); ++k) m.edges.emplace_back(k, assignment[k]);
    return m;
}

std::vector<std::vector<std::size_t>> shifting_operations(const std::vector<std::size_t>& assignment, const Sequence& s) {
    const std::size_t l = s.size();
    std::vector<std::size_t> deg(l, 0);
    for (auto j : assignment) ++deg.at(j);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < l; ++x) {
        if (s[x] != Symbol::zero() || deg[x] < 2) continue;
        std::size_t z = 0;
        for (std::size_t k = 0; k < assignment.size(); ++k) {
            if (assignment[k] == x) z = k;
        }
        for (std::size_t y = x + 1; y < l; ++y) {
            if (s[y] == Symbol::zero()) {
                auto next = assignment;
                for (std::size_t j = x; j < y; ++j) next[z + (j - x)] = j + 1;
                out.push_back(std::move(next));
            }
            if (deg[y] != 1) break;
        }
    }
    return out;
}

}  // namespace seqrecover
