#include "seqrecover/lab.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "seqrecover/errors.hpp"
#include "seqrecover/mss.hpp"
#include "seqrecover/recovery_dtw.hpp"
#include "seqrecover/recovery_edit.hpp"
#include "seqrecover/recovery_frechet.hpp"

namespace seqrecover {

QueryScanner::QueryScanner(std::vector<Sequence> inputs, DistanceKind kind) : inputs_(std::move(inputs)), kind_(kind) {
    for (const auto& s : inputs_) {
        if (!s.is_binary()) throw UnsupportedAlphabet("scanner inputs must be binary");
        if (kind_ != DistanceKind::Edit && s.empty()) throw DomainError("DTW / Frechet scanner inputs must be nonempty");
        std::vector<std::uint8_t> b;
        for (const auto& sym : s) b.push_back(sym.kind() == Symbol::Kind::One ? 1 : 0);
        bits_.push_back(std::move(b));
    }
}

void QueryScanner::scan(std::size_t min_len, std::size_t max_len,
                        const std::function<bool(const std::vector<std::uint8_t>&, const std::vector<std::int64_t>&)>& visit) const {
    const bool edit = kind_ == DistanceKind::Edit;
    const bool frechet = kind_ == DistanceKind::Frechet;
    const std::size_t k = inputs_.size();
    std::vector<std::size_t> offset(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) offset[i + 1] = offset[i] + bits_[i].size() + (edit ? 1 : 0);
    const std::size_t width = offset[k];

    // rows[d] holds the DP row after d query characters, for every input side by side.
    std::vector<std::vector<std::int32_t>> rows(max_len + 1, std::vector<std::int32_t>(width));
    std::vector<std::vector<std::int64_t>> answers(max_len + 1, std::vector<std::int64_t>(k));
    std::vector<std::uint8_t> query;
    query.reserve(max_len);

    if (edit) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j <= bits_[i].size(); ++j) rows[0][offset[i] + j] = static_cast<std::int32_t>(j);
            answers[0][i] = static_cast<std::int64_t>(bits_[i].size());
        }
    }

    auto extend = [&](std::size_t depth, std::uint8_t c) {
        const auto& prev = rows[depth - 1];
        auto& cur = rows[depth];
        for (std::size_t i = 0; i < k; ++i) {
            const auto& s = bits_[i];
            const std::int32_t* p = prev.data() + offset[i];
            std::int32_t* r = cur.data() + offset[i];
            if (edit) {
                r[0] = p[0] + 1;
                for (std::size_t j = 1; j <= s.size(); ++j) {
                    const std::int32_t sub = p[j - 1] + (s[j - 1] != c ? 1 : 0);
                    r[j] = std::min({sub, p[j] + 1, r[j - 1] + 1});
                }
                answers[depth][i] = r[s.size()];
                continue;
            }
            for (std::size_t j = 0; j < s.size(); ++j) {
                const std::int32_t cost = s[j] != c ? 1 : 0;
                std::int32_t best;
                if (depth == 1) {
                    best = j == 0 ? 0 : r[j - 1];
                } else {
                    best = p[j];
                    if (j > 0) best = std::min({best, p[j - 1], r[j - 1]});
                }
                r[j] = frechet ? std::max(best, cost) : best + cost;
            }
            answers[depth][i] = r[s.size() - 1];
        }
    };

    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
        if (depth >= min_len && (depth > 0 || edit)) {
            if (!visit(query, answers[depth])) return;
        }
        if (depth == max_len) return;
        for (std::uint8_t c : {std::uint8_t{0}, std::uint8_t{1}}) {
            query.push_back(c);
            extend(depth + 1, c);
            walk(depth + 1);
            query.pop_back();
        }
    };
    walk(0);
}

Sequence from_bits(const std::vector<std::uint8_t>& bits) {
    Sequence s;
    for (auto b : bits) s.push_back(b ? Symbol::one() : Symbol::zero());
    return s;
}

std::optional<Sequence> brute_distinguish(const Sequence& s, const Sequence& t, DistanceKind kind, std::size_t max_query_len) {
    QueryScanner scanner({s, t}, kind);
    std::optional<std::vector<std::uint8_t>> best;
    scanner.scan(0, max_query_len, [&](const std::vector<std::uint8_t>& q, const std::vector<std::int64_t>& a) {
        if (a[0] == a[1]) return true;
        if (!best || q.size() < best->size() || (q.size() == best->size() && q < *best)) best = q;
        return false;  // longer queries below this one come later in canonical order
    });
    if (!best) return std::nullopt;
    return from_bits(*best);
}

std::optional<Sequence> brute_distinguish(const Sequence& s, const Sequence& t, const DistanceSpec& spec,
                                          std::size_t max_query_len, const std::vector<Symbol>& alphabet) {
    if (alphabet.empty()) return std::nullopt;
    std::vector<Symbol> sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::size_t start = spec.kind == DistanceKind::Edit ? 0 : 1;
    for (std::size_t len = start; len <= max_query_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            Sequence q;
            for (auto d : digits) q.push_back(sorted[d]);
            if (evaluate(spec, s, q) != evaluate(spec, t, q)) return q;
            std::size_t pos = len;
            while (pos > 0 && ++digits[pos - 1] == sorted.size()) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
    return std::nullopt;
}

std::pair<Sequence, Sequence> lowerbound_pair(std::size_t c, std::size_t cap) {
    if (c < 1) throw DomainError("c must be at least 1");
    if (6 * c + 9 > cap) throw DomainError("pair length 6c + 9 = " + std::to_string(6 * c + 9) + " exceeds the cap " + std::to_string(cap));
    const Symbol z = Symbol::zero(), o = Symbol::one();
    Sequence s = Sequence{z}.append(o, 3).append(z, 1).append(o, 3);
    for (std::size_t i = 0; i < c; ++i) s.append(z, 3).append(o, 3);
    s.push_back(z);
    Sequence t = Sequence{z}.append(o, 3).append(z, 2).append(o, 3).append(z, 2).append(o, 3);
    for (std::size_t i = 0; i + 1 < c; ++i) t.append(z, 3).append(o, 3);
    t.push_back(z);
    return {s, t};
}

Sequence lowerbound_query(std::size_t c) {
    Sequence q{Symbol::zero()};
    for (std::size_t i = 0; i < c; ++i) q.append(Sequence::binary("10"));
    q.append(Sequence::binary("10"));
    return q;
}

RunsWindowResult verify_runs_window(std::size_t c, std::size_t max_query_len) {
    const auto [s, t] = lowerbound_pair(c, 6 * c + 9);
    QueryScanner scanner({s, t}, DistanceKind::Dtw);
    RunsWindowResult r;
    scanner.scan(1, max_query_len, [&](const std::vector<std::uint8_t>& q, const std::vector<std::int64_t>& a) {
        if (a[0] == a[1]) return true;
        ++r.distinguishing;
        std::size_t runs = 1;
        for (std::size_t i = 1; i < q.size(); ++i) runs += q[i] != q[i - 1];
        if (runs < 2 * c || runs > 2 * c + 6) {
            r.ok = false;
            if (!r.counterexample) r.counterexample = from_bits(q);
        }
        return true;
    });
    return r;
}

std::vector<Rational> embed(const Sequence& s, const std::vector<Sequence>& plan, const DistanceSpec& spec) {
    std::vector<Rational> out;
    out.reserve(plan.size());
    for (const auto& q : plan) {
        check_alphabet(spec, q);
        out.push_back(evaluate(spec, s, q));
    }
    return out;
}

Partition normalize(Partition p) {
    for (auto& g : p) std::sort(g.begin(), g.end());
    std::sort(p.begin(), p.end());
    return p;
}

namespace {

std::vector<Sequence> partition_inputs(std::size_t n, DistanceKind kind) {
    return all_binary_sequences(kind == DistanceKind::Edit ? 0 : 1, n);
}

template <class Key>
Partition group_by(const std::vector<Sequence>& inputs, const std::vector<Key>& keys) {
    std::map<Key, std::vector<Sequence>> groups;
    for (std::size_t i = 0; i < inputs.size(); ++i) groups[keys[i]].push_back(inputs[i]);
    Partition p;
    for (auto& [k, g] : groups) p.push_back(std::move(g));
    return normalize(std::move(p));
}

}  // namespace

Partition class_partition(std::size_t n, DistanceKind kind, std::size_t max_query_len) {
    const auto inputs = partition_inputs(n, kind);
    QueryScanner scanner(inputs, kind);
    std::vector<std::string> signatures(inputs.size());
    scanner.scan(0, max_query_len, [&](const std::vector<std::uint8_t>&, const std::vector<std::int64_t>& a) {
        for (std::size_t i = 0; i < a.size(); ++i) signatures[i].push_back(static_cast<char>(a[i]));
        return true;
    });
    return group_by(inputs, signatures);
}

Partition plan_partition(std::size_t n, const DistanceSpec& spec, const std::vector<Sequence>& plan) {
    const auto inputs = partition_inputs(n, spec.kind);
    std::vector<std::vector<std::string>> keys;
    keys.reserve(inputs.size());
    for (const auto& s : inputs) {
        std::vector<std::string> k;
        for (const auto& a : embed(s, plan, spec)) k.push_back(a.str());
        keys.push_back(std::move(k));
    }
    return group_by(inputs, keys);
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j{{"claim_id", claim_id}, {"params", params}, {"bound", bound}, {"result", result}};
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
}

namespace {

std::size_t get(const std::map<std::string, std::string>& config, const std::string& key, std::size_t fallback) {
    auto it = config.find(key);
    if (it == config.end()) return fallback;
    try {
        return static_cast<std::size_t>(std::stoull(it->second));
    } catch (const std::exception&) {
        throw DomainError("config value for '" + key + "' is not a nonnegative integer: " + it->second);
    }
}

nlohmann::json partition_json(const Partition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& g : p) {
        nlohmann::json group = nlohmann::json::array();
        for (const auto& s : g) group.push_back(format(s));
        j.push_back(group);
    }
    return j;
}

VerificationReport witness_suite(const std::map<std::string, std::string>& config) {
    const std::size_t len = get(config, "max_query_len", 14);
    const Sequence s = Sequence::binary("010110"), t = Sequence::binary("011010");
    VerificationReport r{"dtw.witness", {{"s", "010110"}, {"t", "011010"}}, {{"max_query_len", len}}, true, std::nullopt};
    if (auto q = brute_distinguish(s, t, DistanceKind::Dtw, len)) {
        r.result = false;
        r.counterexample = nlohmann::json{{"query", format(*q)}};
    }
    return r;
}

VerificationReport equivalence_suite(const std::map<std::string, std::string>& config) {
    const std::size_t n = get(config, "n", 6);
    const std::size_t len = get(config, "max_query_len", 16);
    const auto brute = class_partition(n, DistanceKind::Dtw, len);
    const auto plan = plan_partition(n, DistanceSpec::dtw(), equivalence_plan(n));
    VerificationReport r{"dtw.equivalence", {{"n", n}, {"classes", plan.size()}}, {{"max_query_len", len}}, brute == plan, std::nullopt};
    if (!r.result) r.counterexample = nlohmann::json{{"brute", partition_json(brute)}, {"plan", partition_json(plan)}};
    return r;
}

VerificationReport runs_window_suite(std::size_t c, std::size_t len) {
    const auto w = verify_runs_window(c, len);
    const auto [s, t] = lowerbound_pair(c, 6 * c + 9);
    const Sequence q = lowerbound_query(c);
    const Rational ds = dtw_distance(s, q), dt = dtw_distance(t, q);
    VerificationReport r{"dtw.runs-window",
                         {{"c", c}, {"s", format(s)}, {"t", format(t)}, {"distinguishing", w.distinguishing}},
                         {{"max_query_len", len}, {"runs", {2 * c, 2 * c + 6}}},
                         w.ok && ds == Rational(1) && dt == Rational(2),
                         std::nullopt};
    if (!w.ok) r.counterexample = nlohmann::json{{"query", format(*w.counterexample)}};
    else if (!r.result) r.counterexample = nlohmann::json{{"query", format(q)}, {"d_s", ds.str()}, {"d_t", dt.str()}};
    return r;
}

VerificationReport mss_suite(const std::map<std::string, std::string>& config) {
    const std::size_t exhaustive = get(config, "exhaustive_len", 6);
    const std::size_t random_pairs = get(config, "random_pairs", 100000);
    const std::size_t random_len = get(config, "random_len", 12);
    const std::uint64_t seed = get(config, "seed", 1);
    VerificationReport r{"dtw.mss-reduction",
                         {{"exhaustive_len", exhaustive}, {"random_pairs", random_pairs}, {"random_len", random_len}, {"seed", seed}},
                         nlohmann::json::object(), true, std::nullopt};
    auto check = [&](const Sequence& x, const Sequence& y) {
        if (dtw_via_mss(x, y) == dtw_distance(x, y).to_int64()) return true;
        r.result = false;
        r.counterexample = nlohmann::json{{"x", format(x)}, {"y", format(y)}};
        return false;
    };
    const auto all = all_binary_sequences(1, exhaustive);
    for (const auto& x : all) {
        for (const auto& y : all) {
            if (!check(x, y)) return r;
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len_dist(1, random_len);
    std::bernoulli_distribution coin;
    auto random_seq = [&] {
        Sequence s;
        const std::size_t len = len_dist(rng);
        for (std::size_t i = 0; i < len; ++i) s.push_back(coin(rng) ? Symbol::one() : Symbol::zero());
        return s;
    };
    for (std::size_t i = 0; i < random_pairs; ++i) {
        const Sequence x = random_seq(), y = random_seq();
        if (!check(x, y)) return r;
    }
    return r;
}

VerificationReport frechet_suite(const std::map<std::string, std::string>& config) {
    const std::size_t n = get(config, "n", 6);
    const std::size_t len = get(config, "max_query_len", 2 * n + 4);
    const auto brute = class_partition(n, DistanceKind::Frechet, len);
    const auto inputs = partition_inputs(n, DistanceKind::Frechet);
    std::vector<std::pair<std::size_t, int>> keys;
    for (const auto& s : inputs) {
        const auto c = FrechetClass::of(s);
        keys.emplace_back(c.length, static_cast<int>(c.start));
    }
    const auto expected = group_by(inputs, keys);
    VerificationReport r{"frechet.classes", {{"n", n}, {"classes", brute.size()}}, {{"max_query_len", len}, {"expected_classes", 2 * n}},
                         brute == expected && brute.size() == 2 * n, std::nullopt};
    if (!r.result) r.counterexample = nlohmann::json{{"brute", partition_json(brute)}};
    return r;
}

VerificationReport edit_singletons_suite(const std::map<std::string, std::string>& config) {
    const std::size_t n = get(config, "n", 4);
    const std::size_t len = get(config, "max_query_len", 2 * n + 4);
    const auto brute = class_partition(n, DistanceKind::Edit, len);
    const bool ok = std::all_of(brute.begin(), brute.end(), [](const auto& g) { return g.size() == 1; });
    VerificationReport r{"edit.singletons", {{"n", n}, {"classes", brute.size()}}, {{"max_query_len", len}}, ok, std::nullopt};
    if (!ok) r.counterexample = nlohmann::json{{"partition", partition_json(brute)}};
    return r;
}

VerificationReport embedding_suite(const std::map<std::string, std::string>& config) {
    const std::size_t n = get(config, "n", 4);
    const auto plan = wildcard_plan(n);
    std::set<std::vector<std::string>> seen;
    std::optional<nlohmann::json> clash;
    const auto inputs = all_binary_sequences(0, n);
    for (const auto& s : inputs) {
        std::vector<std::string> key;
        for (const auto& a : embed(s, plan, DistanceSpec::edit())) key.push_back(a.str());
        if (!seen.insert(key).second && !clash) clash = nlohmann::json{{"input", format(s)}};
    }
    return {"edit.wildcard-embedding", {{"n", n}, {"inputs", inputs.size()}}, {{"queries", plan.size()}}, !clash, clash};
}

VerificationReport matching_suite(const std::map<std::string, std::string>& config) {
    const std::size_t trials = get(config, "trials", 10000);
    const std::size_t max_n = get(config, "max_n", 12);
    const std::uint64_t seed = get(config, "seed", 1);
    VerificationReport r{"dtw.isomorphic-matching", {{"trials", trials}, {"max_n", max_n}, {"seed", seed}}, nlohmann::json::object(), true,
                         std::nullopt};
    std::mt19937_64 rng(seed);
    const TwoExtraParams params;
    for (std::size_t trial = 0; trial < trials && r.result; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
        const std::size_t len = std::uniform_int_distribution<std::size_t>(2, n)(rng);
        Sequence s;
        do {
            s = Sequence{};
            for (std::size_t k = 0; k < len; ++k) s.push_back(std::bernoulli_distribution()(rng) ? Symbol::one() : Symbol::zero());
        } while (s.count(Symbol::zero()) == 0 || s.count(Symbol::one()) == 0);
        const std::size_t i = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        const Sequence q = two_extra_plan(n, params)[i - 1];
        const Matching m = build_isomorphic_matching(s, i, n);
        const Rational cost = matching_cost(m, q, s);
        const Rational best = dtw_distance(q, s);
        bool ok = cost == best;
        const auto base = to_assignment(m, n);
        for (const auto& shifted : shifting_operations(base, s)) {
            if (matching_cost(from_assignment(shifted), q, s) < cost) ok = false;
        }
        if (!ok) {
            r.result = false;
            r.counterexample = nlohmann::json{{"s", format(s)}, {"i", i}, {"n", n}, {"cost", cost.str()}, {"optimum", best.str()}};
        }
    }
    return r;
}

}  // namespace

std::vector<std::string> suite_ids() {
    return {"witness", "equivalence", "runs-window", "mss", "frechet-classes", "edit-singletons", "embedding", "matching"};
}

std::vector<VerificationReport> run_suite(const std::string& id, const std::map<std::string, std::string>& config) {
    if (id == "witness") return {witness_suite(config)};
    if (id == "equivalence") return {equivalence_suite(config)};
    if (id == "runs-window") {
        const std::size_t len = get(config, "max_query_len", 12);
        if (config.count("c")) return {runs_window_suite(get(config, "c", 1), len)};
        return {runs_window_suite(1, len), runs_window_suite(2, len)};
    }
    if (id == "mss") return {mss_suite(config)};
    if (id == "frechet-classes") return {frechet_suite(config)};
    if (id == "edit-singletons") return {edit_singletons_suite(config)};
    if (id == "embedding") return {embedding_suite(config)};
    if (id == "matching") return {matching_suite(config)};
    throw DomainError("unknown suite '" + id + "'");
}

}  // namespace seqrecover
