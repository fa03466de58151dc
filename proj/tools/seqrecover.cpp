#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqrecover/errors.hpp"
#include "seqrecover/lab.hpp"
#include "seqrecover/strategies.hpp"

using namespace seqrecover;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::size_t parse_size(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError(key + " must be a nonnegative integer, got '" + value + "'");
    }
}

std::size_t max_n(const std::map<std::string, std::string>& config) {
    std::size_t cap = 16;
    if (const char* env = std::getenv("SEQRECOVER_MAX_N")) cap = parse_size("SEQRECOVER_MAX_N", env);
    if (auto it = config.find("max_n"); it != config.end()) cap = std::min(cap, parse_size("max_n", it->second));
    return cap;
}

void check_n(std::size_t n, const std::map<std::string, std::string>& config) {
    const std::size_t cap = max_n(config);
    if (n < 1 || n > cap) throw UsageError("n must be in [1, " + std::to_string(cap) + "], got " + std::to_string(n));
}

std::size_t thread_count(std::size_t requested, const std::map<std::string, std::string>& config) {
    if (requested == 0) {
        if (auto it = config.find("threads"); it != config.end()) requested = parse_size("threads", it->second);
    }
    if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

/// Runs work(i) for i in [0, count) on a small pool; callers index results by i so output order is stable.
template <class F>
void parallel_for(std::size_t count, std::size_t threads, F work) {
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

int cmd_oracle(const std::string& distance, const std::string& x, const std::string& y) {
    const auto spec = DistanceSpec::parse(distance);
    const Sequence s = parse(x), q = parse(y);
    std::cout << evaluate(spec, s, q).str() << "\n";
    return kOk;
}

struct RecoverArgs {
    std::string strategy;
    std::size_t n = 0;
    std::string hidden;
    bool hidden_set = false;
    std::vector<std::uint64_t> random;
    bool exhaustive = false;
    bool pretty = false;
    bool transcript = false;
    std::size_t threads = 0;
};

int cmd_recover(const RecoverArgs& a, const std::map<std::string, std::string>& config) {
    const Strategy& st = find_strategy(a.strategy);
    check_n(a.n, config);
    const int sources = int(a.hidden_set) + int(!a.random.empty()) + int(a.exhaustive);
    if (sources != 1) throw UsageError("give exactly one of --hidden, --random, --exhaustive");

    std::vector<Sequence> inputs;
    if (a.hidden_set) {
        inputs.push_back(parse(a.hidden));
        if (!inputs.back().is_binary()) throw UsageError("hidden input must be binary");
    } else if (a.exhaustive) {
        inputs = strategy_inputs(st, a.n);
    } else {
        if (a.random.size() != 2) throw UsageError("--random takes a seed and a count");
        std::mt19937_64 rng(a.random[0]);
        std::uniform_int_distribution<std::size_t> len(st.nonempty_only ? 1 : 0, a.n);
        std::bernoulli_distribution coin;
        for (std::uint64_t i = 0; i < a.random[1]; ++i) {
            Sequence s;
            const std::size_t l = len(rng);
            for (std::size_t k = 0; k < l; ++k) s.push_back(coin(rng) ? Symbol::one() : Symbol::zero());
            inputs.push_back(std::move(s));
        }
    }

    nlohmann::json run_config{{"command", "recover"}, {"strategy", st.id}, {"n", a.n}};
    if (a.hidden_set) run_config["hidden"] = a.hidden;
    if (!a.random.empty()) run_config["random"] = {{"seed", a.random[0]}, {"count", a.random[1]}};
    if (a.exhaustive) run_config["exhaustive"] = true;

    std::vector<nlohmann::json> lines(inputs.size());
    std::vector<char> ok(inputs.size(), 0);
    parallel_for(inputs.size(), thread_count(a.threads, config), [&](std::size_t i) {
        nlohmann::json j;
        try {
            const Outcome o = run_strategy(st, inputs[i], a.n, a.transcript);
            j = o.to_json();
            ok[i] = o.ok();
        } catch (const Error& e) {
            j = {{"strategy", st.id}, {"hidden", format(inputs[i])}, {"n", a.n}, {"correct", false}, {"error", e.what()}};
        }
        j["config"] = run_config;
        j["index"] = i;
        lines[i] = std::move(j);
    });

    std::size_t failures = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!ok[i]) ++failures;
        if (a.pretty) {
            const auto& j = lines[i];
            std::string h = j["hidden"].get<std::string>();
            std::cout << pad(h.empty() ? "(empty)" : h, a.n + 2);
            if (j.contains("error")) {
                std::cout << "ERROR " << j["error"].get<std::string>() << "\n";
                continue;
            }
            std::string r = j["recovered"].get<std::string>();
            std::cout << "-> " << pad(r.empty() ? "(empty)" : r, a.n + 2) << pad(std::to_string(j["queries_used"].get<std::size_t>()) + "/" + std::to_string(j["bound"].get<std::size_t>()), 10)
                      << pad(j["level"].get<std::string>(), 20) << (ok[i] ? "ok" : "FAIL") << "\n";
        } else {
            std::cout << lines[i].dump() << "\n";
        }
    }
    if (a.pretty) std::cout << inputs.size() - failures << "/" << inputs.size() << " ok\n";
    return failures == 0 ? kOk : kFail;
}

int cmd_table(std::size_t n, bool pretty, const std::map<std::string, std::string>& config) {
    check_n(n, config);
    const auto rows = summary_table(n);
    std::size_t failures = 0;
    for (const auto& r : rows) failures += r.failures;
    if (!pretty) {
        for (const auto& r : rows) {
            auto j = r.to_json();
            j["n"] = n;
            std::cout << j.dump() << "\n";
        }
        return failures == 0 ? kOk : kFail;
    }
    std::cout << pad("strategy", 28) << pad("distance", 9) << pad("mode", 14) << pad("level", 19) << pad("extra chars", 19)
              << pad("declared bound", 44) << pad("max queries", 13) << pad("max bound", 11) << "inputs  failures\n";
    for (const auto& r : rows) {
        std::cout << pad(r.strategy_id, 28) << pad(r.distance, 9) << pad(r.mode, 14) << pad(r.level, 19) << pad(r.extra_chars, 19)
                  << pad(r.bound_text, 44) << pad(std::to_string(r.max_queries), 13) << pad(std::to_string(r.max_bound), 11)
                  << pad(std::to_string(r.inputs), 8) << r.failures << "\n";
    }
    return failures == 0 ? kOk : kFail;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& sets, bool pretty, std::map<std::string, std::string> config) {
    for (const auto& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + kv + "'");
        config[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    std::vector<std::string> ids;
    if (suite == "all") {
        ids = suite_ids();
    } else {
        const auto known = suite_ids();
        if (std::find(known.begin(), known.end(), suite) == known.end()) throw UsageError("unknown suite '" + suite + "'");
        ids.push_back(suite);
    }
    bool all_ok = true;
    for (const auto& id : ids) {
        for (const auto& r : run_suite(id, config)) {
            all_ok = all_ok && r.result;
            auto j = r.to_json();
            j["suite"] = id;
            if (pretty) {
                std::cout << (r.result ? "PASS " : "FAIL ") << pad(r.claim_id, 26) << j["params"].dump() << " verified up to "
                          << j["bound"].dump() << "\n";
                if (r.counterexample) std::cout << "     counterexample " << r.counterexample->dump() << "\n";
            } else {
                std::cout << j.dump() << "\n";
            }
        }
    }
    return all_ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconstruct hidden binary sequences from distance queries"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (max_n, threads, suite parameters)");

    auto* oracle = app.add_subcommand("oracle", "Print d(x, y) exactly");
    std::string distance, x, y;
    oracle->add_option("distance", distance, "edit | dtw | dtw<p> | frechet")->required();
    oracle->add_option("x", x)->required();
    oracle->add_option("y", y)->required();

    auto* recover = app.add_subcommand("recover", "Run a strategy against hidden inputs (JSON lines)");
    RecoverArgs ra;
    recover->add_option("strategy", ra.strategy)->required();
    recover->add_option("n", ra.n)->required();
    auto* hidden_opt = recover->add_option("--hidden", ra.hidden, "one hidden input");
    recover->add_option("--random", ra.random, "seed count")->expected(2);
    recover->add_flag("--exhaustive", ra.exhaustive, "every input the strategy accepts");
    recover->add_flag("--pretty", ra.pretty);
    recover->add_flag("--transcript", ra.transcript, "include query transcripts");
    recover->add_option("--threads", ra.threads);

    auto* table = app.add_subcommand("table", "Measured query counts against declared bounds");
    std::size_t table_n = 0;
    bool table_pretty = false;
    table->add_option("n", table_n)->required();
    table->add_flag("--pretty", table_pretty);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::vector<std::string> sets;
    bool verify_pretty = false;
    verify->add_option("suite", suite, "suite id or 'all'")->required();
    verify->add_option("--set", sets, "key=value override");
    verify->add_flag("--pretty", verify_pretty);

    auto* list = app.add_subcommand("list", "List strategy and suite ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const auto config = read_config(config_path);
        if (*oracle) return cmd_oracle(distance, x, y);
        if (*recover) {
            ra.hidden_set = hidden_opt->count() > 0;
            return cmd_recover(ra, config);
        }
        if (*table) return cmd_table(table_n, table_pretty, config);
        if (*verify) return cmd_verify(suite, sets, verify_pretty, config);
        if (*list) {
            for (const auto& s : strategies()) std::cout << "strategy " << s.id << "\n";
            for (const auto& s : suite_ids()) std::cout << "suite " << s << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
