#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqrecover/errors.hpp"
#include "seqrecover/lab.hpp"
#include "seqrecover/mss.hpp"
#include "seqrecover/strategies.hpp"

namespace py = pybind11;
using namespace seqrecover;

namespace {

std::string strategies_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : strategies()) {
        out.push_back({{"id", s.id},
                       {"distance", s.spec.name()},
                       {"mode", s.mode == Mode::Adaptive ? "adaptive" : "non-adaptive"},
                       {"level", to_string(s.level)},
                       {"extra_chars", s.extra_chars},
                       {"bound", s.bound_text}});
    }
    return out.dump();
}

std::string recover_json(const std::string& id, const std::string& hidden, std::size_t n, bool transcript) {
    auto j = run_strategy(find_strategy(id), parse(hidden), n, transcript).to_json();
    j["ok"] = j["correct"].get<bool>() && j["bound_ok"].get<bool>();
    return j.dump();
}

std::string table_json(std::size_t n) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : summary_table(n)) out.push_back(r.to_json());
    return out.dump();
}

std::string verify_json(const std::string& id, const std::map<std::string, std::string>& config) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : run_suite(id, config)) out.push_back(r.to_json());
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<UnsupportedAlphabet>(m, "UnsupportedAlphabet", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());

    m.def("normalize", [](const std::string& text) { return format(parse(text)); }, py::arg("text"));
    m.def("distance", [](const std::string& kind, const std::string& x, const std::string& y) {
        return evaluate(DistanceSpec::parse(kind), parse(x), parse(y)).str();
    }, py::arg("kind"), py::arg("x"), py::arg("y"));
    m.def("dtw_via_mss", [](const std::string& x, const std::string& y) { return dtw_via_mss(parse(x), parse(y)); },
          py::arg("x"), py::arg("y"));
    m.def("query_cap", &default_query_cap, py::arg("n"));
    m.def("strategies_json", &strategies_json);
    m.def("recover_json", &recover_json, py::arg("strategy"), py::arg("hidden"), py::arg("n"), py::arg("transcript") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("table_json", &table_json, py::arg("n"), py::call_guard<py::gil_scoped_release>());
    m.def("suite_ids", &suite_ids);
    m.def("verify_json", &verify_json, py::arg("suite"), py::arg("config") = std::map<std::string, std::string>{},
          py::call_guard<py::gil_scoped_release>());
}
