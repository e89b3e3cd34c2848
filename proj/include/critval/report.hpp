/**
 * @brief Machine-readable suite reports.
 *
 * A single versioned JSON document with a stable field order:
 *   version, seed, config, cases[], summary, elapsed_ms.
 * Unknown fields are rejected on read; read(write(r)) == r.
 *
 * Written elapsed_ms fields are always 0 so that two runs with the same
 * (version, config, seed) produce byte-identical files; wall-clock timings
 * stay in memory and go to the console only.
 */
#pragma once

#include "critval/engine.hpp"

#include <json.hpp>

#include <fstream>

namespace critval {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportParseError : std::runtime_error {
    explicit ReportParseError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ReportIoError : std::runtime_error {
    explicit ReportIoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SuiteConfig {
    std::vector<std::string> checks;  // empty = all known checks
    int n_min = 1;
    int n_max = 3;
    int a_max = 2;
    int b_max = 2;
    CheckMode mode = CheckMode::symbolic();
    std::size_t budget = 0;  // max intermediate term count, 0 = unlimited
    int max_basis_degree = 2;
    std::string output_path;

    void validate() const {
        int cap = mode.kind == CheckKind::Symbolic ? 6 : 8;
        if (n_min < 1 || n_max < n_min)
            throw std::invalid_argument("SuiteConfig: need 1 <= n_min <= n_max");
        if (n_max > cap)
            throw std::invalid_argument("SuiteConfig: n_max exceeds hard cap " +
                                        std::to_string(cap));
        if (a_max < 0 || b_max < 0 || max_basis_degree < 0)
            throw std::invalid_argument("SuiteConfig: negative range");
    }
};

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct SuiteReport {
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
    SuiteConfig config;
    std::vector<CheckOutcome> cases;
    SuiteSummary summary;
    std::int64_t elapsed_ms = 0;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline void expect_fields(const ojson& j, const std::vector<std::string>& required,
                          const std::vector<std::string>& optional, const char* where) {
    if (!j.is_object()) throw ReportParseError(std::string(where) + ": expected an object");
    for (const auto& f : required)
        if (!j.contains(f))
            throw ReportParseError(std::string(where) + ": missing field '" + f + "'");
    for (const auto& [key, val] : j.items()) {
        bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                     std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known)
            throw ReportParseError(std::string(where) + ": unknown field '" + key + "'");
    }
}

inline ojson config_to_json(const SuiteConfig& c) {
    ojson j;
    j["checks"] = c.checks;
    j["n_min"] = c.n_min;
    j["n_max"] = c.n_max;
    j["a_max"] = c.a_max;
    j["b_max"] = c.b_max;
    j["mode"] = c.mode.kind == CheckKind::Symbolic ? "symbolic" : "evaluate";
    j["points"] = c.mode.points;
    j["budget"] = c.budget;
    j["max_basis_degree"] = c.max_basis_degree;
    return j;
}

inline SuiteConfig config_from_json(const ojson& j, std::uint64_t seed) {
    expect_fields(j,
                  {"checks", "n_min", "n_max", "a_max", "b_max", "mode", "points", "budget",
                   "max_basis_degree"},
                  {}, "config");
    SuiteConfig c;
    c.checks = j.at("checks").get<std::vector<std::string>>();
    c.n_min = j.at("n_min").get<int>();
    c.n_max = j.at("n_max").get<int>();
    c.a_max = j.at("a_max").get<int>();
    c.b_max = j.at("b_max").get<int>();
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "symbolic" && mode != "evaluate")
        throw ReportParseError("config: bad mode '" + mode + "'");
    c.mode.kind = mode == "symbolic" ? CheckKind::Symbolic : CheckKind::Evaluate;
    c.mode.points = j.at("points").get<int>();
    c.mode.seed = seed;
    c.budget = j.at("budget").get<std::size_t>();
    c.max_basis_degree = j.at("max_basis_degree").get<int>();
    return c;
}

inline ojson case_to_json(const CheckOutcome& o) {
    ojson j;
    j["check"] = o.name;
    j["n"] = o.instance.n;
    j["a"] = o.instance.a;
    j["b"] = o.instance.b;
    j["mode"] = o.mode.kind == CheckKind::Symbolic ? "symbolic" : "evaluate";
    j["points"] = o.mode.points;
    j["status"] = status_name(o.status);
    if (o.status == CheckStatus::Fail) j["witness"] = o.witness;
    j["elapsed_ms"] = 0;
    return j;
}

inline CheckOutcome case_from_json(const ojson& j) {
    expect_fields(j, {"check", "n", "a", "b", "mode", "points", "status", "elapsed_ms"},
                  {"witness"}, "case");
    CheckOutcome o;
    o.name = j.at("check").get<std::string>();
    o.instance = IdentityInstance(j.at("n").get<int>(),
                                  j.at("a").get<std::vector<int>>(), j.at("b").get<int>());
    std::string mode = j.at("mode").get<std::string>();
    o.mode.kind = mode == "symbolic" ? CheckKind::Symbolic : CheckKind::Evaluate;
    o.mode.points = j.at("points").get<int>();
    std::string st = j.at("status").get<std::string>();
    if (st == "pass") o.status = CheckStatus::Pass;
    else if (st == "fail") o.status = CheckStatus::Fail;
    else if (st == "skipped") o.status = CheckStatus::Skipped;
    else throw ReportParseError("case: bad status '" + st + "'");
    if (j.contains("witness")) o.witness = j.at("witness").get<std::string>();
    o.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return o;
}

}  // namespace detail

inline std::string report_to_string(const SuiteReport& r) {
    detail::ojson j;
    j["version"] = r.version;
    j["seed"] = r.seed;
    j["config"] = detail::config_to_json(r.config);
    j["cases"] = detail::ojson::array();
    for (const auto& c : r.cases) j["cases"].push_back(detail::case_to_json(c));
    detail::ojson s;
    s["pass"] = r.summary.pass;
    s["fail"] = r.summary.fail;
    s["skipped"] = r.summary.skipped;
    j["summary"] = s;
    j["elapsed_ms"] = 0;
    return j.dump(2) + "\n";
}

inline SuiteReport report_from_string(const std::string& text) {
    detail::ojson j;
    try {
        j = detail::ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ReportParseError(std::string("report: ") + e.what());
    }
    detail::expect_fields(j, {"version", "seed", "config", "cases", "summary", "elapsed_ms"},
                          {}, "report");
    SuiteReport r;
    try {
        r.version = j.at("version").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.config = detail::config_from_json(j.at("config"), r.seed);
        if (!j.at("cases").is_array()) throw ReportParseError("report: cases must be an array");
        for (const auto& c : j.at("cases")) r.cases.push_back(detail::case_from_json(c));
        const auto& s = j.at("summary");
        detail::expect_fields(s, {"pass", "fail", "skipped"}, {}, "summary");
        r.summary.pass = s.at("pass").get<int>();
        r.summary.fail = s.at("fail").get<int>();
        r.summary.skipped = s.at("skipped").get<int>();
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ReportParseError(std::string("report: ") + e.what());
    }
    return r;
}

inline void write_report(const SuiteReport& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ReportIoError("cannot open report file for writing: " + path);
    out << report_to_string(r);
    if (!out) throw ReportIoError("error while writing report file: " + path);
}

inline SuiteReport read_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ReportIoError("cannot open report file for reading: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return report_from_string(text);
}

}  // namespace critval
