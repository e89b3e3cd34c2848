// Command-line front end: single identity checks, sign calibration,
// critical-value inspection, and full grid sweeps with JSON reports.

#include "critval/critval.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace critval;

namespace {

struct CommonArgs {
    int n = 0;  // 0 = infer from a
    std::string a_csv;
    int b = 0;
    std::string mode = "symbolic";
    int points = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t budget = 0;
    std::string json_path;
    int max_degree = 2;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_b = true) {
    cmd->add_option("--n", args.n, "dimension n (inferred from --a when omitted)");
    cmd->add_option("--a", args.a_csv, "comma-separated multiplicities a1,...,an");
    if (with_b) cmd->add_option("--b", args.b, "exponent b");
    cmd->add_option("--mode", args.mode, "symbolic|evaluate")
        ->check(CLI::IsMember({"symbolic", "evaluate"}));
    cmd->add_option("--points", args.points, "evaluation points (evaluate mode)");
    cmd->add_option("--seed", args.seed, "master seed (evaluate mode)")
        ->each([&args](const std::string&) { args.seed_given = true; });
    cmd->add_option("--budget", args.budget, "max intermediate term count (0 = unlimited)");
    cmd->add_option("--json", args.json_path, "write a JSON report to this path");
    cmd->add_option("--max-degree", args.max_degree, "monomial basis degree (region checks)");
}

std::vector<int> parse_a(const std::string& csv) {
    std::vector<int> a;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) a.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return a;
}

std::uint64_t env_seed() {
    if (const char* s = std::getenv("CRITVAL_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

IdentityInstance resolve_instance(const CommonArgs& args, int default_a = 0) {
    std::vector<int> a = parse_a(args.a_csv);
    int n = args.n;
    if (a.empty() && n > 0) a.assign(n, default_a);
    if (n == 0) n = static_cast<int>(a.size());
    if (n == 0)
        throw CLI::ValidationError("--n/--a", "need at least one of --n or --a");
    if (static_cast<int>(a.size()) != n)
        throw CLI::ValidationError(
            "--a", "length of --a (" + std::to_string(a.size()) +
                       ") does not match --n (" + std::to_string(n) + ")");
    return IdentityInstance(n, a, args.b);
}

CheckMode resolve_mode(const CommonArgs& args) {
    if (args.mode == "symbolic") return CheckMode::symbolic();
    return CheckMode::evaluate(args.points, args.seed_given ? args.seed : env_seed());
}

void print_outcome(const CheckOutcome& o) {
    std::cout << o.name << " " << o.instance.str() << ": " << status_name(o.status);
    if (o.status == CheckStatus::Fail) std::cout << "\n  witness: " << o.witness;
    if (o.status == CheckStatus::Skipped) std::cout << "\n  reason: " << o.reason;
    std::cout << " (" << o.elapsed_ms << " ms)\n";
}

int finish(const CommonArgs& args, const CheckMode& mode, std::vector<CheckOutcome> outcomes) {
    int fails = 0;
    for (const auto& o : outcomes) {
        print_outcome(o);
        if (o.status == CheckStatus::Fail) ++fails;
    }
    if (!args.json_path.empty()) {
        SuiteReport r;
        r.seed = mode.seed;
        r.config.mode = mode;
        r.config.budget = args.budget;
        r.cases = std::move(outcomes);
        for (const auto& o : r.cases) {
            if (o.status == CheckStatus::Pass) ++r.summary.pass;
            else if (o.status == CheckStatus::Fail) ++r.summary.fail;
            else ++r.summary.skipped;
        }
        try {
            write_report(r, args.json_path);
        } catch (const ReportIoError& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    return fails == 0 ? 0 : 1;
}

std::pair<int, int> parse_n_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critval: exact verification of the multi-integral and "
                 "critical-value determinant identities"};
    app.require_subcommand(0, 1);

    bool list_checks = false;
    app.add_flag("--list-checks", list_checks, "list every runnable check and exit");

    CommonArgs a_args, b_args, rec_args, diff_args, region_args, cauchy_args, chain_args,
        red_args, crit_args, cal_args;
    std::string rec_level = "value";
    std::string diff_rule, region_rule;
    bool cauchy_row_scaled = false;
    std::string crit_points_csv;

    auto* cmd_a = app.add_subcommand("verify-a", "multi-integral identity, Eq. (1)");
    add_common(cmd_a, a_args);
    auto* cmd_b = app.add_subcommand("verify-b", "Jacobian determinant identity, Eq. (2)");
    add_common(cmd_b, b_args, false);
    auto* cmd_rec = app.add_subcommand("verify-recurrence", "b-recurrence, Eq. (3)");
    add_common(cmd_rec, rec_args);
    cmd_rec->add_option("--level", rec_level, "value|integrand")
        ->check(CLI::IsMember({"value", "integrand"}));
    auto* cmd_diff = app.add_subcommand("verify-diff", "differential identity, Eq. (4)");
    add_common(cmd_diff, diff_args, false);
    cmd_diff->add_option("--sign-rule", diff_rule,
                         "(-1)^i | (-1)^(i+1) | (-1)^(n-i); default: calibrated");
    auto* cmd_region = app.add_subcommand("verify-region", "region identities, Eqs. (5)/(6)");
    add_common(cmd_region, region_args, false);
    cmd_region->add_option("--sign-rule", region_rule, "sign rule; default: calibrated");
    auto* cmd_cauchy = app.add_subcommand("verify-cauchy", "Cauchy alternant determinant");
    add_common(cmd_cauchy, cauchy_args, false);
    cmd_cauchy->add_flag("--row-scaled", cauchy_row_scaled,
                         "also check the denominator-free variant");
    auto* cmd_chain = app.add_subcommand("verify-chain",
                                         "closed-form chain linking Eq. (1) to Eq. (2)");
    add_common(cmd_chain, chain_args, false);
    auto* cmd_red = app.add_subcommand("verify-reduction", "change-of-variables reduction");
    add_common(cmd_red, red_args, false);
    auto* cmd_cal = app.add_subcommand("calibrate-signs",
                                       "fit the alternating sign conventions empirically");
    cmd_cal->add_option("--json", cal_args.json_path, "write the calibration table here");
    auto* cmd_crit = app.add_subcommand("critpoly",
                                        "build p(Z), critical values, and the Jacobian");
    add_common(cmd_crit, crit_args, false);
    cmd_crit->add_option("--at", crit_points_csv,
                         "comma-separated rational critical points (default symbolic)");

    CommonArgs sweep_args;
    std::string sweep_n = "1..3";
    std::string sweep_checks;
    int a_max = 2, b_max = 2;
    auto* cmd_sweep = app.add_subcommand("sweep", "full grid suite");
    cmd_sweep->add_option("--n", sweep_n, "n range, e.g. 2 or 1..3");
    cmd_sweep->add_option("--a-max", a_max, "max multiplicity");
    cmd_sweep->add_option("--b-max", b_max, "max b");
    cmd_sweep->add_option("--checks", sweep_checks, "comma-separated check ids (default all)");
    cmd_sweep->add_option("--mode", sweep_args.mode, "symbolic|evaluate")
        ->check(CLI::IsMember({"symbolic", "evaluate"}));
    cmd_sweep->add_option("--points", sweep_args.points, "evaluation points");
    cmd_sweep->add_option("--seed", sweep_args.seed, "master seed")
        ->each([&sweep_args](const std::string&) { sweep_args.seed_given = true; });
    cmd_sweep->add_option("--budget", sweep_args.budget, "max intermediate term count");
    cmd_sweep->add_option("--json", sweep_args.json_path, "report path");
    cmd_sweep->add_option("--max-degree", sweep_args.max_degree, "region basis degree");

    CLI11_PARSE(app, argc, argv);

    if (list_checks) {
        for (const auto& c : all_checks())
            std::cout << c.id << " - " << c.description << "\n";
        return 0;
    }

    try {
        if (*cmd_a) {
            auto inst = resolve_instance(a_args);
            auto mode = resolve_mode(a_args);
            return finish(a_args, mode,
                          {verify_theorem_a(inst, mode, Budget{a_args.budget})});
        }
        if (*cmd_b) {
            auto inst = resolve_instance(b_args, 1);
            auto mode = resolve_mode(b_args);
            return finish(b_args, mode,
                          {verify_theorem_b(inst.n, inst.a, mode, Budget{b_args.budget})});
        }
        if (*cmd_rec) {
            auto inst = resolve_instance(rec_args);
            auto mode = resolve_mode(rec_args);
            auto level = rec_level == "value" ? RecurrenceLevel::Value
                                              : RecurrenceLevel::Integrand;
            return finish(rec_args, mode,
                          {verify_recurrence(inst, level, mode, Budget{rec_args.budget})});
        }
        if (*cmd_diff) {
            auto inst = resolve_instance(diff_args);
            auto mode = resolve_mode(diff_args);
            std::optional<SignRule> rule = diff_rule.empty()
                                               ? calibrate_sign_rule(CalibrationTarget::Eq4).rule
                                               : sign_rule_from_name(diff_rule);
            if (!rule) {
                std::cerr << "verify-diff: no usable sign rule ('" << diff_rule << "')\n";
                return 2;
            }
            return finish(diff_args, mode,
                          {verify_differential(inst.n, inst.a, *rule, mode,
                                               Budget{diff_args.budget})});
        }
        if (*cmd_region) {
            auto inst = resolve_instance(region_args);
            auto mode = resolve_mode(region_args);
            std::optional<SignRule> rule =
                region_rule.empty() ? calibrate_sign_rule(CalibrationTarget::Eq6).rule
                                    : sign_rule_from_name(region_rule);
            if (!rule) {
                std::cerr << "verify-region: no usable sign rule ('" << region_rule << "')\n";
                return 2;
            }
            return finish(region_args, mode,
                          {region_identity_check(inst.n, inst.a, region_args.max_degree,
                                                 *rule, Budget{region_args.budget})});
        }
        if (*cmd_cauchy) {
            int n = cauchy_args.n > 0 ? cauchy_args.n : 2;
            std::vector<CheckOutcome> outs{verify_cauchy(n)};
            if (cauchy_row_scaled) outs.push_back(verify_cauchy_row_scaled(n));
            return finish(cauchy_args, resolve_mode(cauchy_args), std::move(outs));
        }
        if (*cmd_chain) {
            auto inst = resolve_instance(chain_args, 1);
            return finish(chain_args, resolve_mode(chain_args),
                          {a_implies_b_chain_check(inst.n, inst.a)});
        }
        if (*cmd_red) {
            auto inst = resolve_instance(red_args);
            return finish(red_args, resolve_mode(red_args),
                          {reduction_step_check(inst.n, inst.a, Budget{red_args.budget})});
        }
        if (*cmd_cal) {
            auto eq4 = calibrate_sign_rule(CalibrationTarget::Eq4);
            auto eq6 = calibrate_sign_rule(CalibrationTarget::Eq6);
            nlohmann::ordered_json j;
            int rc = 0;
            for (const auto* cal : {&eq4, &eq6}) {
                const char* label = cal->target == CalibrationTarget::Eq4 ? "eq4" : "eq6";
                std::cout << label << ":\n";
                nlohmann::ordered_json table = nlohmann::ordered_json::array();
                for (const auto& row : cal->table) {
                    std::cout << "  " << sign_rule_name(row.rule) << "  n=" << row.n << "  "
                              << (row.pass ? "pass" : "fail") << "\n";
                    table.push_back({{"rule", sign_rule_name(row.rule)},
                                     {"n", row.n},
                                     {"pass", row.pass}});
                }
                if (cal->rule) {
                    std::cout << "  calibrated rule: " << sign_rule_name(*cal->rule) << "\n";
                    j[label]["rule"] = sign_rule_name(*cal->rule);
                } else {
                    std::cout << "  no consistent rule\n";
                    j[label]["rule"] = nullptr;
                    rc = 1;
                }
                j[label]["table"] = table;
            }
            if (!cal_args.json_path.empty()) {
                std::ofstream out(cal_args.json_path);
                out << j.dump(2) << "\n";
            }
            return rc;
        }
        if (*cmd_crit) {
            auto inst = resolve_instance(crit_args, 1);
            std::vector<ExactRational> pts;
            if (!crit_points_csv.empty()) {
                for (const std::string& tok : [&] {
                         std::vector<std::string> toks;
                         std::string cur;
                         for (char c : crit_points_csv + ",") {
                             if (c == ',') { toks.push_back(cur); cur.clear(); }
                             else cur += c;
                         }
                         return toks;
                     }()) {
                    auto slash = tok.find('/');
                    if (slash == std::string::npos)
                        pts.emplace_back(BigInt(tok));
                    else
                        pts.emplace_back(BigInt(tok.substr(0, slash)),
                                         BigInt(tok.substr(slash + 1)));
                }
            }
            CriticalSpec spec(inst.n, inst.a, pts);
            std::cout << "p(Z) = " << to_string(build_p(spec)) << "\n";
            auto vals = critical_values(spec);
            for (int j = 1; j <= inst.n; ++j)
                std::cout << "p(z" << j << ") = " << to_string(vals[j - 1]) << "\n";
            if (spec.symbolic()) {
                Polynomial det = det_cofactor(jacobian_direct(spec));
                std::cout << "det J = " << to_string(det) << "\n";
                std::cout << "closed form = " << to_string(theorem_b_rhs(inst.n, inst.a))
                          << "\n";
            }
            return 0;
        }
        if (*cmd_sweep) {
            SuiteConfig cfg;
            auto [lo, hi] = parse_n_range(sweep_n);
            cfg.n_min = lo;
            cfg.n_max = hi;
            cfg.a_max = a_max;
            cfg.b_max = b_max;
            cfg.mode = resolve_mode(sweep_args);
            cfg.budget = sweep_args.budget;
            cfg.max_basis_degree = sweep_args.max_degree;
            cfg.output_path = sweep_args.json_path;
            if (!sweep_checks.empty()) {
                std::string cur;
                for (char c : sweep_checks + ",") {
                    if (c == ',') {
                        if (!cur.empty()) cfg.checks.push_back(cur);
                        cur.clear();
                    } else cur += c;
                }
            }
            SuiteReport r = run_suite(cfg);
            for (const auto& o : r.cases) print_outcome(o);
            std::cout << "summary: " << r.summary.pass << " pass, " << r.summary.fail
                      << " fail, " << r.summary.skipped << " skipped ("
                      << r.elapsed_ms << " ms)\n";
            return r.summary.fail == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << app.help();
    return 0;
}
