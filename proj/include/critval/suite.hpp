/**
 * @brief Suite orchestration: grid generation over (n, a, b), dispatch to
 *        the individual identity checks, and deterministic report
 *        assembly ordered by (check name, instance).
 */
#pragma once

#include "critval/cauchy.hpp"
#include "critval/chain.hpp"
#include "critval/critpoly.hpp"
#include "critval/recurrence.hpp"
#include "critval/reduction.hpp"
#include "critval/region.hpp"
#include "critval/report.hpp"
#include "critval/theorem_a.hpp"

namespace critval {

struct CheckInfo {
    std::string id;
    std::string description;
};

/// Every suite-runnable check, with the identity it exercises.
inline const std::vector<CheckInfo>& all_checks() {
    static const std::vector<CheckInfo> infos{
        {"theorem-a", "multi-integral closed form, Eq. (1)"},
        {"theorem-b", "critical-value Jacobian determinant, Eq. (2)"},
        {"recurrence-value", "b-recurrence on the closed form, Eq. (3)"},
        {"recurrence-integrand", "b-recurrence on the unintegrated integrand, Eq. (3)"},
        {"differential", "divergence identity under the calibrated sign rule, Eq. (4)"},
        {"region", "signed box-union identity on a monomial basis, Eqs. (5)/(6)"},
        {"cauchy", "alternant determinant vs closed form"},
        {"cauchy-row-scaled", "denominator-free alternant variant"},
        {"boundary", "FTC boundary terms of the induction on n"},
        {"reduction", "change-of-variables reduction to dimension n-1"},
        {"chain", "closed-form simplification linking Eq. (1) to Eq. (2)"},
    };
    return infos;
}

inline bool is_known_check(const std::string& id) {
    for (const auto& c : all_checks())
        if (c.id == id) return true;
    return false;
}

namespace detail {

inline std::vector<std::vector<int>> a_grid(int n, int a_min, int a_max) {
    std::vector<std::vector<int>> out;
    if (a_max < a_min) return out;
    std::vector<int> cur(n, a_min);
    for (;;) {
        out.push_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[k] == a_max) cur[k--] = a_min;
        if (k < 0) break;
        ++cur[k];
    }
    return out;
}

inline bool instance_less(const CheckOutcome& a, const CheckOutcome& b) {
    if (a.name != b.name) return a.name < b.name;
    if (a.instance.n != b.instance.n) return a.instance.n < b.instance.n;
    if (a.instance.a != b.instance.a) return a.instance.a < b.instance.a;
    return a.instance.b < b.instance.b;
}

}  // namespace detail

inline SuiteReport run_suite(SuiteConfig cfg) {
    cfg.validate();
    if (cfg.checks.empty())
        for (const auto& c : all_checks()) cfg.checks.push_back(c.id);
    for (const auto& id : cfg.checks)
        if (!is_known_check(id)) throw std::invalid_argument("unknown check: " + id);

    const Budget budget{cfg.budget};
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport report;
    report.seed = cfg.mode.seed;
    report.config = cfg;

    // both calibrations are cheap and deterministic; resolve them once
    std::optional<SignRule> eq4_rule, eq6_rule;
    auto need = [&](const char* id) {
        return std::find(cfg.checks.begin(), cfg.checks.end(), id) != cfg.checks.end();
    };
    if (need("differential")) eq4_rule = calibrate_sign_rule(CalibrationTarget::Eq4).rule;
    if (need("region")) eq6_rule = calibrate_sign_rule(CalibrationTarget::Eq6).rule;

    for (const std::string& id : cfg.checks) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            if (id == "theorem-a") {
                for (const auto& a : detail::a_grid(n, 0, cfg.a_max))
                    for (int b = 0; b <= cfg.b_max; ++b)
                        report.cases.push_back(
                            verify_theorem_a(IdentityInstance(n, a, b), cfg.mode, budget));
            } else if (id == "theorem-b") {
                for (const auto& a : detail::a_grid(n, 1, cfg.a_max))
                    report.cases.push_back(verify_theorem_b(n, a, cfg.mode, budget));
            } else if (id == "recurrence-value" || id == "recurrence-integrand") {
                RecurrenceLevel level = id == "recurrence-value" ? RecurrenceLevel::Value
                                                                 : RecurrenceLevel::Integrand;
                for (const auto& a : detail::a_grid(n, 0, cfg.a_max))
                    for (int b = 0; b <= std::min(cfg.b_max, 1); ++b)
                        report.cases.push_back(verify_recurrence(IdentityInstance(n, a, b),
                                                                 level, cfg.mode, budget));
            } else if (id == "differential") {
                for (const auto& a : detail::a_grid(n, 0, cfg.a_max)) {
                    if (!eq4_rule) {
                        CheckOutcome o;
                        o.name = id;
                        o.instance = IdentityInstance(n, a, 0);
                        o.mode = cfg.mode;
                        o.status = CheckStatus::Fail;
                        o.witness = "no consistent sign rule from calibration";
                        report.cases.push_back(o);
                        continue;
                    }
                    report.cases.push_back(
                        verify_differential(n, a, *eq4_rule, cfg.mode, budget));
                }
            } else if (id == "region") {
                if (n < 2) continue;
                for (const auto& a : detail::a_grid(n, 0, std::min(cfg.a_max, 1))) {
                    if (!eq6_rule) {
                        CheckOutcome o;
                        o.name = id;
                        o.instance = IdentityInstance(n, a, 0);
                        o.mode = cfg.mode;
                        o.status = CheckStatus::Fail;
                        o.witness = "no consistent sign rule from calibration";
                        report.cases.push_back(o);
                        continue;
                    }
                    report.cases.push_back(region_identity_check(
                        n, a, cfg.max_basis_degree, *eq6_rule, budget));
                }
            } else if (id == "cauchy") {
                report.cases.push_back(verify_cauchy(n));
            } else if (id == "cauchy-row-scaled") {
                report.cases.push_back(verify_cauchy_row_scaled(n));
            } else if (id == "boundary") {
                for (const auto& a : detail::a_grid(n, 0, cfg.a_max)) {
                    CheckOutcome combined;
                    for (int i = 1; i <= n; ++i) {
                        combined = boundary_term_check(n, a, i);
                        if (combined.status != CheckStatus::Pass) break;
                    }
                    report.cases.push_back(combined);
                }
            } else if (id == "reduction") {
                if (n < 2) continue;
                for (const auto& a : detail::a_grid(n, 0, cfg.a_max))
                    report.cases.push_back(reduction_step_check(n, a, budget));
            } else if (id == "chain") {
                for (const auto& a : detail::a_grid(n, 1, cfg.a_max))
                    report.cases.push_back(a_implies_b_chain_check(n, a));
            }
        }
    }

    std::sort(report.cases.begin(), report.cases.end(), detail::instance_less);
    for (const auto& c : report.cases) {
        if (c.status == CheckStatus::Pass) ++report.summary.pass;
        else if (c.status == CheckStatus::Fail) ++report.summary.fail;
        else ++report.summary.skipped;
    }
    auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (!cfg.output_path.empty()) write_report(report, cfg.output_path);
    return report;
}

}  // namespace critval
