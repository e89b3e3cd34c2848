/**
 * @brief The region identities relating the signed union of coordinate
 *        boxes [0, z_pi(.)] to the single box with lower corner z1:
 *
 *   sum_i s(i) sum_{pi in A_n(i)} sgn(pi)
 *       int_0^{z_pi(.)} ... f(y1..y(n-1)) dy
 *   = sum_{pi in A_n(1)} sgn(pi) int_{z1}^{z_pi(.)} ... f(y1..y(n-1)) dy
 *
 * (valid for any integrand), plus the collapsed single-permutation form
 * whose integrand is the antisymmetric V(y) * prod (y_i - z_j)^{a_j};
 * each permutation-summed side is (n-1)! times its collapsed counterpart.
 */
#pragma once

#include "critval/differential.hpp"

#include <algorithm>

namespace critval {

namespace detail {

/// Parity of a permutation word relative to its sorted order: +1 / -1.
inline int word_sign(const std::vector<int>& word) {
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Iterated integral of f: y_k runs between lower and z_{upper[k-1]}.
inline Polynomial integrate_y_box(const Polynomial& f, const Polynomial& lower,
                                  const std::vector<int>& upper) {
    Polynomial r = f;
    for (int k = static_cast<int>(upper.size()); k >= 1; --k)
        r = definite_integral(r, var_y(k), lower,
                              Polynomial::variable(var_z(upper[k - 1])));
    return r;
}

/// All orderings of the set {1..n} \ {skip}.
inline std::vector<std::vector<int>> arrangements(int n, int skip) {
    std::vector<int> base;
    for (int j = 1; j <= n; ++j)
        if (j != skip) base.push_back(j);
    std::vector<std::vector<int>> out;
    std::sort(base.begin(), base.end());
    do out.push_back(base); while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace detail

/// Both sides of the permutation-summed region identity for an arbitrary
/// integrand f in y1..y(n-1).  n = 1 degenerates to s(1)*f = f.
inline std::pair<Polynomial, Polynomial> region_sum_sides(int n, const Polynomial& f,
                                                          SignRule sign_rule) {
    Polynomial left;
    for (int i = 1; i <= n; ++i) {
        Polynomial inner;
        for (const auto& word : detail::arrangements(n, i))
            inner += ExactRational(detail::word_sign(word)) *
                     detail::integrate_y_box(f, Polynomial(0), word);
        left += ExactRational(apply_sign(sign_rule, n, i)) * inner;
    }
    Polynomial right;
    for (const auto& word : detail::arrangements(n, 1))
        right += ExactRational(detail::word_sign(word)) *
                 detail::integrate_y_box(f, Polynomial::variable(var_z(1)), word);
    return {left, right};
}

/// The antisymmetric integrand V(y1..y(n-1)) * prod_{j<=n, i<=n-1} (y_i - z_j)^{a_j}.
inline Polynomial region_integrand(int n, const std::vector<int>& a) {
    std::vector<VariableId> ys;
    for (int i = 1; i < n; ++i) ys.push_back(var_y(i));
    Polynomial g = vandermonde_product(ys);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < n; ++i)
            g *= pow(Polynomial::variable(var_y(i)) - Polynomial::variable(var_z(j)),
                     a[j - 1]);
    return g;
}

/// The collapsed (single-permutation) sides with the actual antisymmetric
/// integrand: identity ordering on the left boxes, box [z1, z_j] on the right.
inline std::pair<Polynomial, Polynomial> region_single_sides(int n, const std::vector<int>& a,
                                                             SignRule sign_rule) {
    Polynomial g = region_integrand(n, a);
    Polynomial left;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> sorted_rest;
        for (int j = 1; j <= n; ++j)
            if (j != i) sorted_rest.push_back(j);
        left += ExactRational(apply_sign(sign_rule, n, i)) *
                detail::integrate_y_box(g, Polynomial(0), sorted_rest);
    }
    std::vector<int> rest;
    for (int j = 2; j <= n; ++j) rest.push_back(j);
    Polynomial right = detail::integrate_y_box(g, Polynomial::variable(var_z(1)), rest);
    return {left, right};
}

namespace detail {

/// Monomials in y1..y(nvars) of total degree <= max_degree.
inline void enumerate_y_monomials(int nvars, int max_degree, std::vector<int>& exps,
                                  std::vector<Polynomial>& out) {
    if (static_cast<int>(exps.size()) == nvars) {
        Monomial m;
        for (int i = 0; i < nvars; ++i)
            m = m * Monomial::var(var_y(i + 1), exps[i]);
        out.push_back(Polynomial::term(m, ExactRational(1)));
        return;
    }
    int used = 0;
    for (int e : exps) used += e;
    for (int e = 0; e <= max_degree - used; ++e) {
        exps.push_back(e);
        enumerate_y_monomials(nvars, max_degree, exps, out);
        exps.pop_back();
    }
}

}  // namespace detail

inline std::vector<Polynomial> y_monomial_basis(int nvars, int max_degree) {
    std::vector<Polynomial> out;
    std::vector<int> exps;
    detail::enumerate_y_monomials(nvars, max_degree, exps, out);
    return out;
}

/// Integrand-independent check on a full monomial basis, then the
/// antisymmetric-integrand identity, then the (n-1)! relation between the
/// permutation-summed sides and the collapsed sides.
inline CheckOutcome region_identity_check(int n, const std::vector<int>& a,
                                          int max_basis_degree, SignRule sign_rule,
                                          Budget budget = {}) {
    if (n < 2) throw std::invalid_argument("region_identity_check: requires n >= 2");
    IdentityInstance inst(n, a, 0);
    return run_check("region", inst, CheckMode::symbolic(), [&]() -> std::string {
        for (const Polynomial& mono : y_monomial_basis(n - 1, max_basis_degree)) {
            auto [l, r] = region_sum_sides(n, mono, sign_rule);
            if (!(l - r).is_zero())
                return "monomial-basis case " + to_string(mono) + ": " + witness_text(l - r);
        }
        auto [l5, r5] = region_single_sides(n, a, sign_rule);
        budget.check(l5, "region_identity_check");
        if (!(l5 - r5).is_zero())
            return "antisymmetric integrand: " + witness_text(l5 - r5);
        auto [l6, r6] = region_sum_sides(n, region_integrand(n, a), sign_rule);
        ExactRational fact(factorial(n - 1));
        if (!(l6 - fact * l5).is_zero())
            return "(n-1)! relation fails on left sides";
        if (!(r6 - fact * r5).is_zero())
            return "(n-1)! relation fails on right sides";
        return "";
    });
}

/// Calibration target: which identity a sign rule is being fitted to.
enum class CalibrationTarget { Eq4, Eq6 };

struct CalibrationRow {
    SignRule rule;
    int n;
    bool pass;
};

struct CalibrationResult {
    CalibrationTarget target;
    std::vector<CalibrationRow> table;
    std::optional<SignRule> rule;  // unique-or-first rule passing every n, if any
};

/// Runs the identity for n = 1..4 at small a under each candidate sign
/// rule.  If no rule passes everywhere the per-n pattern is still returned
/// in the table; callers must report that, never patch it.
inline CalibrationResult calibrate_sign_rule(CalibrationTarget target) {
    CalibrationResult result;
    result.target = target;
    for (SignRule rule : all_sign_rules()) {
        bool all_pass = true;
        for (int n = 1; n <= 4; ++n) {
            bool pass = true;
            std::vector<std::vector<int>> a_configs{std::vector<int>(n, 0),
                                                    std::vector<int>(n, 1)};
            if (target == CalibrationTarget::Eq4) {
                for (const auto& a : a_configs) {
                    auto [l, r] = differential_identity_sides(n, a, rule);
                    if (!(l - r).is_zero()) { pass = false; break; }
                }
            } else {
                for (const Polynomial& mono : y_monomial_basis(n - 1, 2)) {
                    auto [l, r] = region_sum_sides(n, mono, rule);
                    if (!(l - r).is_zero()) { pass = false; break; }
                }
            }
            result.table.push_back({rule, n, pass});
            all_pass = all_pass && pass;
        }
        if (all_pass && !result.rule) result.rule = rule;
    }
    return result;
}

}  // namespace critval
