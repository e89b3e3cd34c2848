/**
 * @brief The divergence-style differential identity behind the induction
 *        on n:
 *
 *   (n + sum a_i) * F * V(x1..xn)
 *     = sum_i s(i) * V(x1..x(i-1), x(i+1)..xn)
 *              * d/dx_i [ prod_j (x_i - z_j) * F ]
 *
 * with F = prod_{j,k} (x_j - z_k)^{a_k}.  The alternating sign s(i) is an
 * explicit parameter: a literal (-1)^i fails at n = 1, so the correct
 * convention is determined empirically by calibrate_sign_rule and pinned
 * in a golden file rather than guessed.
 */
#pragma once

#include "critval/theorem_a.hpp"

namespace critval {

enum class SignRule { MinusOneToI, MinusOneToIPlus1, MinusOneToNMinusI };

inline int apply_sign(SignRule rule, int n, int i) {
    int e = 0;
    switch (rule) {
        case SignRule::MinusOneToI: e = i; break;
        case SignRule::MinusOneToIPlus1: e = i + 1; break;
        case SignRule::MinusOneToNMinusI: e = n - i; break;
    }
    return (e % 2 == 0) ? 1 : -1;
}

inline const char* sign_rule_name(SignRule rule) {
    switch (rule) {
        case SignRule::MinusOneToI: return "(-1)^i";
        case SignRule::MinusOneToIPlus1: return "(-1)^(i+1)";
        case SignRule::MinusOneToNMinusI: return "(-1)^(n-i)";
    }
    return "?";
}

inline const std::vector<SignRule>& all_sign_rules() {
    static const std::vector<SignRule> rules{SignRule::MinusOneToI, SignRule::MinusOneToIPlus1,
                                            SignRule::MinusOneToNMinusI};
    return rules;
}

inline std::optional<SignRule> sign_rule_from_name(const std::string& name) {
    for (SignRule r : all_sign_rules())
        if (name == sign_rule_name(r)) return r;
    return std::nullopt;
}

/// F = prod_{1<=j,k<=n} (x_j - z_k)^{a_k}.
inline Polynomial differential_f(int n, const std::vector<int>& a) {
    Polynomial f(1);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            f *= pow(Polynomial::variable(var_x(j)) - Polynomial::variable(var_z(k)), a[k - 1]);
    return f;
}

inline std::pair<Polynomial, Polynomial> differential_identity_sides(
    int n, const std::vector<int>& a, SignRule sign_rule) {
    if (n < 1 || static_cast<int>(a.size()) != n)
        throw std::invalid_argument("differential_identity_sides: need len(a) = n >= 1");
    Polynomial f = differential_f(n, a);
    std::vector<VariableId> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(var_x(i));
    int asum = 0;
    for (int ai : a) asum += ai;

    Polynomial left = ExactRational(n + asum) * f * vandermonde_product(xs);

    Polynomial right;
    for (int i = 1; i <= n; ++i) {
        Polynomial bracket = f;
        for (int j = 1; j <= n; ++j)
            bracket *= Polynomial::variable(var_x(i)) - Polynomial::variable(var_z(j));
        std::vector<VariableId> xs_without;
        for (int k = 1; k <= n; ++k)
            if (k != i) xs_without.push_back(var_x(k));
        Polynomial term = vandermonde_product(xs_without) * derivative(bracket, var_x(i));
        right += ExactRational(apply_sign(sign_rule, n, i)) * term;
    }
    return {left, right};
}

inline CheckOutcome verify_differential(int n, const std::vector<int>& a, SignRule sign_rule,
                                        const CheckMode& mode, Budget budget = {}) {
    IdentityInstance inst(n, a, 0);
    return run_check("differential", inst, mode, [&]() -> std::string {
        auto [left, right] = differential_identity_sides(n, a, sign_rule);
        budget.check(left, "verify_differential");
        budget.check(right, "verify_differential");
        if (mode.kind == CheckKind::Symbolic) {
            Polynomial diff = left - right;
            return diff.is_zero() ? "" : witness_text(diff);
        }
        std::vector<VariableId> vars = z_variables(n);
        for (int i = 1; i <= n; ++i) vars.push_back(var_x(i));
        std::mt19937_64 rng(derive_seed(mode.seed, "differential", inst));
        const int pts = auto_points(mode, left.degree());
        for (int p = 0; p < pts; ++p) {
            auto point = sample_point(rng, vars);
            if (evaluate(left, point) != evaluate(right, point))
                return "point {" + describe_point(point) + "}: sides differ";
        }
        return "";
    });
}

}  // namespace critval
