/**
 * @brief The b-recurrence satisfied by both sides of the multi-integral
 *        identity:
 *
 *   X(a; b+1) = sum_i ( prod_{j != i} z_j/(z_j - z_i) ) * X(a + e_i; b)
 *             + ( prod_j z_j ) * X(a; b)
 *
 * checked either with X = the closed form (value level) or X = the
 * unintegrated integrand (integrand level).  Denominators are cleared by
 * the fixed multiplier D = prod_{i<j} (z_j - z_i)^2, so the comparison is
 * between polynomials wrapped in a single RationalFunction over D.
 */
#pragma once

#include "critval/theorem_a.hpp"

namespace critval {

enum class RecurrenceLevel { Value, Integrand };

using InstanceBuilder = std::function<Polynomial(const IdentityInstance&)>;

/// D = prod_{i<j} (z_j - z_i)^2.
inline Polynomial recurrence_denominator(int n) {
    Polynomial d(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            d *= pow(Polynomial::variable(var_z(j)) - Polynomial::variable(var_z(i)), 2);
    return d;
}

/// D / prod_{j != i} (z_j - z_i), built directly as a product:
/// (-1)^(i-1) * prod_{j<i}(z_i - z_j) * prod_{j>i}(z_j - z_i)
///            * prod_{k<l, k,l != i}(z_l - z_k)^2.
inline Polynomial recurrence_cofactor(int n, int i) {
    Polynomial c(((i - 1) % 2 == 0) ? 1 : -1);
    for (int j = 1; j < i; ++j)
        c *= Polynomial::variable(var_z(i)) - Polynomial::variable(var_z(j));
    for (int j = i + 1; j <= n; ++j)
        c *= Polynomial::variable(var_z(j)) - Polynomial::variable(var_z(i));
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        for (int l = k + 1; l <= n; ++l) {
            if (l == i) continue;
            c *= pow(Polynomial::variable(var_z(l)) - Polynomial::variable(var_z(k)), 2);
        }
    }
    return c;
}

/// Right side of the recurrence for the given X builder, over denominator D.
inline RationalFunction recurrence_rhs_value(const IdentityInstance& inst,
                                             const InstanceBuilder& side_fn) {
    const int n = inst.n;
    Polynomial den = recurrence_denominator(n);
    Polynomial num;
    for (int i = 1; i <= n; ++i) {
        Polynomial zprod(1);
        for (int j = 1; j <= n; ++j)
            if (j != i) zprod *= Polynomial::variable(var_z(j));
        std::vector<int> bumped = inst.a;
        bumped[i - 1] += 1;
        num += zprod * recurrence_cofactor(n, i) *
               side_fn(IdentityInstance(n, bumped, inst.b));
    }
    Polynomial all_z(1);
    for (int j = 1; j <= n; ++j) all_z *= Polynomial::variable(var_z(j));
    num += all_z * side_fn(inst) * den;
    return {num, den};
}

inline CheckOutcome verify_recurrence(const IdentityInstance& inst, RecurrenceLevel level,
                                      const CheckMode& mode, Budget budget = {}) {
    const std::string name =
        level == RecurrenceLevel::Value ? "recurrence-value" : "recurrence-integrand";
    return run_check(name, inst, mode, [&]() -> std::string {
        InstanceBuilder side_fn =
            level == RecurrenceLevel::Value
                ? InstanceBuilder([](const IdentityInstance& i) { return theorem_a_rhs(i); })
                : InstanceBuilder([budget](const IdentityInstance& i) {
                      return theorem_a_integrand(i, budget);
                  });
        IdentityInstance bumped_b(inst.n, inst.a, inst.b + 1);
        Polynomial lhs = side_fn(bumped_b);
        RationalFunction rhs = recurrence_rhs_value(inst, side_fn);
        budget.check(rhs.num(), "verify_recurrence");
        if (mode.kind == CheckKind::Symbolic) {
            Polynomial diff = lhs * rhs.den() - rhs.num();
            return diff.is_zero() ? "" : witness_text(diff);
        }
        std::vector<VariableId> vars = z_variables(inst.n);
        if (level == RecurrenceLevel::Integrand)
            for (int i = 1; i <= inst.n; ++i) vars.push_back(var_x(i));
        std::mt19937_64 rng(derive_seed(mode.seed, name, inst));
        const int pts = auto_points(mode, lhs.degree() + rhs.den().degree());
        for (int p = 0; p < pts; ++p) {
            auto point = sample_point(rng, vars);
            ExactRational dv = evaluate(rhs.den(), point);
            if (dv.is_zero()) { --p; continue; }  // resample on denominator vanish
            if (evaluate(lhs, point) * dv != evaluate(rhs.num(), point))
                return "point {" + describe_point(point) + "}: sides differ";
        }
        return "";
    });
}

}  // namespace critval
