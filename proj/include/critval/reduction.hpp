/**
 * @brief Mechanized steps of the induction on n: the boundary terms
 *        produced by the Fundamental Theorem of Calculus, and the change
 *        of variables that turns the box [z1, z_j] integral into a
 *        lower-dimensional instance of the multi-integral identity with
 *        b = a1.
 */
#pragma once

#include "critval/region.hpp"
#include "critval/theorem_a.hpp"

namespace critval {

/// The FTC evaluation of prod_j (x_i - z_j)^{a_j + 1}
/// * prod_j prod_{i' != i} (x_{i'} - z_j)^{a_j} between x_i = 0 and
/// x_i = z_i: the upper term vanishes outright (exponent a_i + 1 >= 1 at
/// x_i = z_i) and the difference is minus the lower term.
inline CheckOutcome boundary_term_check(int n, const std::vector<int>& a, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("boundary_term_check: index out of range");
    IdentityInstance inst(n, a, 0);
    return run_check("boundary", inst, CheckMode::symbolic(), [&]() -> std::string {
        Polynomial bracket(1);
        for (int j = 1; j <= n; ++j)
            bracket *= pow(Polynomial::variable(var_x(i)) - Polynomial::variable(var_z(j)),
                           a[j - 1] + 1);
        Polynomial rest(1);
        for (int j = 1; j <= n; ++j)
            for (int ip = 1; ip <= n; ++ip) {
                if (ip == i) continue;
                rest *= pow(Polynomial::variable(var_x(ip)) - Polynomial::variable(var_z(j)),
                            a[j - 1]);
            }
        Polynomial whole = bracket * rest;
        Polynomial upper = substitute(whole, var_x(i), Polynomial::variable(var_z(i)));
        if (!upper.is_zero())
            return "upper substitution x" + std::to_string(i) + " = z" + std::to_string(i) +
                   " did not vanish: " + witness_text(upper);
        Polynomial lower = substitute(whole, var_x(i), Polynomial(0));
        Polynomial expected(-1);
        for (int j = 1; j <= n; ++j)
            expected *= pow(-Polynomial::variable(var_z(j)), a[j - 1] + 1);
        expected *= rest;
        Polynomial diff = (upper - lower) - expected;
        return diff.is_zero() ? "" : witness_text(diff);
    });
}

/// Right side of the collapsed region identity, after shifting y by z1,
/// against the closed form of the (n-1)-dimensional instance with
/// b = a1, multiplicities (a2..an), and parameters (z2-z1, ..., zn-z1).
inline CheckOutcome reduction_step_check(int n, const std::vector<int>& a,
                                         Budget budget = {}) {
    if (n < 2) throw std::invalid_argument("reduction_step_check: requires n >= 2");
    IdentityInstance inst(n, a, 0);
    return run_check("reduction", inst, CheckMode::symbolic(), [&]() -> std::string {
        Polynomial g = region_integrand(n, a);
        budget.check(g, "reduction_step_check");
        std::vector<int> rest;
        for (int j = 2; j <= n; ++j) rest.push_back(j);
        Polynomial actual =
            detail::integrate_y_box(g, Polynomial::variable(var_z(1)), rest);
        budget.check(actual, "reduction_step_check");

        std::vector<int> reduced_a(a.begin() + 1, a.end());
        Polynomial closed = theorem_a_rhs(IdentityInstance(n - 1, reduced_a, a[0]));
        // substitute z_k -> z_{k+1} - z_1 through fresh temporaries so the
        // introduced z_1 is not rewritten by later substitutions
        for (int k = 1; k < n; ++k)
            closed = substitute(closed, var_z(k),
                                Polynomial::variable(var_y(100 + k)));
        for (int k = 1; k < n; ++k)
            closed = substitute(closed, var_y(100 + k),
                                Polynomial::variable(var_z(k + 1)) -
                                    Polynomial::variable(var_z(1)));
        Polynomial diff = actual - closed;
        return diff.is_zero() ? "" : witness_text(diff);
    });
}

}  // namespace critval
