/**
 * @brief The multi-integral identity: both sides of
 *
 *   int_0^{z1} ... int_0^{zn}  prod_i x_i^b
 *       * prod_{j,k} (x_j - z_k)^{a_k} * prod_{i<j} (x_j - x_i)
 *       dx_n ... dx_1
 *   = (-1)^abar * prod_{i<j} (z_j - z_i)^{a_i+a_j+1}
 *       * prod_i z_i^{a_i+b+1} * b! prod_i a_i! / (n + b + sum a_i)!
 *
 * built as canonical polynomials in z1..zn and compared exactly.
 */
#pragma once

#include "critval/engine.hpp"
#include "critval/linalg.hpp"

namespace critval {

/// The unintegrated integrand, a polynomial in x1..xn and z1..zn.
inline Polynomial theorem_a_integrand(const IdentityInstance& inst, Budget budget = {}) {
    const int n = inst.n;
    Polynomial p(1);
    for (int j = 1; j <= n; ++j) {
        Polynomial xj = Polynomial::variable(var_x(j));
        p *= pow(xj, inst.b);
        for (int k = 1; k <= n; ++k)
            p *= pow(xj - Polynomial::variable(var_z(k)), inst.a[k - 1]);
        budget.check(p, "theorem_a_integrand");
    }
    std::vector<VariableId> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(var_x(i));
    p *= vandermonde_product(xs);
    budget.check(p, "theorem_a_integrand");
    return p;
}

/// Iterated integration of `integrand`: variable x_i over [0, z_i], in the
/// given order (first listed is integrated first).  The result of the full
/// Theorem A integral is order-independent since no bound mentions an x.
inline Polynomial integrate_box(Polynomial integrand, const std::vector<int>& order,
                                Budget budget = {}) {
    for (int i : order) {
        integrand = definite_integral(integrand, var_x(i), Polynomial(0),
                                      Polynomial::variable(var_z(i)));
        budget.check(integrand, "integrate_box");
    }
    return integrand;
}

namespace detail {

/// x_j^b * prod_k (x_j - z_k)^{a_k}, the factor of the integrand that
/// involves only x_j (plus the z's).
inline Polynomial integrand_factor(const IdentityInstance& inst, int j, Budget budget) {
    Polynomial xj = Polynomial::variable(var_x(j));
    Polynomial p = pow(xj, inst.b);
    for (int k = 1; k <= inst.n; ++k)
        p *= pow(xj - Polynomial::variable(var_z(k)), inst.a[k - 1]);
    budget.check(p, "integrand_factor");
    return p;
}

}  // namespace detail

/// Iterated integral of the full integrand.  Since the factor for x_j is
/// constant with respect to every other x, it is multiplied in only when
/// x_j itself is about to be integrated; this keeps intermediates small
/// but computes exactly the integral of theorem_a_integrand.
inline Polynomial theorem_a_lhs(const IdentityInstance& inst, Budget budget = {}) {
    std::vector<VariableId> xs;
    for (int i = 1; i <= inst.n; ++i) xs.push_back(var_x(i));
    Polynomial p = vandermonde_product(xs);
    for (int i = inst.n; i >= 1; --i) {
        p *= detail::integrand_factor(inst, i, budget);
        budget.check(p, "theorem_a_lhs");
        p = definite_integral(p, var_x(i), Polynomial(0), Polynomial::variable(var_z(i)));
        budget.check(p, "theorem_a_lhs");
    }
    return p;
}

inline Polynomial theorem_a_rhs(const IdentityInstance& inst) {
    const int n = inst.n;
    Polynomial p((inst.abar() % 2 == 0) ? 1 : -1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            p *= pow(Polynomial::variable(var_z(j)) - Polynomial::variable(var_z(i)),
                     inst.a[i - 1] + inst.a[j - 1] + 1);
    for (int i = 1; i <= n; ++i)
        p *= pow(Polynomial::variable(var_z(i)), inst.a[i - 1] + inst.b + 1);
    BigInt num = factorial(inst.b);
    for (int ai : inst.a) num *= factorial(ai);
    BigInt den = factorial(n + inst.b + inst.a_sum());
    return p * ExactRational(num, den);
}

/// Left side at an exact rational z-point: substitute the z values into the
/// integrand first, then run the iterated integration with constant bounds.
inline ExactRational theorem_a_lhs_at(const IdentityInstance& inst,
                                      const std::map<VariableId, ExactRational>& zpoint,
                                      Budget budget = {}) {
    std::vector<VariableId> xs;
    for (int i = 1; i <= inst.n; ++i) xs.push_back(var_x(i));
    Polynomial p = vandermonde_product(xs);
    for (int i = inst.n; i >= 1; --i) {
        Polynomial f = detail::integrand_factor(inst, i, budget);
        for (int k = 1; k <= inst.n; ++k)
            f = substitute(f, var_z(k), Polynomial(zpoint.at(var_z(k))));
        p *= f;
        p = definite_integral(p, var_x(i), Polynomial(0), Polynomial(zpoint.at(var_z(i))));
        budget.check(p, "theorem_a_lhs_at");
    }
    return p.constant_term();
}

inline CheckOutcome verify_theorem_a(const IdentityInstance& inst, const CheckMode& mode,
                                     Budget budget = {}) {
    return run_check("theorem-a", inst, mode, [&]() -> std::string {
        Polynomial rhs = theorem_a_rhs(inst);
        if (mode.kind == CheckKind::Symbolic) {
            Polynomial diff = theorem_a_lhs(inst, budget) - rhs;
            return diff.is_zero() ? "" : witness_text(diff);
        }
        std::mt19937_64 rng(derive_seed(mode.seed, "theorem-a", inst));
        const int pts = auto_points(mode, rhs.degree());
        for (int p = 0; p < pts; ++p) {
            auto point = sample_point(rng, z_variables(inst.n));
            ExactRational lhs = theorem_a_lhs_at(inst, point, budget);
            ExactRational r = evaluate(rhs, point);
            if (lhs != r)
                return "point {" + describe_point(point) + "}: lhs=" + lhs.str() +
                       " rhs=" + r.str();
        }
        return "";
    });
}

}  // namespace critval
