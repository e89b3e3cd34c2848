/**
 * @brief Polynomials with prescribed critical points.
 *
 * p(Z) = int_0^Z prod_i (w - z_i)^{a_i} dw has a critical point of
 * multiplicity a_i at each z_i; the Jacobian of the critical values
 * p(z_j) with respect to the critical points z_i has the closed-form
 * determinant
 *
 *   det J = prod a_i! / (sum a_i)! * prod (-z_i)^{a_i}
 *           * prod_{i != j} (z_i - z_j)^{a_j}.
 *
 * The Jacobian is built two independent ways (direct partials of the
 * composed polynomial, and the division-free integral rewrite with
 * exponent a_i - 1) and the two paths are cross-checked.
 */
#pragma once

#include "critval/engine.hpp"
#include "critval/linalg.hpp"

namespace critval {

struct CriticalSpec {
    int n = 1;
    std::vector<int> multiplicities;
    // empty -> symbolic z-variables; otherwise n pairwise distinct values
    std::vector<ExactRational> points;

    CriticalSpec(int n_, std::vector<int> mult, std::vector<ExactRational> pts = {})
        : n(n_), multiplicities(std::move(mult)), points(std::move(pts)) {
        if (n < 1 || static_cast<int>(multiplicities.size()) != n)
            throw std::invalid_argument("CriticalSpec: need len(multiplicities) = n >= 1");
        for (int m : multiplicities)
            if (m < 1)
                throw TheoremBRequiresPositiveMultiplicity(
                    "CriticalSpec: multiplicities must be >= 1");
        if (!points.empty()) {
            if (static_cast<int>(points.size()) != n)
                throw std::invalid_argument("CriticalSpec: need n rational points");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (points[i] == points[j])
                        throw std::invalid_argument("CriticalSpec: points must be distinct");
        }
    }

    bool symbolic() const { return points.empty(); }
    int mult_sum() const {
        int s = 0;
        for (int m : multiplicities) s += m;
        return s;
    }
};

/// p'(Z) = prod_i (Z - z_i)^{a_i}, symbolic z.
inline Polynomial critical_derivative(const CriticalSpec& spec) {
    Polynomial d(1);
    for (int i = 1; i <= spec.n; ++i)
        d *= pow(Polynomial::variable(var_Z()) - Polynomial::variable(var_z(i)),
                 spec.multiplicities[i - 1]);
    return d;
}

/// p(Z) itself: antiderivative of p' in w with p(0) = 0, expressed in Z.
/// Rational points substitute into the same symbolic pipeline.
inline Polynomial build_p(const CriticalSpec& spec) {
    Polynomial dw(1);
    for (int i = 1; i <= spec.n; ++i)
        dw *= pow(Polynomial::variable(var_w()) - Polynomial::variable(var_z(i)),
                  spec.multiplicities[i - 1]);
    Polynomial p = substitute(antiderivative(dw, var_w()), var_w(),
                              Polynomial::variable(var_Z()));
    if (!spec.symbolic())
        for (int i = 1; i <= spec.n; ++i)
            p = substitute(p, var_z(i), Polynomial(spec.points[i - 1]));
    return p;
}

/// jth entry: p evaluated at the jth critical point.
inline std::vector<Polynomial> critical_values(const CriticalSpec& spec) {
    Polynomial p = build_p(spec);
    std::vector<Polynomial> vals;
    for (int j = 1; j <= spec.n; ++j) {
        Polynomial at = spec.symbolic() ? Polynomial::variable(var_z(j))
                                        : Polynomial(spec.points[j - 1]);
        vals.push_back(substitute(p, var_Z(), at));
    }
    return vals;
}

/// Entry (i,j) = d/dz_i of p(z_j), by direct partial differentiation of
/// the composed polynomial.  Requires symbolic points.
inline PolyMatrix jacobian_direct(const CriticalSpec& spec) {
    if (!spec.symbolic())
        throw std::invalid_argument("jacobian_direct: requires symbolic points");
    // the chain-rule term through the upper limit must vanish:
    // p'(z_j) = (z_j - z_j)^{a_j} * ... = 0 whenever a_j >= 1
    Polynomial pprime = critical_derivative(spec);
    for (int j = 1; j <= spec.n; ++j)
        if (!substitute(pprime, var_Z(), Polynomial::variable(var_z(j))).is_zero())
            throw std::logic_error("jacobian_direct: p'(z_j) != 0, broken invariant");
    std::vector<Polynomial> vals = critical_values(spec);
    PolyMatrix m(spec.n);
    for (int i = 1; i <= spec.n; ++i)
        for (int j = 1; j <= spec.n; ++j)
            m.at(i - 1, j - 1) = derivative(vals[j - 1], var_z(i));
    return m;
}

/// Independent construction of the same matrix via the rewrite
/// J_ij = -a_i int_0^{z_j} (w - z_i)^{a_i - 1} prod_{k != i} (w - z_k)^{a_k} dw.
inline PolyMatrix jacobian_integral_rewrite(const CriticalSpec& spec) {
    if (!spec.symbolic())
        throw std::invalid_argument("jacobian_integral_rewrite: requires symbolic points");
    PolyMatrix m(spec.n);
    for (int i = 1; i <= spec.n; ++i) {
        Polynomial integrand(1);
        for (int k = 1; k <= spec.n; ++k) {
            int e = spec.multiplicities[k - 1] - (k == i ? 1 : 0);
            integrand *= pow(Polynomial::variable(var_w()) - Polynomial::variable(var_z(k)),
                             e);
        }
        for (int j = 1; j <= spec.n; ++j)
            m.at(i - 1, j - 1) =
                ExactRational(-spec.multiplicities[i - 1]) *
                definite_integral(integrand, var_w(), Polynomial(0),
                                  Polynomial::variable(var_z(j)));
    }
    return m;
}

/// Closed form: prod a_i!/(sum a_i)! * prod (-z_i)^{a_i} * prod_{i!=j} (z_i - z_j)^{a_j}.
inline Polynomial theorem_b_rhs(int n, const std::vector<int>& a) {
    if (n < 1 || static_cast<int>(a.size()) != n)
        throw std::invalid_argument("theorem_b_rhs: need len(a) = n >= 1");
    for (int ai : a)
        if (ai < 1)
            throw TheoremBRequiresPositiveMultiplicity("theorem_b_rhs: all a_i must be >= 1");
    Polynomial p(1);
    for (int i = 1; i <= n; ++i)
        p *= pow(-Polynomial::variable(var_z(i)), a[i - 1]);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            p *= pow(Polynomial::variable(var_z(i)) - Polynomial::variable(var_z(j)),
                     a[j - 1]);
        }
    BigInt num(1);
    int asum = 0;
    for (int ai : a) { num *= factorial(ai); asum += ai; }
    return p * ExactRational(num, factorial(asum));
}

inline CheckOutcome verify_theorem_b(int n, const std::vector<int>& a, const CheckMode& mode,
                                     Budget budget = {}) {
    IdentityInstance inst(n, a, 0);
    return run_check("theorem-b", inst, mode, [&]() -> std::string {
        Polynomial rhs = theorem_b_rhs(n, a);
        PolyMatrix jac = jacobian_direct(CriticalSpec(n, a));
        if (mode.kind == CheckKind::Symbolic) {
            Polynomial det = det_cofactor(jac);
            budget.check(det, "verify_theorem_b");
            Polynomial diff = det - rhs;
            return diff.is_zero() ? "" : witness_text(diff);
        }
        std::mt19937_64 rng(derive_seed(mode.seed, "theorem-b", inst));
        const int pts = auto_points(mode, rhs.degree());
        for (int p = 0; p < pts; ++p) {
            auto point = sample_point(rng, z_variables(n));
            // determinant of the numerically evaluated Jacobian
            SquareMatrix<Polynomial> num(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    num.at(i, j) = Polynomial(evaluate(jac.at(i, j), point));
            ExactRational lhs = det_cofactor(num).constant_term();
            ExactRational r = evaluate(rhs, point);
            if (lhs != r)
                return "point {" + describe_point(point) + "}: det=" + lhs.str() +
                       " rhs=" + r.str();
        }
        return "";
    });
}

}  // namespace critval
