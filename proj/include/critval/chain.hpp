/**
 * @brief Final simplification step linking the two closed forms: applying
 *        the multi-integral identity with b = 0 and multiplicities
 *        shifted down by one must reproduce the Jacobian determinant
 *        closed form,
 *
 *   prod (-a_i) * prod_{i<j} (z_i - z_j) * R(a - 1; 0)
 *     = prod a_i!/(sum a_i)! * prod (-z_i)^{a_i} * prod_{i!=j} (z_i - z_j)^{a_j}
 *
 * where R is the Theorem A right side.  Requires every a_i >= 1.
 */
#pragma once

#include "critval/critpoly.hpp"
#include "critval/theorem_a.hpp"

namespace critval {

inline CheckOutcome a_implies_b_chain_check(int n, const std::vector<int>& a) {
    for (int ai : a)
        if (ai < 1)
            throw TheoremBRequiresPositiveMultiplicity(
                "a_implies_b_chain_check: all a_i must be >= 1");
    IdentityInstance inst(n, a, 0);
    return run_check("chain", inst, CheckMode::symbolic(), [&]() -> std::string {
        std::vector<int> shifted = a;
        for (int& ai : shifted) --ai;
        Polynomial left = theorem_a_rhs(IdentityInstance(n, shifted, 0));
        for (int ai : a) left = left * ExactRational(-ai);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                left *= Polynomial::variable(var_z(i)) - Polynomial::variable(var_z(j));
        Polynomial diff = left - theorem_b_rhs(n, a);
        return diff.is_zero() ? "" : witness_text(diff);
    });
}

}  // namespace critval
