/**
 * @brief Verification wrappers for the Cauchy alternant: the determinant
 *        of (1/(x_j - z_i)) against its closed form, and the
 *        denominator-free row-scaled variant.
 */
#pragma once

#include "critval/engine.hpp"
#include "critval/linalg.hpp"

namespace critval {

/// rf_equal(det of the alternant, closed form) via rational-function
/// cofactor expansion.
inline CheckOutcome verify_cauchy(int n) {
    IdentityInstance inst(n, std::vector<int>(n, 0), 0);
    return run_check("cauchy", inst, CheckMode::symbolic(), [&]() -> std::string {
        RationalFunction det = det_rational(cauchy_alternant(n));
        RationalFunction closed = cauchy_closed_form(n);
        if (rf_equal(det, closed)) return "";
        return witness_text(det.num() * closed.den() - closed.num() * det.den());
    });
}

/// Row-scaled polynomial variant: det of the matrix with entry (i,j) =
/// prod_{k != j} (x_k - z_i) must equal the closed-form numerator.
inline CheckOutcome verify_cauchy_row_scaled(int n) {
    IdentityInstance inst(n, std::vector<int>(n, 0), 0);
    return run_check("cauchy-row-scaled", inst, CheckMode::symbolic(), [&]() -> std::string {
        Polynomial det = det_bareiss(cauchy_alternant_row_scaled(n));
        Polynomial diff = det - cauchy_closed_form(n).num();
        return diff.is_zero() ? "" : witness_text(diff);
    });
}

}  // namespace critval
