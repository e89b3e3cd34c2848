/**
 * @brief Determinants of polynomial and rational-function matrices,
 *        Vandermonde products, and the Cauchy alternant closed form.
 *
 * Two independent determinant algorithms (cofactor expansion and
 * fraction-free Bareiss elimination) act as each other's oracle; no
 * identity check depends on a single determinant code path.
 */
#pragma once

#include "critval/polynomial.hpp"
#include "critval/rational_function.hpp"

#include <vector>

namespace critval {

struct ExactDivisionFailed : std::runtime_error {
    explicit ExactDivisionFailed(const std::string& msg) : std::runtime_error(msg) {}
};

template <typename Entry>
class SquareMatrix {
public:
    SquareMatrix(std::size_t n, Entry fill = Entry{})
        : n_(n), entries_(n * n, fill) {
        if (n == 0) throw std::invalid_argument("SquareMatrix: dimension must be positive");
    }

    std::size_t size() const { return n_; }
    Entry& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Entry& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    SquareMatrix minor_drop(std::size_t row, std::size_t col) const {
        SquareMatrix m(n_ - 1);
        for (std::size_t i = 0, mi = 0; i < n_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, mj = 0; j < n_; ++j) {
                if (j == col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t n_;
    std::vector<Entry> entries_;
};

using PolyMatrix = SquareMatrix<Polynomial>;
using RatMatrix = SquareMatrix<RationalFunction>;

template <typename Entry>
Entry det_cofactor_generic(const SquareMatrix<Entry>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m.at(0, 0);
    Entry det{};
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Entry sub = det_cofactor_generic(m.minor_drop(0, j));
        Entry contrib = m.at(0, j) * sub;
        det = (j % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

inline Polynomial det_cofactor(const PolyMatrix& m) { return det_cofactor_generic(m); }
inline RationalFunction det_rational(const RatMatrix& m) { return det_cofactor_generic(m); }

/// Fraction-free elimination; every division is an exact polynomial division.
inline Polynomial det_bareiss(const PolyMatrix& m) {
    const std::size_t n = m.size();
    PolyMatrix a = m;
    Polynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (!a.at(i, k).is_zero()) { swap_row = i; break; }
            }
            // leading minor structurally singular; fall back to cofactor
            // expansion of the original matrix
            if (swap_row == k) return det_cofactor(m);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                auto q = divide_exact(t, prev);
                if (!q)
                    throw ExactDivisionFailed(
                        "det_bareiss: pivot does not divide; fraction-free invariant broken");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = Polynomial(0);
        }
        prev = a.at(k, k);
    }
    Polynomial d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

/// Expanded product over pairs i<j of (v_j - v_i); 1 for fewer than two variables.
inline Polynomial vandermonde_product(const std::vector<VariableId>& vars) {
    Polynomial r(1);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            r *= Polynomial::variable(vars[j]) - Polynomial::variable(vars[i]);
    return r;
}

/// The n x n alternant with (i,j) entry 1/(x_j - z_i), 1-based families.
inline RatMatrix cauchy_alternant(std::size_t n) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = RationalFunction(
                Polynomial(1),
                Polynomial::variable(var_x(static_cast<std::uint32_t>(j + 1))) -
                    Polynomial::variable(var_z(static_cast<std::uint32_t>(i + 1))));
    return m;
}

/// Closed form of det of the alternant:
/// prod_{i<j} (z_i - z_j)(x_j - x_i)  /  prod_{i,j} (x_j - z_i).
inline RationalFunction cauchy_closed_form(std::size_t n) {
    Polynomial num(1);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            num *= Polynomial::variable(var_z(static_cast<std::uint32_t>(i))) -
                   Polynomial::variable(var_z(static_cast<std::uint32_t>(j)));
            num *= Polynomial::variable(var_x(static_cast<std::uint32_t>(j))) -
                   Polynomial::variable(var_x(static_cast<std::uint32_t>(i)));
        }
    }
    Polynomial den(1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            den *= Polynomial::variable(var_x(static_cast<std::uint32_t>(j))) -
                   Polynomial::variable(var_z(static_cast<std::uint32_t>(i)));
    return {num, den};
}

/// Denominator-free variant: entry (i,j) -> prod_{k != j} (x_k - z_i).
/// Its determinant must equal the closed-form numerator.
inline PolyMatrix cauchy_alternant_row_scaled(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            Polynomial e(1);
            for (std::size_t k = 1; k <= n; ++k) {
                if (k == j) continue;
                e *= Polynomial::variable(var_x(static_cast<std::uint32_t>(k))) -
                     Polynomial::variable(var_z(static_cast<std::uint32_t>(i)));
            }
            m.at(i - 1, j - 1) = std::move(e);
        }
    }
    return m;
}

}  // namespace critval
