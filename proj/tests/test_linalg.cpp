#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critval/linalg.hpp"
#include "critval/poly_io.hpp"
#include "test_util.hpp"

using namespace critval;
using critval::testing::random_polynomial;

namespace {

Polynomial Zv(int i) { return Polynomial::variable(var_z(i)); }

PolyMatrix identity_matrix(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial(1);
    return m;
}

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int max_exp = 2) {
    std::vector<VariableId> vars{var_z(1), var_z(2)};
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = random_polynomial(rng, vars, 3, max_exp, 5);
    return m;
}

}  // namespace

TEST_CASE("det_cofactor basics") {
    CHECK(det_cofactor(identity_matrix(3)) == Polynomial(1));
    PolyMatrix m(2);
    m.at(0, 0) = Zv(1); m.at(0, 1) = Zv(2);
    m.at(1, 0) = Zv(3); m.at(1, 1) = Zv(4);
    CHECK(det_cofactor(m) == Zv(1) * Zv(4) - Zv(2) * Zv(3));
}

TEST_CASE("3x3 Vandermonde matrix determinant equals the product form") {
    PolyMatrix m(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i - 1, j) = pow(Zv(i), j);
    Polynomial expected = (Zv(2) - Zv(1)) * (Zv(3) - Zv(1)) * (Zv(3) - Zv(2));
    CHECK(det_cofactor(m) == expected);
    CHECK(det_bareiss(m) == expected);
    CHECK(vandermonde_product({var_z(1), var_z(2), var_z(3)}) == expected);
}

TEST_CASE("det_bareiss basics") {
    CHECK(det_bareiss(identity_matrix(4)) == Polynomial(1));
    // two equal rows
    PolyMatrix s(3);
    for (int j = 0; j < 3; ++j) {
        s.at(0, j) = Zv(j + 1);
        s.at(1, j) = Zv(j + 1);
        s.at(2, j) = pow(Zv(j + 1), 2);
    }
    CHECK(det_bareiss(s).is_zero());
    // zero pivot forcing a row swap
    PolyMatrix p(2);
    p.at(0, 1) = Polynomial(1);
    p.at(1, 0) = Polynomial(1);
    CHECK(det_bareiss(p) == Polynomial(-1));
    CHECK(det_cofactor(p) == Polynomial(-1));
}

TEST_CASE("determinant oracle equivalence: cofactor vs fraction-free") {
    std::mt19937_64 rng(161803);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 2 + it % 3;  // 2..4
        PolyMatrix m = random_matrix(rng, n);
        CHECK(det_cofactor(m) == det_bareiss(m));
    }
}

TEST_CASE("alternating: swapping two rows negates the determinant") {
    std::mt19937_64 rng(271828);
    for (int it = 0; it < 60; ++it) {
        PolyMatrix m = random_matrix(rng, 3);
        PolyMatrix swapped = m;
        for (int j = 0; j < 3; ++j) std::swap(swapped.at(0, j), swapped.at(2, j));
        CHECK(det_cofactor(swapped) == -det_cofactor(m));
    }
}

TEST_CASE("multiplicativity on constant 3x3 matrices") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int it = 0; it < 60; ++it) {
        PolyMatrix a(3), b(3), ab(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = Polynomial(coeff(rng));
                b.at(i, j) = Polynomial(coeff(rng));
            }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Polynomial s;
                for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
                ab.at(i, j) = s;
            }
        CHECK(det_cofactor(ab) == det_cofactor(a) * det_cofactor(b));
    }
}

TEST_CASE("det_rational basics") {
    RatMatrix m1 = cauchy_alternant(1);
    CHECK(rf_equal(det_rational(m1),
                   RationalFunction(Polynomial(1),
                                    Polynomial::variable(var_x(1)) - Zv(1))));
    // diagonal matrix
    RatMatrix d(2);
    d.at(0, 0) = RationalFunction(Zv(1), Zv(2));
    d.at(1, 1) = RationalFunction(Zv(3), Zv(4));
    CHECK(rf_equal(det_rational(d), RationalFunction(Zv(1) * Zv(3), Zv(2) * Zv(4))));
}

TEST_CASE("vandermonde_product small cases") {
    CHECK(vandermonde_product({}) == Polynomial(1));
    CHECK(vandermonde_product({var_x(1)}) == Polynomial(1));
    CHECK(vandermonde_product({var_x(1), var_x(2)}) ==
          Polynomial::variable(var_x(2)) - Polynomial::variable(var_x(1)));
}

TEST_CASE("cauchy closed form n=1 and n=2") {
    RationalFunction c1 = cauchy_closed_form(1);
    CHECK(rf_equal(c1, RationalFunction(Polynomial(1),
                                        Polynomial::variable(var_x(1)) - Zv(1))));
    RationalFunction c2 = cauchy_closed_form(2);
    Polynomial x1 = Polynomial::variable(var_x(1)), x2 = Polynomial::variable(var_x(2));
    Polynomial num = (Zv(1) - Zv(2)) * (x2 - x1);
    Polynomial den = (x1 - Zv(1)) * (x2 - Zv(1)) * (x1 - Zv(2)) * (x2 - Zv(2));
    CHECK(rf_equal(c2, RationalFunction(num, den)));
}

TEST_CASE("cauchy alternant matches closed form for n = 1..3") {
    for (int n = 1; n <= 3; ++n)
        CHECK(rf_equal(det_rational(cauchy_alternant(n)), cauchy_closed_form(n)));
}

TEST_CASE("row-scaled alternant determinant equals the closed-form numerator") {
    for (int n = 2; n <= 4; ++n) {
        Polynomial det = det_bareiss(cauchy_alternant_row_scaled(n));
        CHECK(det == cauchy_closed_form(n).num());
        if (n <= 3) CHECK(det_cofactor(cauchy_alternant_row_scaled(n)) == det);
    }
}
