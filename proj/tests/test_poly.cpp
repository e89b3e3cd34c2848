#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critval/poly_io.hpp"
#include "critval/polynomial.hpp"
#include "critval/rational.hpp"
#include "critval/rational_function.hpp"
#include "test_util.hpp"

using namespace critval;
using critval::testing::random_polynomial;
using critval::testing::random_nonzero_polynomial;

namespace {

Polynomial X(int i) { return Polynomial::variable(var_x(i)); }
Polynomial Zv(int i) { return Polynomial::variable(var_z(i)); }

}  // namespace

TEST_CASE("rational invariants") {
    ExactRational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(ExactRational(0, 7).str() == "0");
    CHECK(ExactRational(1, 3) + ExactRational(1, 6) == ExactRational(1, 2));
    CHECK_THROWS_AS(ExactRational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("add: cancellation, identity, inverse") {
    CHECK(X(1) + Polynomial(1) + (X(1) - Polynomial(1)) == ExactRational(2) * X(1));
    Polynomial p = X(1) * Zv(2) - Polynomial(ExactRational(1, 2));
    CHECK(p + Polynomial(0) == p);
    CHECK(((Zv(1) - Zv(2)) + (Zv(2) - Zv(1))).is_zero());
}

TEST_CASE("mul: binomial square, identity, annihilation") {
    Polynomial d = X(1) - Zv(1);
    Polynomial expected = X(1) * X(1) - ExactRational(2) * X(1) * Zv(1) + Zv(1) * Zv(1);
    CHECK(d * d == expected);
    Polynomial p = X(1) * X(2) + Zv(3);
    CHECK(p * Polynomial(1) == p);
    CHECK(((X(2) - X(1)) * Polynomial(0)).is_zero());
}

TEST_CASE("pow: empty product convention") {
    CHECK(pow(X(1) - Zv(1), 0) == Polynomial(1));
    CHECK(pow(Polynomial(0), 0) == Polynomial(1));
    CHECK(pow(Polynomial(0), 3).is_zero());
    CHECK(pow(X(1) - Zv(1), 2) == (X(1) - Zv(1)) * (X(1) - Zv(1)));
}

TEST_CASE("derivative basics") {
    CHECK(derivative(pow(X(1), 3) * Zv(1), var_x(1)) ==
          ExactRational(3) * pow(X(1), 2) * Zv(1));
    CHECK(derivative(pow(X(1), 2), var_z(1)).is_zero());
    CHECK(derivative(pow(X(1) - Zv(1), 2), var_x(1)) ==
          ExactRational(2) * X(1) - ExactRational(2) * Zv(1));
}

TEST_CASE("antiderivative basics") {
    CHECK(antiderivative(pow(X(1), 2), var_x(1)) ==
          ExactRational(1, 3) * pow(X(1), 3));
    CHECK(antiderivative(Zv(2), var_x(1)) == Zv(2) * X(1));
    CHECK(antiderivative(Polynomial(0), var_x(1)).is_zero());
}

TEST_CASE("substitute basics") {
    CHECK(substitute(X(1) - Zv(1), var_x(1), Zv(1)).is_zero());
    Polynomial y1z1 = Polynomial::variable(var_y(1)) + Zv(1);
    CHECK(substitute(pow(X(1), 2), var_x(1), y1z1) == y1z1 * y1z1);
    CHECK(substitute(Zv(2), var_x(1), pow(Zv(3), 5)) == Zv(2));
}

TEST_CASE("definite_integral") {
    // int_0^{z1} (x1 - z1) dx1 = -z1^2/2, the n=1 base case of Eq. (1)
    CHECK(definite_integral(X(1) - Zv(1), var_x(1), Polynomial(0), Zv(1)) ==
          ExactRational(-1, 2) * Zv(1) * Zv(1));
    // int_0^{z1} (x1 - z1)^a dx1 = (-1)^a z1^{a+1}/(a+1) for a = 0..4
    for (int a = 0; a <= 4; ++a) {
        Polynomial got = definite_integral(pow(X(1) - Zv(1), a), var_x(1), Polynomial(0), Zv(1));
        Polynomial want = ExactRational(a % 2 == 0 ? 1 : -1, a + 1) * pow(Zv(1), a + 1);
        CHECK(got == want);
    }
    CHECK(definite_integral(Polynomial(1), var_y(1), Zv(1), Zv(2)) == Zv(2) - Zv(1));
    CHECK_THROWS_AS(definite_integral(X(1), var_x(1), Polynomial(0), X(1) + Zv(1)),
                    BoundContainsVariable);
}

TEST_CASE("evaluate") {
    std::map<VariableId, ExactRational> pt{{var_x(1), ExactRational(2)},
                                           {var_z(1), ExactRational(3)}};
    CHECK(evaluate(pow(X(1), 2) - Zv(1), pt) == ExactRational(1));
    CHECK(evaluate(Polynomial(0), {}) == ExactRational(0));
    CHECK(evaluate(ExactRational(1, 2) * X(1), {{var_x(1), ExactRational(1, 3)}}) ==
          ExactRational(1, 6));
    CHECK_THROWS_AS(evaluate(X(1) * Zv(2), {{var_x(1), ExactRational(1)}}), UnboundVariable);
}

TEST_CASE("rf_equal") {
    RationalFunction f(Polynomial(1), X(1) - Zv(1));
    RationalFunction g(X(1) - Zv(2), (X(1) - Zv(1)) * (X(1) - Zv(2)));
    CHECK(rf_equal(f, g));
    CHECK(!rf_equal(RationalFunction(Zv(1), Zv(2)), RationalFunction(Zv(2), Zv(1))));
    CHECK(rf_equal(RationalFunction(Polynomial(0), Zv(1)),
                   RationalFunction(Polynomial(0), X(1) + Zv(2))));
    CHECK_THROWS_AS(RationalFunction(Zv(1), Polynomial(0)), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    std::vector<VariableId> vars{var_x(1), var_x(2), var_z(1)};
    for (int it = 0; it < 400; ++it) {
        Polynomial p = random_polynomial(rng, vars);
        Polynomial q = random_polynomial(rng, vars);
        Polynomial r = random_polynomial(rng, vars);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("canonical uniqueness: p == q iff p - q == 0") {
    std::mt19937_64 rng(777);
    std::vector<VariableId> vars{var_x(1), var_z(1), var_z(2)};
    for (int it = 0; it < 400; ++it) {
        Polynomial p = random_polynomial(rng, vars);
        Polynomial q = random_polynomial(rng, vars);
        CHECK((p == q) == (p - q).is_zero());
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("derivative/antiderivative roundtrip") {
    std::mt19937_64 rng(2024);
    std::vector<VariableId> vars{var_x(1), var_x(2), var_z(1)};
    for (int it = 0; it < 400; ++it) {
        Polynomial p = random_polynomial(rng, vars);
        CHECK(derivative(antiderivative(p, var_x(1)), var_x(1)) == p);
        // product rule
        Polynomial q = random_polynomial(rng, vars);
        CHECK(derivative(p * q, var_x(1)) ==
              derivative(p, var_x(1)) * q + p * derivative(q, var_x(1)));
        // linearity
        CHECK(derivative(p + q, var_x(1)) ==
              derivative(p, var_x(1)) + derivative(q, var_x(1)));
    }
}

TEST_CASE("evaluation homomorphism") {
    std::mt19937_64 rng(99);
    std::vector<VariableId> vars{var_x(1), var_z(1)};
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    for (int it = 0; it < 400; ++it) {
        Polynomial p = random_polynomial(rng, vars);
        Polynomial q = random_polynomial(rng, vars);
        Polynomial r = random_polynomial(rng, vars);
        std::map<VariableId, ExactRational> pt;
        for (VariableId v : vars) pt.emplace(v, ExactRational(num(rng), den(rng)));
        CHECK(evaluate(p * q + r, pt) ==
              evaluate(p, pt) * evaluate(q, pt) + evaluate(r, pt));
    }
}

TEST_CASE("integral additivity as polynomial identity") {
    std::mt19937_64 rng(4242);
    std::vector<VariableId> vars{var_x(1), var_z(1)};
    // l, m, u fresh variables
    Polynomial l = Zv(7), m = Zv(8), u = Zv(9);
    for (int it = 0; it < 300; ++it) {
        Polynomial p = random_polynomial(rng, vars);
        Polynomial lhs = definite_integral(p, var_x(1), l, m) +
                         definite_integral(p, var_x(1), m, u);
        CHECK(lhs == definite_integral(p, var_x(1), l, u));
    }
}

TEST_CASE("rf_equal is an equivalence on random inputs") {
    std::mt19937_64 rng(31337);
    std::vector<VariableId> vars{var_x(1), var_z(1)};
    for (int it = 0; it < 150; ++it) {
        RationalFunction f(random_polynomial(rng, vars), random_nonzero_polynomial(rng, vars));
        RationalFunction g(random_polynomial(rng, vars), random_nonzero_polynomial(rng, vars));
        RationalFunction h(random_polynomial(rng, vars), random_nonzero_polynomial(rng, vars));
        CHECK(rf_equal(f, f));
        CHECK(rf_equal(f, g) == rf_equal(g, f));
        if (rf_equal(f, g) && rf_equal(g, h)) CHECK(rf_equal(f, h));
    }
}

TEST_CASE("text format: printer golden cases") {
    CHECK(to_string(Polynomial(0)) == "0");
    CHECK(to_string(Polynomial(ExactRational(-3, 4))) == "-3/4");
    Polynomial p = pow(X(1), 2) - ExactRational(2) * X(1) * Zv(1) + Zv(1) * Zv(1);
    CHECK(to_string(p) == "x1^2 - 2*x1*z1 + z1^2");
    Polynomial q = ExactRational(1, 2) * Zv(1) * pow(Zv(2), 2) -
                   ExactRational(1, 2) * pow(Zv(1), 2) * Zv(2);
    CHECK(to_string(q) == "-1/2*z1^2*z2 + 1/2*z1*z2^2");
    CHECK(to_string(Polynomial::variable(var_w()) + Polynomial::variable(var_Z())) ==
          "w + Z");
}

TEST_CASE("text format: parse accepts whitespace and any term order") {
    Polynomial p = pow(X(1), 2) - ExactRational(2) * X(1) * Zv(1) + Zv(1) * Zv(1);
    CHECK(parse_polynomial("x1^2 - 2*x1*z1 + z1^2") == p);
    CHECK(parse_polynomial("  z1^2+x1^2   -2 * x1 * z1 ") == p);
    CHECK(parse_polynomial("-2*x1*z1 + z1^2 + x1^2") == p);
    CHECK(parse_polynomial("0") == Polynomial(0));
    CHECK(parse_polynomial("3/4*Z^2*w") ==
          ExactRational(3, 4) * pow(Polynomial::variable(var_Z()), 2) *
              Polynomial::variable(var_w()));
    CHECK_THROWS_AS(parse_polynomial(""), PolyParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 + + z1 q"), PolyParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), PolyParseError);
}

TEST_CASE("text format roundtrip property") {
    std::mt19937_64 rng(5150);
    std::vector<VariableId> vars{var_x(1), var_x(2), var_z(1), var_y(3), var_w()};
    for (int it = 0; it < 200; ++it) {
        Polynomial p = random_polynomial(rng, vars);
        CHECK(parse_polynomial(to_string(p)) == p);
    }
}

TEST_CASE("divide_exact") {
    Polynomial p = (X(1) - Zv(1)) * (X(1) + Zv(2));
    auto q = divide_exact(p, X(1) - Zv(1));
    REQUIRE(q.has_value());
    CHECK(*q == X(1) + Zv(2));
    CHECK(!divide_exact(X(1) + Polynomial(1), X(1) - Zv(1)).has_value());
    std::mt19937_64 rng(808);
    std::vector<VariableId> vars{var_x(1), var_z(1)};
    for (int it = 0; it < 200; ++it) {
        Polynomial a = random_polynomial(rng, vars, 4, 2);
        Polynomial b = random_nonzero_polynomial(rng, vars, 4, 2);
        auto r = divide_exact(a * b, b);
        REQUIRE(r.has_value());
        CHECK(*r == a);
    }
}
