#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critval/chain.hpp"
#include "critval/reduction.hpp"

using namespace critval;

namespace {

Polynomial Zv(int i) { return Polynomial::variable(var_z(i)); }

}  // namespace

TEST_CASE("boundary terms: upper substitution vanishes, lower survives") {
    // n=1, a=(0): difference is -(-z1) = z1
    CHECK(boundary_term_check(1, {0}, 1).status == CheckStatus::Pass);
    // n=2, a=(0,0), i=1: difference is -z1*z2 (constant in the x's)
    CHECK(boundary_term_check(2, {0, 0}, 1).status == CheckStatus::Pass);
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i) {
            CHECK(boundary_term_check(n, std::vector<int>(n, 1), i).status ==
                  CheckStatus::Pass);
            CHECK(boundary_term_check(n, std::vector<int>(n, 2), i).status ==
                  CheckStatus::Pass);
        }
    CHECK_THROWS_AS(boundary_term_check(2, {0, 0}, 3), std::invalid_argument);
}

TEST_CASE("reduction: n=2 cases reduce to one-dimensional closed forms") {
    // a = (0,0): int_{z1}^{z2} 1 dy = z2 - z1
    CHECK(reduction_step_check(2, {0, 0}).status == CheckStatus::Pass);
    // a = (1,0): int_{z1}^{z2} (y - z1) dy = (z2 - z1)^2 / 2
    CHECK(reduction_step_check(2, {1, 0}).status == CheckStatus::Pass);
    // direct cross-check of the shifted closed form for a = (1,0)
    Polynomial closed = ExactRational(1, 2) * pow(Zv(2) - Zv(1), 2);
    Polynomial actual = definite_integral(
        Polynomial::variable(var_y(1)) - Zv(1), var_y(1), Zv(1), Zv(2));
    CHECK(actual == closed);
}

TEST_CASE("reduction at n = 3") {
    CHECK(reduction_step_check(3, {1, 1, 1}).status == CheckStatus::Pass);
    CHECK(reduction_step_check(3, {2, 0, 1}).status == CheckStatus::Pass);
    CHECK_THROWS_AS(reduction_step_check(1, {0}), std::invalid_argument);
}

TEST_CASE("chain: closed-form simplification at n = 1") {
    // both sides are -z1 for a = (1)
    CHECK(a_implies_b_chain_check(1, {1}).status == CheckStatus::Pass);
    Polynomial lhs = ExactRational(-1) * theorem_a_rhs(IdentityInstance(1, {0}, 0));
    CHECK(lhs == -Zv(1));
    CHECK(theorem_b_rhs(1, {1}) == -Zv(1));
}

TEST_CASE("chain over a grid of positive multiplicities") {
    CHECK(a_implies_b_chain_check(2, {1, 1}).status == CheckStatus::Pass);
    CHECK(a_implies_b_chain_check(2, {2, 1}).status == CheckStatus::Pass);
    CHECK(a_implies_b_chain_check(3, {1, 2, 2}).status == CheckStatus::Pass);
    CHECK(a_implies_b_chain_check(4, {2, 1, 2, 1}).status == CheckStatus::Pass);
}

TEST_CASE("chain rejects zero multiplicities") {
    CHECK_THROWS_AS(a_implies_b_chain_check(1, {0}),
                    TheoremBRequiresPositiveMultiplicity);
    CHECK_THROWS_AS(a_implies_b_chain_check(2, {1, 0}),
                    TheoremBRequiresPositiveMultiplicity);
}
