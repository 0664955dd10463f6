#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankcrit/mpoly.hpp"

using namespace rankcrit;

namespace {
// alpha^a beta^b gamma^c term builder
MPoly term3(int a, int b, int c, long long coeff) {
    return MPoly::monomial({a, b, c}, Rat(coeff));
}

// the falling-factorial sum from the operator computation:
// sum (d!/(a!b!c!))^2 (e)_a (e)_b (e)_c alpha^a beta^b gamma^c
MPoly falling_factorial_sum(int d, int e) {
    MPoly out(3);
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) {
            int c = d - a - b;
            mpz_class mult = factorial((unsigned)d) /
                             (factorial((unsigned)a) * factorial((unsigned)b) * factorial((unsigned)c));
            mpz_class coeff = mult * mult * falling_factorial(e, a) * falling_factorial(e, b) *
                              falling_factorial(e, c);
            out.add_term({a, b, c}, Rat(coeff));
        }
    return out;
}
}  // namespace

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(2, 3) == 0);  // a factor hits zero
}

TEST_CASE("p_de frozen examples") {
    CHECK(p_de(0, 4) == MPoly::constant(3, Rat(1)));
    // P_{1,e} = e(alpha+beta+gamma)
    for (int e = 1; e <= 4; ++e)
        CHECK(p_de(1, e) == term3(1, 0, 0, e) + term3(0, 1, 0, e) + term3(0, 0, 1, e));
    // P_{2,1}: only a,b,c <= 1 survive -> 2(ab + bc + ca), by expanding the sum
    CHECK(p_de(2, 1) == term3(1, 1, 0, 2) + term3(0, 1, 1, 2) + term3(1, 0, 1, 2));
}

TEST_CASE("divisibility by sigma_1") {
    MPoly sigma1 = term3(1, 0, 0, 1) + term3(0, 1, 0, 1) + term3(0, 0, 1, 1);
    CHECK(divisible_by_sigma1(sigma1));
    CHECK_FALSE(divisible_by_sigma1(p_de(0, 3)));
    CHECK(divisible_by_sigma1(p_de(1, 3)));
}

TEST_CASE("p_de symmetric in its three variables") {
    for (int e = 1; e <= 3; ++e)
        for (int d = 0; d <= 3 * e; ++d) {
            MPoly p = p_de(d, e);
            CHECK(p == p.permute_vars({1, 2, 0}));
            CHECK(p == p.permute_vars({1, 0, 2}));
        }
}

TEST_CASE("q_d frozen examples and sweep") {
    CHECK(q_d_closed(1, 2) == Rat(-6));  // -e(e+1) at e=2
    CHECK(q_d_sum(1, 2) == Rat(-6));
    CHECK(q_d_closed(2, 1) == Rat(-6));  // -(2e+1)(e+1)e at e=1
    CHECK(q_d_sum(2, 1) == Rat(-6));
    for (int e = 1; e <= 10; ++e) {
        CHECK(q_d_sum(1, e) == Rat((long long)-e * (e + 1)));
        for (int d = 1; d <= 2 * e + 1; ++d) CHECK(q_d_sum(d, e) == q_d_closed(d, e));
        // nonzero exactly while the falling product misses zero (k <= e)
        for (int d = 1; d <= 2 * e; ++d) CHECK_FALSE(q_d_sum(d, e).is_zero());
        CHECK(q_d_sum(2 * e + 1, e).is_zero());
    }
}

TEST_CASE("brute operator coefficient") {
    CHECK(brute_operator_coefficient(0, 2, 3) == MPoly::constant(3, Rat(1)));
    for (int e = 1; e <= 3; ++e)
        for (int d = 0; d <= 6; ++d) {
            MPoly brute = brute_operator_coefficient(d, e, 3);
            CHECK(brute == falling_factorial_sum(d, e));
            CHECK(brute == Rat(factorial((unsigned)d)) * p_de(d, e));
        }
    // m=4 sanity: the extra variable only rides along in the monomial
    CHECK(brute_operator_coefficient(1, 1, 4) == Rat(1) * p_de(1, 1));
}

TEST_CASE("divisibility sweep over the full parameter range") {
    for (int e = 1; e <= 8; ++e) {
        CHECK_FALSE(divisible_by_sigma1(p_de(0, e)));
        CHECK(divisible_by_sigma1(p_de(1, e)));
        for (int d = 2; d <= 3 * e; ++d) CHECK_FALSE(divisible_by_sigma1(p_de(d, e)));
    }
}

TEST_CASE("coefficient of alpha^{d-1} beta in P(alpha,beta,-alpha-beta) is Q_{d-1}") {
    // pins the normalization of the Q_d display: the substituted coefficient
    // equals the closed form exactly, no extra factor
    MPoly minus_ab = -(MPoly::variable(3, 0) + MPoly::variable(3, 1));
    for (int e = 1; e <= 5; ++e)
        for (int d = 2; d <= 2 * e + 1; ++d) {
            MPoly sub = p_de(d, e).substitute(2, minus_ab);
            Rat coeff = sub.coeff({d - 1, 1, 0});
            CHECK(coeff == q_d_closed(d - 1, e));
            CHECK_FALSE(coeff.is_zero());
        }
}

TEST_CASE("mpoly engine basics") {
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly p = (x + y).pow(3);
    CHECK(p.coeff({2, 1}) == Rat(3));
    CHECK(p.derivative(0).coeff({1, 1}) == Rat(6));
    CHECK((p - p).is_zero());
    CHECK(p.str({"x", "y"}) == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
}
