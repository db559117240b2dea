#include <random>

#include <doctest.h>

#include "genkron/muhat.hpp"
#include "genkron/verify.hpp"

using namespace genkron;

namespace {

Rational q(long n, long d = 1)
{
    return make_rational(n, d);
}

} // namespace

TEST_CASE("muhat on powers of z")
{
    CHECK(muhat_group_power(0, 5).is_zero());
    CHECK(muhat_group_power(1, 2) == -(BiSeries::constant(1, 2) + BiSeries::monomial(1, 0, 1, 2)));
    CHECK(muhat_group_power(-1, 2) == BiSeries::constant(1, 2) - BiSeries::monomial(0, 1, 1, 2));
    // k = 2: -(e^X e^Y + e^{2X})
    CHECK(muhat_group_power(2, 6) == -(bi_exp_monomial(1, 1, 6) + bi_exp_monomial(2, 0, 6)));
}

TEST_CASE("muhat on Laurent polynomials is linear")
{
    const int p = 6;
    CHECK(muhat_laurent({{1, 1}, {0, -1}}, p) == muhat_group_power(1, p));
    CHECK(muhat_laurent({{1, 1}, {-1, 1}}, p) == muhat_group_power(1, p) + muhat_group_power(-1, p));
    CHECK(muhat_laurent({}, p).is_zero());
    CHECK(fundamental_identity_check({{2, 1}, {1, -2}, {0, 1}}, p));
}

TEST_CASE("fundamental identity")
{
    for (long k = -6; k <= 6; ++k) {
        CHECK(fundamental_identity_check(LaurentPoly::monomial(k), 8));
        CHECK(phi_identity_check(LaurentPoly::monomial(k), 8));
    }
    CHECK(fundamental_identity_check({}, 8));
    std::mt19937_64 rng(1234);
    for (int c = 0; c < 60; ++c) {
        LaurentPoly f = random_laurent(rng, 5, -8, 8);
        CHECK(fundamental_identity_check(f, 10));
        CHECK(phi_identity_check(f, 10));
    }
}

TEST_CASE("continuity: I^p lands in F_{p-1}")
{
    const LaurentPoly z_minus_1 = {{1, 1}, {0, -1}};
    std::mt19937_64 rng(77);
    for (int p = 1; p <= 6; ++p) {
        for (int c = 0; c < 10; ++c) {
            LaurentPoly f = z_minus_1.pow(p) * random_laurent(rng, 3, -4, 4);
            CHECK(muhat_laurent(f, p + 3).vanishes_below(p - 1));
        }
    }
    // the bound is sharp for p = 2: muhat((z-1)^2) has a nonzero degree-1 part
    CHECK(muhat_laurent(z_minus_1.pow(2), 5).order() == 1);
}

TEST_CASE("muhat of powers of Z")
{
    for (int p = 2; p <= 12; ++p) {
        CHECK(muhat_log_power(1, p) == -phi(p - 1));
    }
    CHECK(muhat_log_power(1, 6).coeff(0, 0) == -1);
    CHECK(muhat_log_power(2, 6).coeff(0, 0) == 0);
    for (int k = 1; k <= 8; ++k) {
        BiSeries s = muhat_log_power(k, 12);
        CHECK(s.trunc() == 11);
        CHECK(s.vanishes_below(k - 1));
        // (Y - X) muhat(Z^k) = (X^k - Y^k) Phi
        BiSeries lhs = multiply_by_linear(s, LinearForm::y_minus_x);
        BiSeries rhs = (BiSeries::monomial(k, 0, 1, 12) - BiSeries::monomial(0, k, 1, 12)) * phi(12);
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(muhat_log_power(0, 5), PreconditionError);
    CHECK_THROWS_AS(muhat_log_power(1, 1), PreconditionError);
}

TEST_CASE("matrix D and its inverse")
{
    CHECK(build_D(0)(0, 0) == 1);
    RationalMatrix d1 = build_D(1);
    CHECK(d1(0, 0) == 1);
    CHECK(d1(0, 1) == q(1, 2));
    CHECK(d1(1, 0) == 2);
    CHECK(d1(1, 1) == 2);

    CHECK(invert_matrix(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
    RationalMatrix u(2);
    u(0, 0) = 1;
    u(0, 1) = 1;
    u(1, 1) = 1;
    RationalMatrix u_inv = invert_matrix(u);
    CHECK(u_inv(0, 0) == 1);
    CHECK(u_inv(0, 1) == -1);
    CHECK(u_inv(1, 0) == 0);
    CHECK(u_inv(1, 1) == 1);

    RationalMatrix needs_swap(2);
    needs_swap(0, 1) = 2;
    needs_swap(1, 0) = 3;
    CHECK(needs_swap * invert_matrix(needs_swap) == RationalMatrix::identity(2));

    RationalMatrix singular(3);
    singular(0, 0) = 1;
    singular(1, 0) = 2;
    singular(2, 2) = 1;
    CHECK_THROWS_AS(invert_matrix(singular), Singular);

    for (int n = 0; n <= 12; ++n) {
        RationalMatrix d = build_D(n);
        RationalMatrix inv = invert_matrix(d);
        CHECK(d * inv == RationalMatrix::identity(n + 1));
        CHECK(inv.row(0) == inverse_first_row_closed_form(n));
    }
}

TEST_CASE("muhat(Z) through the inverse of D")
{
    CHECK(muhat_Z_via_inversion(3, 4) == -phi(4));
    CHECK(muhat_Z_via_inversion(0, 1) == BiSeries::constant(-1, 1));
    CHECK_THROWS_AS(muhat_Z_via_inversion(3, 5), PreconditionError);
    for (int n = 0; n <= 10; ++n) {
        BiSeries s = muhat_Z_via_inversion(n, n + 1);
        CHECK(s == -phi(n + 1));
        for (int m = 0; m <= n; ++m) {
            for (int a = 0; a <= m; ++a) {
                Rational expect = sign_power(a + 1) * bernoulli_recurrence(m) /
                                  Rational(factorial(a) * factorial(static_cast<unsigned long>(m - a)));
                CHECK(s.coeff(a, m - a) == expect);
            }
        }
    }
}

TEST_CASE("simple-loop tensor model")
{
    CHECK(mu_simple_power(1).is_zero());
    CHECK(mu_simple_power(0).is_zero());
    TensorElem four;
    four.add(1, 3, -1);
    four.add(2, 2, -1);
    four.add(3, 1, -1);
    CHECK(mu_simple_power(4) == four);
    TensorElem minus_two;
    minus_two.add(0, -2, 1);
    minus_two.add(-1, -1, 1);
    CHECK(mu_simple_power(-2) == minus_two);

    TensorElem constant_class;
    constant_class.add(3, 0, 5);
    CHECK(constant_class.is_zero());

    CHECK(tensor_to_biseries(TensorElem{}, 4).is_zero());
    TensorElem one;
    one.add(1, 1, 1);
    CHECK(tensor_to_biseries(one, 2) == bi_exp_monomial(1, 1, 2));

    for (long k = -5; k <= 5; ++k) {
        CHECK(tensor_to_biseries(mu_simple_power(k), 8) + constant_class_correction(k, 8) == muhat_group_power(k, 8));
    }
}

TEST_CASE("expansion of muhat(log z)")
{
    BiSeries rhs = theorem4_rhs(6);
    CHECK(rhs.coeff(0, 0) == -1);
    CHECK(rhs.coeff(1, 0) == q(-1, 2));
    CHECK(rhs.coeff(0, 1) == q(1, 2));
    // -B_2/2! (X^2 - 2XY + Y^2)
    CHECK(rhs.coeff(2, 0) == q(-1, 12));
    CHECK(rhs.coeff(1, 1) == q(1, 6));
    CHECK(rhs.coeff(3, 0) == 0);
    CHECK(theorem4_rhs(1) == BiSeries::constant(-1, 1));

    for (int p = 1; p <= 14; ++p) {
        CHECK(theorem4_rhs(p) == muhat_log_power(1, p + 1));
        CHECK(theorem4_rhs(p) == -phi(p));
    }
}

TEST_CASE("mu(log gamma) through the tensor model")
{
    CHECK(log_z_truncated(1) == LaurentPoly{{1, 1}, {0, -1}});
    CHECK(log_z_truncated(6).at_exp(7) == UniSeries::variable(7));
    for (int p = 1; p <= 12; ++p) {
        BiSeries statement = theorem4_statement(p);
        CHECK(mu_log_simple(p) == statement);
        // only terms with a nontrivial right factor survive
        for (int a = 0; a < p; ++a) {
            CHECK(statement.coeff(a, 0) == 0);
        }
    }
    if (BiSeries s = theorem4_statement(4); true) {
        CHECK(s.coeff(0, 1) == q(1, 2));
        CHECK(s.coeff(1, 1) == q(1, 6));
    }
}
