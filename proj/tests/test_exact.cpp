#include <random>
#include <vector>

#include <doctest.h>

#include "genkron/exact.hpp"

using namespace genkron;

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 9) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), PreconditionError);

    // Pascal's triangle built by addition only
    std::vector<std::vector<Integer>> pascal(31);
    for (int n = 0; n <= 30; ++n) {
        pascal[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) {
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        }
    }
    for (int n = 0; n <= 30; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == pascal[n][k]);
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
    }
    CHECK(binomial(100, 50) == Integer("100891344545564193334812497256", 10));
}

TEST_CASE("ipow and factorial")
{
    CHECK(ipow(0, 0) == 1);
    CHECK(ipow(0, 3) == 0);
    CHECK(ipow(-2, 3) == -8);
    CHECK(ipow(3, 40) == Integer("12157665459056928801", 10));
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("power_sum")
{
    CHECK(power_sum(2, 4) == 1 + 4 + 9);
    CHECK(power_sum(5, 1) == 0);
    CHECK(power_sum(0, 6) == 5);
    // closed forms: sum_{i<k} i^2 = (k-1)k(2k-1)/6, sum i^3 = ((k-1)k/2)^2
    for (long k = 1; k <= 40; ++k) {
        CHECK(power_sum(2, static_cast<int>(k)) == (k - 1) * k * (2 * k - 1) / 6);
        CHECK(power_sum(3, static_cast<int>(k)) == ((k - 1) * k / 2) * ((k - 1) * k / 2));
    }
    CHECK_THROWS_AS(power_sum(1, 0), PreconditionError);
}

TEST_CASE("weighted_power_sum")
{
    CHECK(weighted_power_sum(0, 2, 4) == 14);
    CHECK(weighted_power_sum(1, 2, 3) == 1 * 2 + 2 * 1);
    CHECK(weighted_power_sum(2, 2, 1) == 0);
    CHECK_THROWS_AS(weighted_power_sum(3, 2, 4), PreconditionError);
    CHECK_THROWS_AS(weighted_power_sum(-1, 2, 4), PreconditionError);

    for (int m = 0; m <= 10; ++m) {
        for (int k = 1; k <= 20; ++k) {
            CHECK(weighted_power_sum(0, m, k) == power_sum(m, k));
        }
    }
    for (int m = 0; m <= 8; ++m) {
        for (int a = 0; a <= m; ++a) {
            for (int k = 1; k <= 15; ++k) {
                CHECK(weighted_power_sum(a, m, k) == weighted_power_sum(m - a, m, k));
            }
        }
    }
}

TEST_CASE("rational canonical form")
{
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK(to_string(make_rational(0, -5)) == "0/1");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    for (int t = 0; t < 200; ++t) {
        int d1 = dist(rng);
        int d2 = dist(rng);
        Rational x = make_rational(dist(rng), d1 == 0 ? 1 : d1);
        Rational y = make_rational(dist(rng), d2 == 0 ? 1 : d2);
        for (const Rational& r : {Rational(x + y), Rational(x - y), Rational(x * y)}) {
            CHECK(is_canonical(r));
            Rational renorm(r.get_num(), r.get_den());
            renorm.canonicalize();
            CHECK(renorm.get_num() == r.get_num());
            CHECK(renorm.get_den() == r.get_den());
        }
    }
}

TEST_CASE("rational text round trip")
{
    CHECK(parse_rational("-1/30") == make_rational(-1, 30));
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("+3/4") == make_rational(3, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int t = 0; t < 200; ++t) {
        Rational q = make_rational(num(rng), den(rng));
        q *= Rational(ipow(10, 30));
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("to_decimal rounds half away from zero")
{
    CHECK(to_decimal(make_rational(1, 6), 4) == "0.1667");
    CHECK(to_decimal(make_rational(-1, 30), 3) == "-0.033");
    CHECK(to_decimal(make_rational(1, 2), 0) == "1");
    CHECK(to_decimal(make_rational(-1, 2), 0) == "-1");
    CHECK(to_decimal(make_rational(-1, 3000), 2) == "0.00");
    CHECK(to_decimal(Rational(5), 2) == "5.00");
}
