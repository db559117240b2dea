#include <thread>
#include <vector>

#include <doctest.h>

#include "genkron/bernoulli.hpp"

using namespace genkron;

namespace {

// Akiyama-Tanigawa algorithm: an independent route to B_m (it yields B_1 = +1/2).
std::vector<Rational> akiyama_tanigawa(int count)
{
    std::vector<Rational> out;
    std::vector<Rational> row;
    for (int m = 0; m < count; ++m) {
        row.push_back(make_rational(1, m + 1));
        for (int j = m; j >= 1; --j) {
            row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
        }
        out.push_back(m == 1 ? Rational(-row[0]) : row[0]);
    }
    return out;
}

} // namespace

TEST_CASE("recurrence reproduces known values")
{
    CHECK(bernoulli_recurrence(0) == 1);
    CHECK(bernoulli_recurrence(1) == make_rational(-1, 2));
    CHECK(bernoulli_recurrence(2) == make_rational(1, 6));
    CHECK(bernoulli_recurrence(4) == make_rational(-1, 30));
    CHECK(bernoulli_recurrence(6) == make_rational(1, 42));
    CHECK(bernoulli_recurrence(7) == 0);
    CHECK(bernoulli_recurrence(12) == make_rational(-691, 2730));
    CHECK(bernoulli_recurrence(14) == make_rational(7, 6));
    CHECK_THROWS_AS(bernoulli_recurrence(-1), PreconditionError);
}

TEST_CASE("recurrence agrees with Akiyama-Tanigawa")
{
    const auto oracle = akiyama_tanigawa(61);
    BernoulliCache cache;
    for (int m = 0; m <= 60; ++m) {
        CHECK(bernoulli_recurrence(m, cache) == oracle[m]);
    }
}

TEST_CASE("cache invariants")
{
    BernoulliCache cache;
    CHECK(cache.size() == 2);
    CHECK(cache.get(0) == 1);
    CHECK(cache.get(1) == make_rational(-1, 2));
    cache.get(41);
    CHECK(cache.size() == 42);
    for (int m = 3; m <= 41; m += 2) {
        CHECK(cache.get(m) == 0);
    }
    cache.get(5);
    CHECK(cache.size() == 42);
}

TEST_CASE("cache tolerates concurrent readers and writers")
{
    BernoulliCache shared;
    BernoulliCache reference;
    std::vector<std::vector<Rational>> seen(8);
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            for (int m = (t * 7) % 50; m < 80; m += 3) {
                seen[t].push_back(shared.get(m));
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (int t = 0; t < 8; ++t) {
        int i = 0;
        for (int m = (t * 7) % 50; m < 80; m += 3) {
            CHECK(seen[t][i++] == reference.get(m));
        }
    }
}

TEST_CASE("kronecker formula")
{
    CHECK(bernoulli_kronecker(2) == make_rational(1, 6));
    CHECK(bernoulli_kronecker(4) == make_rational(-1, 30));
    CHECK(bernoulli_kronecker(3) == 0);
    CHECK_THROWS_AS(bernoulli_kronecker(1), PreconditionError);
    CHECK_THROWS_AS(bernoulli_kronecker(0), PreconditionError);
    for (int m = 2; m <= 40; ++m) {
        CHECK(bernoulli_kronecker(m) == bernoulli_generalized_simple(m, 0, m));
    }
}

TEST_CASE("generalized formula")
{
    CHECK(bernoulli_generalized(1, 0, 1) == bernoulli_recurrence(1));
    CHECK(bernoulli_generalized(1, 0, 1) == make_rational(-1, 2));
    CHECK(bernoulli_generalized(2, 1, 3) == make_rational(1, 6));
    CHECK(bernoulli_generalized(0, 0, 0) == 1);

    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= n; ++m) {
            for (int a = 0; a <= m; ++a) {
                CHECK(bernoulli_generalized(m, a, n) == bernoulli_recurrence(m));
            }
        }
    }
}

TEST_CASE("generalized formula value does not depend on a")
{
    for (int m = 0; m <= 14; ++m) {
        for (int n = m; n <= m + 4; ++n) {
            const Rational first = bernoulli_generalized(m, 0, n);
            for (int a = 1; a <= m; ++a) {
                CHECK(bernoulli_generalized(m, a, n) == first);
            }
        }
    }
}

TEST_CASE("generalized parameter errors name the violated inequality")
{
    auto message = [](auto&& call) -> std::string {
        try {
            call();
        } catch (const PreconditionError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message([] { bernoulli_generalized(2, -1, 3); }).find("violated 0 <= a") != std::string::npos);
    CHECK(message([] { bernoulli_generalized(2, 3, 3); }).find("violated a <= m") != std::string::npos);
    CHECK(message([] { bernoulli_generalized(4, 1, 3); }).find("violated m <= n") != std::string::npos);
    CHECK(message([] { bernoulli_generalized(4, 1, 3); }).find("requires 0 <= a <= m <= n") != std::string::npos);
}

TEST_CASE("generalized simple formula")
{
    CHECK(bernoulli_generalized_simple(2, 0, 2) == make_rational(1, 6));
    CHECK(bernoulli_generalized_simple(2, 2, 5) == make_rational(1, 6));
    CHECK(bernoulli_generalized_simple(6, 3, 9) == make_rational(1, 42));
    CHECK_THROWS_AS(bernoulli_generalized_simple(1, 0, 3), PreconditionError);
    CHECK_THROWS_AS(bernoulli_generalized_simple(0, 0, 3), PreconditionError);
    CHECK_THROWS_AS(bernoulli_generalized_simple(3, 2, 2), PreconditionError);

    for (int n = 2; n <= 12; ++n) {
        for (int m = 2; m <= n; ++m) {
            for (int a = 0; a <= m; ++a) {
                CHECK(bernoulli_generalized_simple(m, a, n) == bernoulli_generalized(m, a, n));
            }
        }
    }
}

TEST_CASE("lemma sum")
{
    CHECK(lemma1_sum(0, 4) == -1);
    CHECK(lemma1_sum(3, 5) == 0);
    CHECK(lemma1_sum(1, 1) == 0);
    CHECK_THROWS_AS(lemma1_sum(3, 2), PreconditionError);
    CHECK_THROWS_AS(lemma1_sum(-1, 2), PreconditionError);
    for (int n = 0; n <= 30; ++n) {
        CHECK(lemma1_sum(0, n) == -1);
        for (int m = 1; m <= n; ++m) {
            CHECK(lemma1_sum(m, n) == 0);
        }
    }
}

TEST_CASE("residual vanishes exactly where the closed form holds")
{
    for (int n = 0; n <= 8; ++n) {
        for (int m = 0; m <= n; ++m) {
            for (int a = 0; a <= m; ++a) {
                CHECK(kronecker_residual(m, a, n) == 0);
            }
        }
    }
    // Past m = n the sum over k is too short; B_2 is not reproduced with n = 1.
    CHECK(kronecker_residual(2, 0, 1) != 0);
}

TEST_CASE("method dispatch and names")
{
    CHECK(bernoulli(4, {Method::recurrence}) == make_rational(-1, 30));
    CHECK(bernoulli(4, {Method::kronecker}) == make_rational(-1, 30));
    CHECK(bernoulli(4, {Method::generalized, 2, 7}) == make_rational(-1, 30));
    CHECK(bernoulli(4, {Method::generalized_simple, 4, 4}) == make_rational(-1, 30));
    for (Method m : {Method::recurrence, Method::kronecker, Method::generalized, Method::generalized_simple}) {
        CHECK(parse_method(method_name(m)) == m);
    }
    CHECK_FALSE(parse_method("euler").has_value());
}
