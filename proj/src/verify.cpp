#include "genkron/verify.hpp"

#include <sstream>

#include "genkron/kernels.hpp"
#include "genkron/muhat.hpp"

namespace genkron {

namespace {

std::string label(std::string_view what, std::initializer_list<std::pair<const char*, long>> params)
{
    std::ostringstream os;
    os << what;
    for (const auto& [name, value] : params) {
        os << ' ' << name << '=' << value;
    }
    return os.str();
}

std::string describe(const LaurentPoly& f)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        os << (first ? "" : " + ") << to_string(c) << "*z^" << e;
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace

SuiteReport run_checks(std::string suite, const std::vector<Check>& checks, Execution exec)
{
    std::vector<char> ok(checks.size(), 0);
    auto body = [&](std::size_t i) {
        try {
            ok[i] = checks[i].run() ? 1 : 0;
        } catch (const std::exception&) {
            ok[i] = 0;
        }
    };
    if (exec == Execution::parallel) {
        kernels::omp::for_each_index(checks.size(), body);
    } else {
        kernels::serial::for_each_index(checks.size(), body);
    }

    SuiteReport report{std::move(suite), checks.size(), 0, {}};
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (!ok[i]) {
            if (report.failures == 0) {
                report.first_failure = checks[i].label;
            }
            ++report.failures;
        }
    }
    return report;
}

LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms, long lo, long hi)
{
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<long> exponent(lo, hi);
    std::uniform_int_distribution<int> coeff(-9, 8);
    LaurentPoly f;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        f += LaurentPoly::monomial(exponent(rng), c >= 0 ? c + 1 : c);
    }
    return f;
}

BiSeries random_biseries(std::mt19937_64& rng, int trunc)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    return BiSeries::generate(trunc, [&](int, int) { return Rational(coeff(rng)); });
}

std::vector<Check> known_value_checks()
{
    struct Known {
        int m;
        Rational value;
    };
    const std::vector<Known> known = {
        {0, 1}, {1, make_rational(-1, 2)}, {2, make_rational(1, 6)}, {4, make_rational(-1, 30)}};

    std::vector<Check> checks;
    for (const auto& [m, value] : known) {
        checks.push_back({label("recurrence", {{"m", m}}), [m, value] { return bernoulli_recurrence(m) == value; }});
        if (m >= 2) {
            checks.push_back({label("kronecker", {{"m", m}}), [m, value] { return bernoulli_kronecker(m) == value; }});
        }
        for (int n = m; n <= m + 3; ++n) {
            for (int a = 0; a <= m; ++a) {
                checks.push_back({label("generalized", {{"m", m}, {"a", a}, {"n", n}}),
                                  [m, a, n, value] { return bernoulli_generalized(m, a, n) == value; }});
                if (m >= 2) {
                    checks.push_back({label("generalized-simple", {{"m", m}, {"a", a}, {"n", n}}),
                                      [m, a, n, value] { return bernoulli_generalized_simple(m, a, n) == value; }});
                }
            }
        }
    }
    for (int m = 3; m <= 39; m += 2) {
        checks.push_back({label("odd kronecker", {{"m", m}}), [m] { return sgn(bernoulli_kronecker(m)) == 0; }});
        for (int a : {0, m / 2, m}) {
            checks.push_back({label("odd generalized", {{"m", m}, {"a", a}, {"n", m}}),
                              [m, a] { return sgn(bernoulli_generalized(m, a, m)) == 0; }});
            checks.push_back({label("odd generalized-simple", {{"m", m}, {"a", a}, {"n", m}}),
                              [m, a] { return sgn(bernoulli_generalized_simple(m, a, m)) == 0; }});
        }
    }
    return checks;
}

std::vector<Check> generalized_checks(int max_n)
{
    std::vector<Check> checks;
    for (int m = 0; m <= max_n; ++m) {
        for (int a = 0; a <= m; ++a) {
            for (int n = m; n <= max_n; ++n) {
                checks.push_back({label("generalized", {{"m", m}, {"a", a}, {"n", n}}),
                                  [m, a, n] { return bernoulli_generalized(m, a, n) == bernoulli_recurrence(m); }});
                if (m >= 2) {
                    checks.push_back({label("generalized-simple", {{"m", m}, {"a", a}, {"n", n}}), [m, a, n] {
                                          return bernoulli_generalized_simple(m, a, n) == bernoulli_recurrence(m);
                                      }});
                }
            }
        }
    }
    return checks;
}

std::vector<Check> kronecker_checks(int max_m)
{
    std::vector<Check> checks;
    for (int m = 2; m <= max_m; ++m) {
        checks.push_back({label("kronecker", {{"m", m}}), [m] {
                              Rational k = bernoulli_kronecker(m);
                              return k == bernoulli_generalized_simple(m, 0, m) && k == bernoulli_recurrence(m);
                          }});
    }
    return checks;
}

std::vector<Check> lemma_checks(int max_n)
{
    std::vector<Check> checks;
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            checks.push_back({label("lemma", {{"m", m}, {"n", n}}),
                              [m, n] { return lemma1_sum(m, n) == (m == 0 ? -1 : 0); }});
        }
    }
    return checks;
}

std::vector<Check> series_checks(int max_n)
{
    std::vector<Check> checks;
    for (int n = 0; n <= max_n; ++n) {
        const int p = n + 3;
        checks.push_back({label("f vanishes below n+1", {{"n", n}, {"trunc", p}}),
                          [n, p] { return expand_f(n, p).vanishes_below(n + 1); }});
        checks.push_back({label("g closed = g alt, vanishing below n+1", {{"n", n}, {"trunc", p}}), [n, p] {
                              BiSeries closed = expand_g_closed(n, p);
                              return closed == expand_g_alt(n, p) && closed.vanishes_below(n + 1);
                          }});
        // The X^a Y^(m-a) coefficient of g is ((-1)^(n+1+a)/m!) C(m,a) times the residual,
        // for every degree in range; below n+1 the residual itself must vanish.
        checks.push_back({label("g coefficient = scaled residual", {{"n", n}, {"trunc", p}}), [n, p] {
                              BiSeries g = expand_g_closed(n, p);
                              for (int m = 0; m < p; ++m) {
                                  for (int a = 0; a <= m; ++a) {
                                      Rational scale = make_rational(binomial(m, a), factorial(static_cast<unsigned long>(m)));
                                      if (sign_power(n + 1 + a) < 0) {
                                          scale = -scale;
                                      }
                                      if (g.coeff(a, m - a) != scale * kronecker_residual(m, a, n)) {
                                          return false;
                                      }
                                  }
                              }
                              return true;
                          }});
        for (int m = 0; m <= n; ++m) {
            for (int a = 0; a <= m; ++a) {
                checks.push_back({label("residual vanishes", {{"m", m}, {"a", a}, {"n", n}}),
                                  [m, a, n] { return sgn(kronecker_residual(m, a, n)) == 0; }});
            }
        }
    }
    return checks;
}

std::vector<Check> muhat_checks(int trunc, int cases, std::uint64_t seed)
{
    std::vector<Check> checks;
    std::mt19937_64 rng(seed);
    for (int c = 0; c < cases; ++c) {
        LaurentPoly f = random_laurent(rng, 5, -8, 8);
        checks.push_back({"fundamental identity f=" + describe(f), [f, trunc] { return fundamental_identity_check(f, trunc); }});
        checks.push_back({"phi identity f=" + describe(f), [f, trunc] { return phi_identity_check(f, trunc); }});
    }
    for (int n = 0; n <= 12; ++n) {
        checks.push_back({label("inverse first row", {{"n", n}}), [n] {
                              RationalMatrix d = build_D(n);
                              RationalMatrix inv = invert_matrix(d);
                              return d * inv == RationalMatrix::identity(n + 1) &&
                                     inv.row(0) == inverse_first_row_closed_form(n);
                          }});
    }
    for (int n = 0; n <= 10; ++n) {
        for (int p = 1; p <= n + 1; ++p) {
            checks.push_back({label("inversion route = -phi", {{"n", n}, {"trunc", p}}),
                              [n, p] { return muhat_Z_via_inversion(n, p) == -phi(p); }});
        }
        checks.push_back({label("inversion route coefficients", {{"n", n}}), [n] {
                              BiSeries s = muhat_Z_via_inversion(n, n + 1);
                              for (int m = 0; m <= n; ++m) {
                                  for (int a = 0; a <= m; ++a) {
                                      Rational expect = bernoulli_recurrence(m) /
                                                        Rational(factorial(static_cast<unsigned long>(a)) *
                                                                 factorial(static_cast<unsigned long>(m - a)));
                                      if (a % 2 == 0) {
                                          expect = -expect;
                                      }
                                      if (s.coeff(a, m - a) != expect) {
                                          return false;
                                      }
                                  }
                              }
                              return true;
                          }});
    }
    for (int k = 1; k <= 8; ++k) {
        checks.push_back({label("log power lies in F_{k-1}", {{"k", k}}),
                          [k] { return muhat_log_power(k, 11).vanishes_below(k - 1); }});
    }
    for (int p = 2; p <= 14; ++p) {
        checks.push_back({label("log power k=1 = -phi", {{"trunc", p}}),
                          [p] { return muhat_log_power(1, p + 1) == -phi(p); }});
    }
    return checks;
}

std::vector<Check> theorem4_checks(int max_p)
{
    std::vector<Check> checks;
    for (int p = 1; p <= max_p; ++p) {
        checks.push_back({label("theorem4 rhs = muhat(log z)", {{"trunc", p}}),
                          [p] { return theorem4_rhs(p) == muhat_log_power(1, p + 1); }});
        checks.push_back({label("mu(log gamma) via tensor model", {{"trunc", p}}),
                          [p] { return mu_log_simple(p) == theorem4_statement(p); }});
    }
    for (long k = -5; k <= 5; ++k) {
        checks.push_back({label("tensor model reconciles with muhat", {{"k", k}}), [k] {
                              return tensor_to_biseries(mu_simple_power(k), 8) + constant_class_correction(k, 8) ==
                                     muhat_group_power(k, 8);
                          }});
    }
    return checks;
}

std::vector<Check> property_checks(int cases, std::uint64_t seed)
{
    std::vector<Check> checks;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> trunc_dist(1, 8);
    for (int c = 0; c < cases; ++c) {
        const int p = trunc_dist(rng);
        BiSeries u = random_biseries(rng, p);
        BiSeries v = random_biseries(rng, p);
        BiSeries w = random_biseries(rng, p);
        checks.push_back({label("ring axioms", {{"case", c}, {"trunc", p}}), [u, v, w] {
                              return (u * v) * w == u * (v * w) && u * (v + w) == u * v + u * w && u * v == v * u &&
                                     u * v == multiply_serial(u, v);
                          }});
    }
    std::uniform_int_distribution<int> div_trunc(1, 10);
    for (int c = 0; c < cases; ++c) {
        BiSeries q = random_biseries(rng, div_trunc(rng));
        checks.push_back({label("division round trip", {{"case", c}, {"trunc", q.trunc()}}), [q] {
                              return divide_by_linear(multiply_by_linear(q, LinearForm::y_minus_x), LinearForm::y_minus_x) == q &&
                                     divide_by_linear(multiply_by_linear(q, LinearForm::x_minus_y), LinearForm::x_minus_y) == q;
                          }});
    }
    std::uniform_int_distribution<int> power_dist(1, 6);
    for (int c = 0; c < cases; ++c) {
        const int p = power_dist(rng);
        LaurentPoly f = LaurentPoly{{1, 1}, {0, -1}}.pow(static_cast<unsigned>(p)) * random_laurent(rng, 3, -4, 4);
        checks.push_back({label("continuity muhat(I^p) in F_{p-1}", {{"case", c}, {"p", p}}),
                          [f, p] { return muhat_laurent(f, p + 3).vanishes_below(p - 1); }});
    }
    std::uniform_int_distribution<int> m_dist(0, 8);
    std::uniform_int_distribution<int> k_dist(1, 15);
    for (int c = 0; c < cases; ++c) {
        const int m = m_dist(rng);
        const int a = std::uniform_int_distribution<int>(0, m)(rng);
        const int k = k_dist(rng);
        checks.push_back({label("weighted power sum symmetry", {{"a", a}, {"m", m}, {"k", k}}), [a, m, k] {
                              return weighted_power_sum(a, m, k) == weighted_power_sum(m - a, m, k);
                          }});
    }
    return checks;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"known",  "generalized", "kronecker", "lemma",
                                                   "series", "muhat",       "theorem4",  "properties"};
    return names;
}

SuiteReport run_suite(std::string_view name, const VerifyBounds& bounds, Execution exec)
{
    std::vector<Check> checks;
    if (name == "known") {
        checks = known_value_checks();
    } else if (name == "generalized") {
        checks = generalized_checks(bounds.max_n);
    } else if (name == "kronecker") {
        checks = kronecker_checks(bounds.max_m);
    } else if (name == "lemma") {
        checks = lemma_checks(bounds.lemma_max_n);
    } else if (name == "series") {
        checks = series_checks(bounds.series_max_n);
    } else if (name == "muhat") {
        checks = muhat_checks(bounds.trunc, bounds.cases, bounds.seed);
    } else if (name == "theorem4") {
        checks = theorem4_checks(bounds.theorem4_max_p);
    } else if (name == "properties") {
        checks = property_checks(bounds.cases, bounds.seed);
    } else {
        throw PreconditionError("unknown suite '" + std::string(name) + "'");
    }
    return run_checks(std::string(name), checks, exec);
}

} // namespace genkron
