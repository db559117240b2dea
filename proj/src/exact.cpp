#include "genkron/exact.hpp"

#include <cctype>
#include <string>

namespace genkron {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_canonical(const Rational& q)
{
    if (sgn(q.get_den()) <= 0) {
        return false;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

Integer binomial(long n, long k)
{
    if (n < 0) {
        throw PreconditionError("binomial: requires n >= 0");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // Multiplicative formula; every partial product r * (n-k+i) is divisible by i.
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

Integer ipow(long base, unsigned long exp)
{
    Integer b = base;
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer power_sum(int m, int k)
{
    if (m < 0 || k < 1) {
        throw PreconditionError("power_sum: requires m >= 0 and k >= 1");
    }
    Integer s = 0;
    for (int i = 1; i < k; ++i) {
        s += ipow(i, static_cast<unsigned long>(m));
    }
    return s;
}

Integer weighted_power_sum(int a, int m, int k)
{
    if (a < 0) {
        throw PreconditionError("weighted_power_sum: requires a >= 0");
    }
    if (a > m) {
        throw PreconditionError("weighted_power_sum: requires a <= m");
    }
    if (k < 1) {
        throw PreconditionError("weighted_power_sum: requires k >= 1");
    }
    Integer s = 0;
    for (int i = 1; i < k; ++i) {
        s += ipow(i, static_cast<unsigned long>(a)) * ipow(k - i, static_cast<unsigned long>(m - a));
    }
    return s;
}

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        return false;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
        throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, parse_integer(den_text));
}

std::string to_decimal(const Rational& q, int digits)
{
    if (digits < 0) {
        throw PreconditionError("to_decimal: digits must be >= 0");
    }
    Integer scale = ipow(10, static_cast<unsigned long>(digits));
    Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
    Integer den = q.get_den() * 2;
    Integer scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    bool negative = sgn(q) < 0 && scaled != 0;
    return negative ? "-" + body : body;
}

} // namespace genkron
