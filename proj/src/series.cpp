#include "genkron/series.hpp"

#include <algorithm>
#include <string>

#include "genkron/kernels.hpp"

namespace genkron {

namespace {

void require_trunc(int trunc, const char* what)
{
    if (trunc < 1) {
        throw PreconditionError(std::string(what) + ": truncation must be >= 1");
    }
}

std::vector<Rational> inverse_factorials(int count)
{
    std::vector<Rational> inv(static_cast<std::size_t>(std::max(count, 1)));
    inv[0] = 1;
    for (int i = 1; i < count; ++i) {
        inv[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(i) - 1] / Rational(i);
    }
    return inv;
}

} // namespace

// ---------------------------------------------------------------- UniSeries

UniSeries::UniSeries(int trunc) : UniSeries(trunc, {}) {}

UniSeries::UniSeries(int trunc, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    require_trunc(trunc, "UniSeries");
    if (coeffs_.size() > static_cast<std::size_t>(trunc)) {
        throw PreconditionError("UniSeries: more coefficients than the truncation allows");
    }
    coeffs_.resize(static_cast<std::size_t>(trunc));
}

UniSeries UniSeries::generate(int trunc, const std::function<Rational(int)>& coeff)
{
    require_trunc(trunc, "UniSeries");
    std::vector<Rational> c(static_cast<std::size_t>(trunc));
    for (int i = 0; i < trunc; ++i) {
        c[static_cast<std::size_t>(i)] = coeff(i);
    }
    return UniSeries(trunc, std::move(c));
}

UniSeries UniSeries::constant(const Rational& c, int trunc)
{
    return UniSeries(trunc, {c});
}

UniSeries UniSeries::variable(int trunc)
{
    return generate(trunc, [](int i) { return Rational(i == 1 ? 1 : 0); });
}

const Rational& UniSeries::operator[](int degree) const
{
    if (degree < 0 || degree >= trunc()) {
        throw std::out_of_range("UniSeries: degree " + std::to_string(degree) + " outside truncation " +
                                std::to_string(trunc()));
    }
    return coeffs_[static_cast<std::size_t>(degree)];
}

UniSeries UniSeries::truncated(int trunc) const
{
    require_trunc(trunc, "UniSeries::truncated");
    if (trunc > this->trunc()) {
        throw PreconditionError("UniSeries::truncated: cannot raise the truncation");
    }
    return UniSeries(trunc, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + trunc));
}

bool UniSeries::is_zero() const
{
    return order() == trunc();
}

int UniSeries::order() const
{
    for (int i = 0; i < trunc(); ++i) {
        if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0) {
            return i;
        }
    }
    return trunc();
}

UniSeries UniSeries::operator-() const
{
    UniSeries r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

UniSeries& UniSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

UniSeries operator+(const UniSeries& lhs, const UniSeries& rhs)
{
    const int p = std::min(lhs.trunc(), rhs.trunc());
    return UniSeries::generate(p, [&](int i) { return Rational(lhs[i] + rhs[i]); });
}

UniSeries operator-(const UniSeries& lhs, const UniSeries& rhs)
{
    const int p = std::min(lhs.trunc(), rhs.trunc());
    return UniSeries::generate(p, [&](int i) { return Rational(lhs[i] - rhs[i]); });
}

UniSeries operator*(const UniSeries& lhs, const UniSeries& rhs)
{
    const int p = std::min(lhs.trunc(), rhs.trunc());
    return UniSeries::generate(p, [&](int d) {
        Rational acc = 0;
        for (int i = 0; i <= d; ++i) {
            acc += lhs[i] * rhs[d - i];
        }
        return acc;
    });
}

UniSeries uni_exp(const Rational& scalar, int trunc)
{
    require_trunc(trunc, "uni_exp");
    std::vector<Rational> c(static_cast<std::size_t>(trunc));
    c[0] = 1;
    for (int i = 1; i < trunc; ++i) {
        c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i) - 1] * scalar / Rational(i);
    }
    return UniSeries(trunc, std::move(c));
}

UniSeries uni_inverse(const UniSeries& s)
{
    if (sgn(s[0]) == 0) {
        throw PreconditionError("uni_inverse: constant term must be nonzero");
    }
    const int p = s.trunc();
    const Rational lead_inv = 1 / s[0];
    std::vector<Rational> inv(static_cast<std::size_t>(p));
    inv[0] = lead_inv;
    for (int d = 1; d < p; ++d) {
        Rational acc = 0;
        for (int k = 1; k <= d; ++k) {
            acc += s[k] * inv[static_cast<std::size_t>(d - k)];
        }
        inv[static_cast<std::size_t>(d)] = -lead_inv * acc;
    }
    return UniSeries(p, std::move(inv));
}

UniSeries uni_log(const UniSeries& s)
{
    if (s[0] != 1) {
        throw PreconditionError("uni_log: constant term must be 1");
    }
    const int p = s.trunc();
    if (p == 1) {
        return UniSeries(1);
    }
    // s' is known mod F_{p-1}; integrating restores one degree.
    auto derivative = UniSeries::generate(p - 1, [&](int i) { return Rational(s[i + 1] * (i + 1)); });
    auto quotient = derivative * uni_inverse(s.truncated(p - 1));
    return UniSeries::generate(p, [&](int i) { return i == 0 ? Rational(0) : Rational(quotient[i - 1] / i); });
}

// ---------------------------------------------------------------- BiSeries

using kernels::tri_index;
using kernels::tri_size;

BiSeries::BiSeries(int trunc) : trunc_(trunc)
{
    require_trunc(trunc, "BiSeries");
    coeffs_.resize(tri_size(trunc));
}

BiSeries BiSeries::from_coeffs(int trunc, std::vector<Rational> coeffs)
{
    BiSeries s(trunc);
    if (coeffs.size() > s.coeffs_.size()) {
        throw PreconditionError("BiSeries: more coefficients than the truncation allows");
    }
    coeffs.resize(s.coeffs_.size());
    s.coeffs_ = std::move(coeffs);
    return s;
}

BiSeries BiSeries::generate(int trunc, const std::function<Rational(int, int)>& coeff)
{
    BiSeries s(trunc);
    for (int d = 0; d < trunc; ++d) {
        for (int a = 0; a <= d; ++a) {
            s.coeffs_[tri_index(a, d - a)] = coeff(a, d - a);
        }
    }
    return s;
}

BiSeries BiSeries::constant(const Rational& c, int trunc)
{
    BiSeries s(trunc);
    s.coeffs_[0] = c;
    return s;
}

BiSeries BiSeries::monomial(int a, int b, const Rational& c, int trunc)
{
    if (a < 0 || b < 0) {
        throw PreconditionError("BiSeries::monomial: negative degree");
    }
    BiSeries s(trunc);
    if (a + b < trunc) {
        s.coeffs_[tri_index(a, b)] = c;
    }
    return s;
}

BiSeries BiSeries::outer(const UniSeries& x_part, const UniSeries& y_part)
{
    const int p = std::min(x_part.trunc(), y_part.trunc());
    return generate(p, [&](int a, int b) { return Rational(x_part[a] * y_part[b]); });
}

BiSeries BiSeries::in_x(const UniSeries& s)
{
    return generate(s.trunc(), [&](int a, int b) { return b == 0 ? s[a] : Rational(0); });
}

BiSeries BiSeries::in_y(const UniSeries& s)
{
    return generate(s.trunc(), [&](int a, int b) { return a == 0 ? s[b] : Rational(0); });
}

const Rational& BiSeries::coeff(int a, int b) const
{
    if (a < 0 || b < 0 || a + b >= trunc_) {
        throw std::out_of_range("BiSeries: (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") outside truncation " + std::to_string(trunc_));
    }
    return coeffs_[tri_index(a, b)];
}

BiSeries BiSeries::truncated(int trunc) const
{
    require_trunc(trunc, "BiSeries::truncated");
    if (trunc > trunc_) {
        throw PreconditionError("BiSeries::truncated: cannot raise the truncation");
    }
    return from_coeffs(trunc, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(tri_size(trunc))));
}

BiSeries BiSeries::swapped() const
{
    return generate(trunc_, [&](int a, int b) { return coeff(b, a); });
}

UniSeries BiSeries::diagonal() const
{
    return UniSeries::generate(trunc_, [&](int d) {
        Rational acc = 0;
        for (int a = 0; a <= d; ++a) {
            acc += coeff(a, d - a);
        }
        return acc;
    });
}

BiSeries BiSeries::without_pure_x() const
{
    return generate(trunc_, [&](int a, int b) { return b == 0 ? Rational(0) : coeff(a, b); });
}

bool BiSeries::is_zero() const
{
    return order() == trunc_;
}

int BiSeries::order() const
{
    for (int d = 0; d < trunc_; ++d) {
        for (int a = 0; a <= d; ++a) {
            if (sgn(coeffs_[tri_index(a, d - a)]) != 0) {
                return d;
            }
        }
    }
    return trunc_;
}

BiSeries BiSeries::operator-() const
{
    BiSeries r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

BiSeries& BiSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

BiSeries operator+(const BiSeries& lhs, const BiSeries& rhs)
{
    BiSeries r = lhs.truncated(std::min(lhs.trunc(), rhs.trunc()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] += rhs.coeffs_[i];
    }
    return r;
}

BiSeries operator-(const BiSeries& lhs, const BiSeries& rhs)
{
    BiSeries r = lhs.truncated(std::min(lhs.trunc(), rhs.trunc()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] -= rhs.coeffs_[i];
    }
    return r;
}

BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs)
{
    BiSeries r(std::min(lhs.trunc(), rhs.trunc()));
    kernels::omp::bi_mul(lhs.coeffs_, rhs.coeffs_, r.coeffs_, r.trunc_);
    return r;
}

BiSeries multiply_serial(const BiSeries& lhs, const BiSeries& rhs)
{
    const int p = std::min(lhs.trunc(), rhs.trunc());
    std::vector<Rational> out(tri_size(p));
    kernels::serial::bi_mul(lhs.data(), rhs.data(), out, p);
    return BiSeries::from_coeffs(p, std::move(out));
}

BiSeries multiply_by_linear(const BiSeries& s, LinearForm form)
{
    const int p = s.trunc();
    auto q = [&](int a, int b) -> Rational {
        if (a < 0 || b < 0) {
            return 0;
        }
        return s.coeff(a, b);
    };
    // (Y - X) q: coefficient of X^a Y^b is q_{a, b-1} - q_{a-1, b}.
    auto r = BiSeries::generate(p + 1, [&](int a, int b) -> Rational {
        if (a + b == 0) {
            return 0;
        }
        return q(a, b - 1) - q(a - 1, b);
    });
    return form == LinearForm::y_minus_x ? r : -r;
}

BiSeries divide_by_linear(const BiSeries& s, LinearForm form)
{
    const int p = s.trunc();
    if (p < 2) {
        throw PreconditionError("divide_by_linear: truncation must be >= 2");
    }
    const BiSeries& num = s;
    const Rational sign = form == LinearForm::y_minus_x ? 1 : -1;

    UniSeries diag = num.diagonal();
    int bad = diag.order();
    if (bad < p) {
        throw NotDivisible("divide_by_linear: series does not vanish on X = Y (degree " + std::to_string(bad) +
                           " has diagonal coefficient " + to_string(diag[bad]) + ")");
    }

    // Solve s_{a,b} = q_{a,b-1} - q_{a-1,b} one total degree at a time, walking a upward.
    // The remaining equation s_{d,0} = -q_{d-1,0} is implied by the diagonal check.
    std::vector<Rational> q(tri_size(p - 1));
    for (int d = 1; d < p; ++d) {
        Rational prev = 0; // q_{a-1, d-a}
        for (int a = 0; a < d; ++a) {
            Rational cur = sign * num.coeff(a, d - a) + prev;
            q[tri_index(a, d - 1 - a)] = cur;
            prev = cur;
        }
    }
    return BiSeries::from_coeffs(p - 1, std::move(q));
}

BiSeries bi_exp_monomial(long i, long j, int trunc)
{
    return BiSeries::outer(uni_exp(Rational(i), trunc), uni_exp(Rational(j), trunc));
}

BiSeries phi(int trunc, BernoulliCache& cache)
{
    require_trunc(trunc, "phi");
    auto inv_fact = inverse_factorials(trunc);
    // B_i/i! (Y - X)^i contributes B_i (-1)^a / (a! b!) to X^a Y^b, i = a + b.
    return BiSeries::generate(trunc, [&](int a, int b) {
        Rational c = cache.get(a + b) * inv_fact[static_cast<std::size_t>(a)] * inv_fact[static_cast<std::size_t>(b)];
        return (a % 2 == 0) ? c : Rational(-c);
    });
}

namespace {

/// (-1)^k / k * C(n+1, k)
Rational closed_form_weight(int n, int k)
{
    Rational w = make_rational(binomial(n + 1, k), k);
    return (k % 2 == 0) ? w : Rational(-w);
}

} // namespace

BiSeries expand_f(int n, int trunc)
{
    if (n < 0) {
        throw PreconditionError("expand_f: requires n >= 0");
    }
    require_trunc(trunc, "expand_f");
    // h(t) = sum_k w_k e^{kt} + t, so that f = (-1)^(n+1) (h(Y) - h(X)).
    UniSeries h = UniSeries::variable(trunc);
    for (int k = 1; k <= n + 1; ++k) {
        h = h + closed_form_weight(n, k) * uni_exp(Rational(k), trunc);
    }
    BiSeries f = BiSeries::in_y(h) - BiSeries::in_x(h);
    return sign_power(n + 1) == 1 ? f : -f;
}

BiSeries expand_g_closed(int n, int trunc)
{
    if (n < 0) {
        throw PreconditionError("expand_g_closed: requires n >= 0");
    }
    require_trunc(trunc, "expand_g_closed");
    BiSeries acc(trunc);
    for (int k = 1; k <= n + 1; ++k) {
        BiSeries bracket = bi_exp_monomial(k, 0, trunc);
        for (int i = 1; i < k; ++i) {
            bracket = bracket + bi_exp_monomial(i, k - i, trunc);
        }
        acc = acc + closed_form_weight(n, k) * bracket;
    }
    acc = acc + phi(trunc);
    return sign_power(n + 1) == 1 ? acc : -acc;
}

BiSeries expand_g1(int n, int trunc)
{
    return divide_by_linear(expand_f(n, trunc + 1), LinearForm::y_minus_x);
}

BiSeries expand_g_alt(int n, int trunc)
{
    return expand_g1(n, trunc) * phi(trunc);
}

} // namespace genkron
