#include "genkron/muhat.hpp"

#include <string>

#include "genkron/kernels.hpp"

namespace genkron {

// ---------------------------------------------------------------- TensorElem

void TensorElem::add(long i, long j, const Rational& c)
{
    if (j == 0 || sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Rational TensorElem::coeff(long i, long j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

TensorElem& TensorElem::operator+=(const TensorElem& rhs)
{
    for (const auto& [ij, c] : rhs.terms_) {
        add(ij.first, ij.second, c);
    }
    return *this;
}

TensorElem& TensorElem::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [ij, x] : terms_) {
        x *= c;
    }
    return *this;
}

// ---------------------------------------------------------------- RationalMatrix

RationalMatrix::RationalMatrix(int order) : order_(order)
{
    if (order < 1) {
        throw PreconditionError("RationalMatrix: order must be >= 1");
    }
    entries_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
}

RationalMatrix RationalMatrix::identity(int order)
{
    RationalMatrix m(order);
    for (int i = 0; i < order; ++i) {
        m(i, i) = 1;
    }
    return m;
}

std::size_t RationalMatrix::index(int row, int col) const
{
    if (row < 0 || col < 0 || row >= order_ || col >= order_) {
        throw std::out_of_range("RationalMatrix: index outside order " + std::to_string(order_));
    }
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(col);
}

std::vector<Rational> RationalMatrix::row(int r) const
{
    std::vector<Rational> out;
    for (int c = 0; c < order_; ++c) {
        out.push_back((*this)(r, c));
    }
    return out;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs)
{
    if (lhs.order_ != rhs.order_) {
        throw PreconditionError("RationalMatrix: order mismatch");
    }
    const int n = lhs.order_;
    RationalMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational acc = 0;
            for (int k = 0; k < n; ++k) {
                acc += lhs(i, k) * rhs(k, j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

RationalMatrix build_D(int n)
{
    if (n < 0) {
        throw PreconditionError("build_D: requires n >= 0");
    }
    RationalMatrix d(n + 1);
    for (int k = 1; k <= n + 1; ++k) {
        for (int i = 1; i <= n + 1; ++i) {
            d(k - 1, i - 1) = make_rational(ipow(k, static_cast<unsigned long>(i)), factorial(static_cast<unsigned long>(i)));
        }
    }
    return d;
}

RationalMatrix invert_matrix(const RationalMatrix& m)
{
    const int n = m.order();
    RationalMatrix work = m;
    RationalMatrix inv = RationalMatrix::identity(n);

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && sgn(work(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw Singular("invert_matrix: no nonzero pivot in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const Rational scale = 1 / work(col, col);
        for (int c = 0; c < n; ++c) {
            work(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(work(r, col)) == 0) {
                continue;
            }
            const Rational factor = work(r, col);
            for (int c = 0; c < n; ++c) {
                work(r, c) -= factor * work(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

std::vector<Rational> inverse_first_row_closed_form(int n)
{
    std::vector<Rational> row;
    for (int k = 1; k <= n + 1; ++k) {
        Rational a = make_rational(binomial(n + 1, k), k);
        row.push_back(k % 2 == 1 ? a : Rational(-a));
    }
    return row;
}

// ---------------------------------------------------------------- mu-hat

BiSeries muhat_group_power(long k, int trunc)
{
    BiSeries s(trunc);
    if (k > 0) {
        for (long i = 1; i <= k; ++i) {
            s = s - bi_exp_monomial(i, k - i, trunc);
        }
    } else if (k < 0) {
        for (long i = 0; i <= -k - 1; ++i) {
            s = s + bi_exp_monomial(-i, k + i, trunc);
        }
    }
    return s;
}

BiSeries muhat_laurent(const LaurentPoly& f, int trunc)
{
    BiSeries s(trunc);
    for (const auto& [e, c] : f.terms()) {
        s = s + c * muhat_group_power(e, trunc);
    }
    return s;
}

bool fundamental_identity_check(const LaurentPoly& f, int trunc)
{
    BiSeries factor = bi_exp_monomial(-1, 1, trunc) - BiSeries::constant(1, trunc);
    UniSeries fe = f.at_exp(trunc);
    return factor * muhat_laurent(f, trunc) == BiSeries::in_x(fe) - BiSeries::in_y(fe);
}

bool phi_identity_check(const LaurentPoly& f, int trunc)
{
    BiSeries y_minus_x = BiSeries::monomial(0, 1, 1, trunc) - BiSeries::monomial(1, 0, 1, trunc);
    UniSeries fe = f.at_exp(trunc);
    return y_minus_x * muhat_laurent(f, trunc) == (BiSeries::in_x(fe) - BiSeries::in_y(fe)) * phi(trunc);
}

BiSeries muhat_log_power(int k, int trunc)
{
    if (k < 1) {
        throw PreconditionError("muhat_log_power: requires k >= 1");
    }
    if (trunc < 2) {
        throw PreconditionError("muhat_log_power: truncation must be >= 2");
    }
    BiSeries xk_minus_yk = BiSeries::monomial(k, 0, 1, trunc) - BiSeries::monomial(0, k, 1, trunc);
    return divide_by_linear(xk_minus_yk * phi(trunc), LinearForm::y_minus_x);
}

BiSeries muhat_Z_via_inversion(int n, int trunc)
{
    if (n < 0) {
        throw PreconditionError("muhat_Z_via_inversion: requires n >= 0");
    }
    if (trunc > n + 1) {
        throw PreconditionError("muhat_Z_via_inversion: requires trunc <= n + 1 (trunc=" + std::to_string(trunc) +
                                ", n=" + std::to_string(n) + ")");
    }
    const auto first_row = invert_matrix(build_D(n)).row(0);
    BiSeries s(trunc);
    for (int k = 1; k <= n + 1; ++k) {
        s = s + first_row[static_cast<std::size_t>(k) - 1] * muhat_group_power(k, trunc);
    }
    return s;
}

// ---------------------------------------------------------------- tensor model

TensorElem mu_simple_power(long k)
{
    TensorElem t;
    if (k > 0) {
        for (long i = 1; i <= k - 1; ++i) {
            t.add(i, k - i, -1);
        }
    } else if (k < 0) {
        for (long i = 0; i <= -k - 1; ++i) {
            t.add(-i, k + i, 1);
        }
    }
    return t;
}

TensorElem mu_simple(const LaurentPoly& f)
{
    TensorElem t;
    for (const auto& [e, c] : f.terms()) {
        t += c * mu_simple_power(e);
    }
    return t;
}

BiSeries tensor_to_biseries(const TensorElem& t, int trunc)
{
    BiSeries s(trunc);
    for (const auto& [ij, c] : t.terms()) {
        s = s + c * bi_exp_monomial(ij.first, ij.second, trunc);
    }
    return s;
}

BiSeries constant_class_correction(long k, int trunc)
{
    if (k > 0) {
        return -bi_exp_monomial(k, 0, trunc);
    }
    return BiSeries(trunc);
}

BiSeries theorem4_rhs(int trunc, BernoulliCache& cache)
{
    std::vector<Rational> coeffs(kernels::tri_size(trunc));
    auto at = [&](int a, int b) -> Rational& { return coeffs[kernels::tri_index(a, b)]; };
    at(0, 0) = -1;
    if (trunc > 1) {
        at(1, 0) = make_rational(-1, 2);
        at(0, 1) = make_rational(1, 2);
    }
    for (int k = 1; 2 * k < trunc; ++k) {
        const Rational weight = cache.get(2 * k) / Rational(factorial(static_cast<unsigned long>(2 * k)));
        for (int j = 0; j <= 2 * k; ++j) {
            Rational term = weight * Rational(binomial(2 * k, j));
            if (j % 2 == 0) {
                at(j, 2 * k - j) -= term;
            } else {
                at(j, 2 * k - j) += term;
            }
        }
    }
    return BiSeries::from_coeffs(trunc, std::move(coeffs));
}

BiSeries theorem4_statement(int trunc, BernoulliCache& cache)
{
    return theorem4_rhs(trunc, cache).without_pure_x();
}

LaurentPoly log_z_truncated(int order)
{
    const LaurentPoly z_minus_1 = {{1, 1}, {0, -1}};
    LaurentPoly power = LaurentPoly::monomial(0);
    LaurentPoly sum;
    for (int i = 1; i <= order; ++i) {
        power = power * z_minus_1;
        sum += make_rational(sign_power(i + 1), i) * power;
    }
    return sum;
}

BiSeries mu_log_simple(int trunc)
{
    // (z-1)^i is sent into F_{i-1}, so terms past i = trunc do not reach below degree trunc.
    return tensor_to_biseries(mu_simple(log_z_truncated(trunc)), trunc).without_pure_x();
}

} // namespace genkron
