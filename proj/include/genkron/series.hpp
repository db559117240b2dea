#pragma once

// Truncated formal power series over Q.
//
// A series with truncation p is known modulo F_p, the terms of (total) degree
// >= p. Binary operations return the smaller of the two truncations, so a
// result never claims more degrees than both operands determine.

#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "genkron/bernoulli.hpp"
#include "genkron/exact.hpp"

namespace genkron {

/// Raised when a series is not a multiple of the requested linear form.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UniSeries {
public:
    /// The zero series mod F_trunc.
    explicit UniSeries(int trunc);
    /// Coefficients for degrees 0 .. trunc-1; a shorter vector is zero-padded.
    UniSeries(int trunc, std::vector<Rational> coeffs);

    static UniSeries generate(int trunc, const std::function<Rational(int)>& coeff);
    static UniSeries constant(const Rational& c, int trunc);
    /// The series Z.
    static UniSeries variable(int trunc);

    int trunc() const { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](int degree) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    UniSeries truncated(int trunc) const;
    bool is_zero() const;
    /// Lowest degree with a nonzero coefficient; trunc() for the zero series.
    int order() const;

    UniSeries operator-() const;
    UniSeries& operator*=(const Rational& c);

    friend UniSeries operator+(const UniSeries& lhs, const UniSeries& rhs);
    friend UniSeries operator-(const UniSeries& lhs, const UniSeries& rhs);
    friend UniSeries operator*(const UniSeries& lhs, const UniSeries& rhs);
    friend UniSeries operator*(const Rational& c, UniSeries s) { return s *= c; }
    friend bool operator==(const UniSeries&, const UniSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// e^{scalar Z} mod F_trunc.
UniSeries uni_exp(const Rational& scalar, int trunc);

/// Multiplicative inverse; requires a nonzero constant term.
UniSeries uni_inverse(const UniSeries& s);

/// log s for s with constant term 1, via log s = integral of s'/s.
UniSeries uni_log(const UniSeries& s);

/// Dense triangular series in X and Y, truncated by total degree.
class BiSeries {
public:
    explicit BiSeries(int trunc);

    /// coeffs in kernels::tri_index order; a shorter vector is zero-padded.
    static BiSeries from_coeffs(int trunc, std::vector<Rational> coeffs);
    static BiSeries generate(int trunc, const std::function<Rational(int a, int b)>& coeff);
    static BiSeries constant(const Rational& c, int trunc);
    /// c X^a Y^b; zero when a + b >= trunc.
    static BiSeries monomial(int a, int b, const Rational& c, int trunc);
    /// f(X) g(Y) truncated at min of the two truncations.
    static BiSeries outer(const UniSeries& x_part, const UniSeries& y_part);
    static BiSeries in_x(const UniSeries& s);
    static BiSeries in_y(const UniSeries& s);

    int trunc() const { return trunc_; }
    /// Coefficient of X^a Y^b; throws std::out_of_range unless a, b >= 0 and a + b < trunc().
    const Rational& coeff(int a, int b) const;
    std::span<const Rational> data() const { return coeffs_; }

    BiSeries truncated(int trunc) const;
    /// X and Y exchanged.
    BiSeries swapped() const;
    /// Substitutes X = Y = Z.
    UniSeries diagonal() const;
    /// Drops every term with Y-degree 0.
    BiSeries without_pure_x() const;
    bool is_zero() const;
    /// Lowest total degree carrying a nonzero coefficient; trunc() for the zero series.
    int order() const;
    /// True when every coefficient of total degree < degree is zero.
    bool vanishes_below(int degree) const { return order() >= degree; }

    BiSeries operator-() const;
    BiSeries& operator*=(const Rational& c);

    friend BiSeries operator+(const BiSeries& lhs, const BiSeries& rhs);
    friend BiSeries operator-(const BiSeries& lhs, const BiSeries& rhs);
    friend BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs);
    friend BiSeries operator*(const Rational& c, BiSeries s) { return s *= c; }
    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    int trunc_;
    std::vector<Rational> coeffs_;
};

/// Product through the serial reference kernel; operator* uses the OpenMP kernel.
BiSeries multiply_serial(const BiSeries& lhs, const BiSeries& rhs);

enum class LinearForm { y_minus_x, x_minus_y };

/// L * s. L is an exact polynomial, so the product is known one degree further
/// than s: the result has truncation s.trunc() + 1.
BiSeries multiply_by_linear(const BiSeries& s, LinearForm form);

/// q with q * L = s. Needs s.trunc() >= 2; q has truncation s.trunc() - 1.
/// Throws NotDivisible when s(Z, Z) is nonzero below the truncation.
BiSeries divide_by_linear(const BiSeries& s, LinearForm form);

/// e^{iX} e^{jY}: coefficient of X^a Y^b is i^a j^b / (a! b!), 0^0 = 1.
BiSeries bi_exp_monomial(long i, long j, int trunc);

/// sum_i B_i / i! (Y - X)^i
BiSeries phi(int trunc, BernoulliCache& cache = shared_bernoulli_cache());

/// integral_X^Y (e^t - 1)^(n+1) dt through its closed form
/// (-1)^(n+1) sum_{k=1}^{n+1} ((-1)^k / k) C(n+1,k) (e^{kY} - e^{kX}) + (-1)^(n+1) (Y - X).
BiSeries expand_f(int n, int trunc);

/// f / (e^{Y-X} - 1) from the expanded closed form (sum of exponentials plus
/// (-1)^(n+1) Phi).
BiSeries expand_g_closed(int n, int trunc);

/// f / (Y - X), obtained by exact division of f computed one degree further.
BiSeries expand_g1(int n, int trunc);

/// g as g1 * Phi.
BiSeries expand_g_alt(int n, int trunc);

/// Sparse Laurent polynomial in z with no zero coefficients stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const long, Rational>> terms);

    static LaurentPoly monomial(long exponent, const Rational& c = 1);

    const std::map<long, Rational>& terms() const { return terms_; }
    Rational coeff(long exponent) const;
    bool is_zero() const { return terms_.empty(); }
    /// Sum of coefficients; the kernel of this map is the augmentation ideal.
    Rational augmentation() const;

    /// f(e^Z) mod F_trunc.
    UniSeries at_exp(int trunc) const;

    LaurentPoly pow(unsigned exponent) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += -rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(const Rational& c, LaurentPoly f) { return f *= c; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(long exponent, const Rational& c);

    std::map<long, Rational> terms_;
};

// Text form: one nonzero term per line, ascending total degree, "a b num/den"
// for BiSeries (X-degree first, descending within a degree) and "i num/den"
// for UniSeries.
void write_terms(std::ostream& out, const BiSeries& s);
void write_terms(std::ostream& out, const UniSeries& s);
BiSeries read_bi_terms(std::istream& in, int trunc);
UniSeries read_uni_terms(std::istream& in, int trunc);

} // namespace genkron
