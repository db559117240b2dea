#pragma once

// The linear map mu-hat from Laurent polynomials in z to Q[[X, Y]], its values
// on powers of Z = log z, the matrix route to mu-hat(Z), and the one-generator
// tensor model of mu on powers of a simple loop.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "genkron/series.hpp"

namespace genkron {

/// Thrown by invert_matrix when no nonzero pivot exists in some column.
class Singular : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sparse combination of pairs (i, j) standing for gamma^i (x) |gamma^j|.
/// The free class of the constant loop is zero, so pairs with j = 0 are never stored.
class TensorElem {
public:
    /// Adds c (i, j). A pair with j = 0 is the zero element and is dropped.
    void add(long i, long j, const Rational& c);

    const std::map<std::pair<long, long>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(long i, long j) const;

    TensorElem& operator+=(const TensorElem& rhs);
    TensorElem& operator*=(const Rational& c);
    friend TensorElem operator+(TensorElem lhs, const TensorElem& rhs) { return lhs += rhs; }
    friend TensorElem operator*(const Rational& c, TensorElem t) { return t *= c; }
    friend bool operator==(const TensorElem&, const TensorElem&) = default;

private:
    std::map<std::pair<long, long>, Rational> terms_;
};

class RationalMatrix {
public:
    explicit RationalMatrix(int order);

    static RationalMatrix identity(int order);

    int order() const { return order_; }
    const Rational& operator()(int row, int col) const { return entries_[index(row, col)]; }
    Rational& operator()(int row, int col) { return entries_[index(row, col)]; }
    std::vector<Rational> row(int r) const;

    friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t index(int row, int col) const;

    int order_;
    std::vector<Rational> entries_;
};

/// mu-hat(z^k):  k > 0: -sum_{i=1}^{k} e^{iX} e^{(k-i)Y};  k = 0: 0;
///               k < 0:  sum_{i=0}^{|k|-1} e^{-iX} e^{(k+i)Y}.
BiSeries muhat_group_power(long k, int trunc);

/// Linear extension of muhat_group_power.
BiSeries muhat_laurent(const LaurentPoly& f, int trunc);

/// (e^{-X} e^{Y} - 1) mu-hat(f) == f(e^X) - f(e^Y) mod F_trunc.
bool fundamental_identity_check(const LaurentPoly& f, int trunc);

/// (Y - X) mu-hat(f) == (f(e^X) - f(e^Y)) Phi mod F_trunc.
bool phi_identity_check(const LaurentPoly& f, int trunc);

/// mu-hat(Z^k) for k >= 1, solved from (Y - X) mu-hat(Z^k) = (X^k - Y^k) Phi by
/// exact division. Needs trunc >= 2; the result has truncation trunc - 1.
BiSeries muhat_log_power(int k, int trunc);

/// D_{ki} = k^i / i! for 1 <= k, i <= n + 1, stored 0-based.
RationalMatrix build_D(int n);

/// Exact Gauss-Jordan elimination. Throws Singular.
RationalMatrix invert_matrix(const RationalMatrix& m);

/// a_k = (-1)^(k+1) / k * C(n+1, k), k = 1 .. n+1.
std::vector<Rational> inverse_first_row_closed_form(int n);

/// sum_{k=1}^{n+1} a_k mu-hat(z^k), a = first row of build_D(n)^{-1}.
/// Agrees with mu-hat(Z) modulo F_{n+1}, so trunc must be <= n + 1.
BiSeries muhat_Z_via_inversion(int n, int trunc);

/// mu(gamma^k) for a simple loop gamma:
///   k > 0: -sum_{i=1}^{k-1} (i, k-i);  k = 0: 0;  k < 0: sum_{i=0}^{|k|-1} (-i, k+i).
TensorElem mu_simple_power(long k);

/// Linear extension of mu_simple_power to Laurent polynomials in gamma.
TensorElem mu_simple(const LaurentPoly& f);

/// sum c_{ij} e^{iX} e^{jY}, identifying X with Z (x) 1 and Y with 1 (x) Z.
BiSeries tensor_to_biseries(const TensorElem& t, int trunc);

/// The (k, 0) summand that mu-hat(z^k) keeps and mu(gamma^k) drops because |1| = 0:
/// -e^{kX} for k > 0, zero otherwise. For every k,
///   muhat_group_power(k) == tensor_to_biseries(mu_simple_power(k)) + constant_class_correction(k).
BiSeries constant_class_correction(long k, int trunc);

/// -1 - X/2 + Y/2 - sum_{k>=1} B_{2k}/(2k)! sum_{j=0}^{2k} (-1)^j C(2k, j) X^j Y^{2k-j},
/// i.e. mu-hat(log z) with log z (x) 1 -> X and 1 (x) log z -> Y.
BiSeries theorem4_rhs(int trunc, BernoulliCache& cache = shared_bernoulli_cache());

/// theorem4_rhs with every term whose right tensor factor is 1 (Y-degree 0) removed:
/// the image of mu(log gamma) for a simple loop.
BiSeries theorem4_statement(int trunc, BernoulliCache& cache = shared_bernoulli_cache());

/// sum_{i=1}^{order} (-1)^(i+1)/i (z - 1)^i
LaurentPoly log_z_truncated(int order);

/// Image of mu(log gamma) computed through the tensor model on the truncated
/// logarithm, with Y-degree-0 terms removed. Equals theorem4_statement(trunc).
BiSeries mu_log_simple(int trunc);

} // namespace genkron
