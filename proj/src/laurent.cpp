#include "genkron/series.hpp"

namespace genkron {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const long, Rational>> terms)
{
    for (const auto& [e, c] : terms) {
        add_term(e, c);
    }
}

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& c)
{
    LaurentPoly f;
    f.add_term(exponent, c);
    return f;
}

void LaurentPoly::add_term(long exponent, const Rational& c)
{
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Rational LaurentPoly::coeff(long exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::augmentation() const
{
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        s += c;
    }
    return s;
}

UniSeries LaurentPoly::at_exp(int trunc) const
{
    UniSeries s(trunc);
    for (const auto& [e, c] : terms_) {
        s = s + c * uni_exp(Rational(e), trunc);
    }
    return s;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const
{
    LaurentPoly r = monomial(0);
    for (unsigned i = 0; i < exponent; ++i) {
        r = r * *this;
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) {
        x *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs)
{
    LaurentPoly r;
    for (const auto& [e1, c1] : lhs.terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            r.add_term(e1 + e2, c1 * c2);
        }
    }
    return r;
}

} // namespace genkron
