#include "genkron/kernels.hpp"

#include <exception>

namespace genkron::kernels::serial {

void bi_mul(std::span<const Rational> lhs, std::span<const Rational> rhs, std::span<Rational> out, int trunc)
{
    Rational prod;
    for (int d = 0; d < trunc; ++d) {
        for (int a = 0; a <= d; ++a) {
            const int b = d - a;
            Rational acc = 0;
            for (int a1 = 0; a1 <= a; ++a1) {
                for (int b1 = 0; b1 <= b; ++b1) {
                    const Rational& u = lhs[tri_index(a1, b1)];
                    if (sgn(u) == 0) {
                        continue;
                    }
                    mpq_mul(prod.get_mpq_t(), u.get_mpq_t(), rhs[tri_index(a - a1, b - b1)].get_mpq_t());
                    acc += prod;
                }
            }
            out[tri_index(a, b)] = std::move(acc);
        }
    }
}

Rational bracket_sum(int m, int a, int n, bool with_delta)
{
    if (a < 0 || a > m || n < 0) {
        throw PreconditionError("bracket_sum: requires 0 <= a <= m and n >= 0");
    }
    Rational sum = 0;
    Integer choose = 1; // C(n+1, 0)
    for (int k = 1; k <= n + 1; ++k) {
        choose *= static_cast<unsigned long>(n + 2 - k);
        mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), static_cast<unsigned long>(k));

        Integer bracket = weighted_power_sum(a, m, k);
        if (with_delta && a == m) {
            bracket += ipow(k, static_cast<unsigned long>(m));
        }
        Rational term = make_rational(bracket * choose, k);
        if (k % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body)
{
    std::exception_ptr first;
    for (std::size_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            if (!first) {
                first = std::current_exception();
            }
        }
    }
    if (first) {
        std::rethrow_exception(first);
    }
}

} // namespace genkron::kernels::serial
