#include "genkron/kernels.hpp"

#include <exception>
#include <vector>

#include <omp.h>

namespace genkron::kernels {

int max_threads()
{
    return omp_get_max_threads();
}

namespace omp {

void bi_mul(std::span<const Rational> lhs, std::span<const Rational> rhs, std::span<Rational> out, int trunc)
{
    const auto total = static_cast<long>(tri_size(trunc));

    // Every output coefficient is an independent convolution; the high-degree
    // ones are the expensive ones, hence dynamic scheduling.
#pragma omp parallel
    {
        Rational prod;
#pragma omp for schedule(dynamic, 4)
        for (long idx = 0; idx < total; ++idx) {
            int d = 0;
            while (tri_index(0, d + 1) <= static_cast<std::size_t>(idx)) {
                ++d;
            }
            const int a = static_cast<int>(idx - static_cast<long>(tri_index(0, d)));
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
            out[static_cast<std::size_t>(idx)] = std::move(acc);
        }
    }
}

Rational bracket_sum(int m, int a, int n, bool with_delta)
{
    if (a < 0 || a > m || n < 0) {
        throw PreconditionError("bracket_sum: requires 0 <= a <= m and n >= 0");
    }
    const int top = n + 1;

    std::vector<Integer> left_pow(static_cast<std::size_t>(top) + 1);
    std::vector<Integer> right_pow(static_cast<std::size_t>(top) + 1);
    std::vector<Integer> choose(static_cast<std::size_t>(top) + 1);
    choose[0] = 1;
    for (int i = 0; i <= top; ++i) {
        left_pow[static_cast<std::size_t>(i)] = ipow(i, static_cast<unsigned long>(a));
        right_pow[static_cast<std::size_t>(i)] = ipow(i, static_cast<unsigned long>(m - a));
        if (i > 0) {
            choose[static_cast<std::size_t>(i)] = choose[static_cast<std::size_t>(i) - 1] * static_cast<unsigned long>(top + 1 - i);
            mpz_divexact_ui(choose[static_cast<std::size_t>(i)].get_mpz_t(), choose[static_cast<std::size_t>(i)].get_mpz_t(),
                            static_cast<unsigned long>(i));
        }
    }

    std::vector<Rational> terms(static_cast<std::size_t>(top) + 1);
#pragma omp parallel for schedule(dynamic)
    for (int k = 1; k <= top; ++k) {
        Integer bracket = 0;
        for (int i = 1; i < k; ++i) {
            bracket += left_pow[static_cast<std::size_t>(i)] * right_pow[static_cast<std::size_t>(k - i)];
        }
        if (with_delta && a == m) {
            bracket += ipow(k, static_cast<unsigned long>(m));
        }
        bracket *= choose[static_cast<std::size_t>(k)];
        if (k % 2 == 0) {
            bracket = -bracket;
        }
        terms[static_cast<std::size_t>(k)] = make_rational(bracket, k);
    }

    Rational sum = 0;
    for (int k = 1; k <= top; ++k) {
        sum += terms[static_cast<std::size_t>(k)];
    }
    return sum;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body)
{
    std::exception_ptr first;
    std::size_t first_index = count;
    const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(genkron_for_each_index)
            {
                // Keep the lowest failing index so the rethrown error does not depend on scheduling.
                if (static_cast<std::size_t>(i) < first_index) {
                    first_index = static_cast<std::size_t>(i);
                    first = std::current_exception();
                }
            }
        }
    }
    if (first) {
        std::rethrow_exception(first);
    }
}

} // namespace omp
} // namespace genkron::kernels
