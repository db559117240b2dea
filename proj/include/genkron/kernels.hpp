#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version and an
// OpenMP version with the same contract; the reference is what the tests and
// the benchmark compare against. Results are exact, so both versions must agree
// bit for bit.

#include <cstddef>
#include <functional>
#include <span>

#include "genkron/exact.hpp"

namespace genkron::kernels {

/// Triangular (total-degree) layout shared by BiSeries: entry (a, b) with
/// a + b = d lives at d(d+1)/2 + a.
constexpr std::size_t tri_index(int a, int b)
{
    const auto d = static_cast<std::size_t>(a + b);
    return d * (d + 1) / 2 + static_cast<std::size_t>(a);
}

constexpr std::size_t tri_size(int trunc)
{
    const auto p = static_cast<std::size_t>(trunc);
    return p * (p + 1) / 2;
}

int max_threads();

namespace serial {

/// out = lhs * rhs truncated at total degree trunc. All spans have tri_size(trunc) entries.
void bi_mul(std::span<const Rational> lhs, std::span<const Rational> rhs, std::span<Rational> out, int trunc);

/// sum_{k=1}^{n+1} ((-1)^(k+1)/k) C(n+1,k) [sum_{i=1}^{k-1} i^a (k-i)^(m-a) + delta k^m],
/// where delta = [with_delta && a == m]. Requires 0 <= a <= m, n >= 0.
Rational bracket_sum(int m, int a, int n, bool with_delta);

/// Calls body(i) for i in [0, count). The first exception thrown is rethrown after the loop.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace serial

namespace omp {

void bi_mul(std::span<const Rational> lhs, std::span<const Rational> rhs, std::span<Rational> out, int trunc);

Rational bracket_sum(int m, int a, int n, bool with_delta);

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace omp

} // namespace genkron::kernels
