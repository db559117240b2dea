#include "genkron/bernoulli.hpp"

#include <mutex>
#include <string>

#include "genkron/kernels.hpp"

namespace genkron {

BernoulliCache::BernoulliCache()
{
    values_.emplace_back(1);
    values_.push_back(make_rational(-1, 2));
}

Rational BernoulliCache::get(int m)
{
    if (m < 0) {
        throw PreconditionError("bernoulli: requires m >= 0");
    }
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::size_t>(m) < values_.size()) {
            return values_[static_cast<std::size_t>(m)];
        }
    }
    std::unique_lock lock(mutex_);
    extend_to(m);
    return values_[static_cast<std::size_t>(m)];
}

std::size_t BernoulliCache::size() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

void BernoulliCache::extend_to(int m)
{
    while (values_.size() <= static_cast<std::size_t>(m)) {
        const long next = static_cast<long>(values_.size());
        // B_next = -1/(next+1) * sum_{k<next} C(next+1, k) B_k
        Rational acc = 0;
        for (long k = 0; k < next; ++k) {
            const Rational& bk = values_[static_cast<std::size_t>(k)];
            if (sgn(bk) != 0) {
                acc += Rational(binomial(next + 1, k)) * bk;
            }
        }
        values_.push_back(-acc / Rational(next + 1));
    }
}

BernoulliCache& shared_bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

std::string_view method_name(Method method)
{
    switch (method) {
    case Method::recurrence:
        return "recurrence";
    case Method::kronecker:
        return "kronecker";
    case Method::generalized:
        return "generalized";
    case Method::generalized_simple:
        return "generalized-simple";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name)
{
    for (Method m : {Method::recurrence, Method::kronecker, Method::generalized, Method::generalized_simple}) {
        if (method_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

Rational bernoulli_recurrence(int m, BernoulliCache& cache)
{
    return cache.get(m);
}

void check_generalized_params(int m, int a, int n)
{
    auto fail = [&](const char* which) {
        throw PreconditionError("requires 0 <= a <= m <= n; violated " + std::string(which) + " (m=" +
                                std::to_string(m) + ", a=" + std::to_string(a) + ", n=" + std::to_string(n) + ")");
    };
    if (a < 0) {
        fail("0 <= a");
    }
    if (a > m) {
        fail("a <= m");
    }
    if (m > n) {
        fail("m <= n");
    }
}

Rational bernoulli_kronecker(int m)
{
    if (m < 2) {
        throw PreconditionError("kronecker formula requires m >= 2 (m=" + std::to_string(m) + ")");
    }
    return kernels::omp::bracket_sum(m, 0, m, false);
}

Rational bernoulli_generalized(int m, int a, int n)
{
    check_generalized_params(m, a, n);
    Rational s = kernels::omp::bracket_sum(m, a, n, true);
    return (a % 2 == 0) ? s : Rational(-s);
}

Rational bernoulli_generalized_simple(int m, int a, int n)
{
    if (m < 2) {
        throw PreconditionError("generalized-simple formula requires m >= 2 (m=" + std::to_string(m) + ")");
    }
    check_generalized_params(m, a, n);
    Rational s = kernels::omp::bracket_sum(m, a, n, false);
    return (a % 2 == 0) ? s : Rational(-s);
}

Rational lemma1_sum(int m, int n)
{
    if (m < 0) {
        throw PreconditionError("lemma1_sum: requires m >= 0");
    }
    if (m > n) {
        throw PreconditionError("lemma1_sum: requires m <= n (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    }
    Integer sum = 0;
    for (int k = 1; k <= n + 1; ++k) {
        Integer term = binomial(n + 1, k) * ipow(k, static_cast<unsigned long>(m));
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return Rational(sum);
}

Rational kronecker_residual(int m, int a, int n)
{
    if (a < 0 || a > m || n < 0) {
        throw PreconditionError("kronecker_residual: requires 0 <= a <= m and n >= 0");
    }
    Rational s = kernels::omp::bracket_sum(m, a, n, true);
    // (-1)^a * sum_k ((-1)^k / k) ... + B_m, and the kernel sums with (-1)^(k+1).
    Rational closed = (a % 2 == 0) ? Rational(-s) : s;
    return closed + bernoulli_recurrence(m);
}

Rational bernoulli(int m, const MethodId& method)
{
    switch (method.kind) {
    case Method::recurrence:
        return bernoulli_recurrence(m);
    case Method::kronecker:
        return bernoulli_kronecker(m);
    case Method::generalized:
        return bernoulli_generalized(m, method.a, method.n);
    case Method::generalized_simple:
        return bernoulli_generalized_simple(m, method.a, method.n);
    }
    throw PreconditionError("unknown method");
}

} // namespace genkron
