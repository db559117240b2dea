#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "genkron/exact.hpp"

namespace genkron {

/// Bernoulli numbers B_0, B_1, ... produced by the defining recurrence
///     sum_{k=0}^{m} C(m+1, k) B_k = 0   (m >= 1),   B_0 = 1,
/// which is the coefficient form of x = (e^x - 1) * sum B_i x^i / i!.
///
/// The cache only grows. Readers share a lock; an extension takes the
/// exclusive lock, so any number of threads may call get() concurrently.
class BernoulliCache {
public:
    BernoulliCache();

    Rational get(int m);
    std::size_t size() const;

private:
    void extend_to(int m);

    mutable std::shared_mutex mutex_;
    std::vector<Rational> values_;
};

/// Process-wide cache used wherever a B_i is needed as an oracle value.
BernoulliCache& shared_bernoulli_cache();

enum class Method { recurrence, kronecker, generalized, generalized_simple };

struct MethodId {
    Method kind = Method::recurrence;
    int a = 0;
    int n = 0;

    bool has_params() const { return kind == Method::generalized || kind == Method::generalized_simple; }
    friend bool operator==(const MethodId&, const MethodId&) = default;
};

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

Rational bernoulli_recurrence(int m, BernoulliCache& cache = shared_bernoulli_cache());

/// Kronecker's closed form, m >= 2.
Rational bernoulli_kronecker(int m);

/// Two-parameter closed form with the delta_{a,m} k^m correction; needs 0 <= a <= m <= n.
Rational bernoulli_generalized(int m, int a, int n);

/// Same without the delta term; needs m >= 2 as well.
Rational bernoulli_generalized_simple(int m, int a, int n);

/// sum_{k=1}^{n+1} (-1)^k C(n+1, k) k^m for 0 <= m <= n. Equals -1 for m = 0, else 0.
Rational lemma1_sum(int m, int n);

/// B_m minus the generalized closed form, evaluated for any m >= a >= 0, n >= 0
/// (no m <= n requirement). Zero exactly when the closed form is valid; it is the
/// quantity whose multiple appears as the X^a Y^(m-a) coefficient of g.
Rational kronecker_residual(int m, int a, int n);

Rational bernoulli(int m, const MethodId& method);

/// Throws PreconditionError unless 0 <= a <= m <= n; the message names the failed inequality.
void check_generalized_params(int m, int a, int n);

} // namespace genkron
