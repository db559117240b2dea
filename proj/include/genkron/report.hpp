#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "genkron/bernoulli.hpp"

namespace genkron {

struct OutputRecord {
    MethodId method;
    int m = 0;
    Rational value;
    std::int64_t nanos = 0;
};

/// Evaluates B_m by the given method and times the call.
OutputRecord timed_bernoulli(int m, const MethodId& method);

/// "B_m = num/den", optionally followed by a rounded decimal marked approximate.
std::string format_record(const OutputRecord& rec, std::optional<int> decimal_digits = std::nullopt);

/// JSON array with keys method, m, a, n (null for unparameterized methods), value, elapsed_ns.
std::string records_to_json(const std::vector<OutputRecord>& recs);

/// Inverse of records_to_json; the value strings are parsed back to Rationals.
std::vector<OutputRecord> records_from_json(const std::string& text);

struct BenchConfig {
    std::vector<int> ms = {10, 50, 100, 200};
    std::vector<Method> methods = {Method::recurrence, Method::kronecker, Method::generalized,
                                   Method::generalized_simple};
    int repetitions = 1;
    int n_scale = 1;      // generalized methods use n = n_scale * m
    bool a_half = true;   // a = m / 2 when set, else a = 0
};

/// One row per (m, method, repetition), grouped by m. The recurrence method
/// gets a fresh cache on every repetition so its timing covers the whole table.
std::vector<OutputRecord> run_bench(const BenchConfig& config);

/// True when every row sharing an m carries the same value.
bool bench_values_consistent(const std::vector<OutputRecord>& rows);

/// "method,m,a,n,nanos,value" header plus one line per row; a and n are empty
/// for methods without parameters.
void write_bench_csv(std::ostream& out, const std::vector<OutputRecord>& rows);

} // namespace genkron
