#include "genkron/report.hpp"

#include <chrono>
#include <map>
#include <ostream>

#include <json.hpp>

namespace genkron {

using json = nlohmann::json;

OutputRecord timed_bernoulli(int m, const MethodId& method)
{
    const auto start = std::chrono::steady_clock::now();
    Rational value = bernoulli(m, method);
    const auto stop = std::chrono::steady_clock::now();
    return {method, m, std::move(value), std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()};
}

std::string format_record(const OutputRecord& rec, std::optional<int> decimal_digits)
{
    std::string line = "B_" + std::to_string(rec.m) + " = " + to_string(rec.value);
    if (decimal_digits) {
        line += "  (approx " + to_decimal(rec.value, *decimal_digits) + ")";
    }
    return line;
}

std::string records_to_json(const std::vector<OutputRecord>& recs)
{
    json arr = json::array();
    for (const auto& r : recs) {
        json j;
        j["method"] = std::string(method_name(r.method.kind));
        j["m"] = r.m;
        j["a"] = r.method.has_params() ? json(r.method.a) : json(nullptr);
        j["n"] = r.method.has_params() ? json(r.method.n) : json(nullptr);
        j["value"] = to_string(r.value);
        j["elapsed_ns"] = r.nanos;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::vector<OutputRecord> records_from_json(const std::string& text)
{
    std::vector<OutputRecord> out;
    for (const auto& j : json::parse(text)) {
        auto kind = parse_method(j.at("method").get<std::string>());
        if (!kind) {
            throw std::invalid_argument("unknown method in record");
        }
        OutputRecord r;
        r.method.kind = *kind;
        if (r.method.has_params()) {
            r.method.a = j.at("a").get<int>();
            r.method.n = j.at("n").get<int>();
        }
        r.m = j.at("m").get<int>();
        r.value = parse_rational(j.at("value").get<std::string>());
        r.nanos = j.at("elapsed_ns").get<std::int64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<OutputRecord> run_bench(const BenchConfig& config)
{
    if (config.ms.empty() || config.methods.empty() || config.repetitions < 1 || config.n_scale < 1) {
        throw PreconditionError("bench: needs at least one m, one method, repetitions >= 1 and n-scale >= 1");
    }
    std::vector<OutputRecord> rows;
    for (int m : config.ms) {
        for (Method kind : config.methods) {
            MethodId id{kind, 0, 0};
            if (id.has_params()) {
                id.a = config.a_half ? m / 2 : 0;
                id.n = config.n_scale * m;
            }
            for (int rep = 0; rep < config.repetitions; ++rep) {
                if (kind == Method::recurrence) {
                    BernoulliCache fresh;
                    const auto start = std::chrono::steady_clock::now();
                    Rational value = bernoulli_recurrence(m, fresh);
                    const auto stop = std::chrono::steady_clock::now();
                    rows.push_back({id, m, std::move(value),
                                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()});
                } else {
                    rows.push_back(timed_bernoulli(m, id));
                }
            }
        }
    }
    return rows;
}

bool bench_values_consistent(const std::vector<OutputRecord>& rows)
{
    std::map<int, Rational> first;
    for (const auto& r : rows) {
        auto [it, inserted] = first.try_emplace(r.m, r.value);
        if (!inserted && it->second != r.value) {
            return false;
        }
    }
    return true;
}

void write_bench_csv(std::ostream& out, const std::vector<OutputRecord>& rows)
{
    out << "method,m,a,n,nanos,value\n";
    for (const auto& r : rows) {
        out << method_name(r.method.kind) << ',' << r.m << ',';
        if (r.method.has_params()) {
            out << r.method.a << ',' << r.method.n;
        } else {
            out << ',';
        }
        out << ',' << r.nanos << ',' << to_string(r.value) << '\n';
    }
}

} // namespace genkron
