// genkron: exact Bernoulli numbers by closed formulas, identity sweeps, series dumps and timing tables.
//
// Exit codes: 0 success, 1 an identity failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genkron/bernoulli.hpp"
#include "genkron/muhat.hpp"
#include "genkron/report.hpp"
#include "genkron/series.hpp"
#include "genkron/verify.hpp"

namespace {

using namespace genkron;

constexpr int exit_ok = 0;
constexpr int exit_identity_failure = 1;
constexpr int exit_usage = 2;

struct ComputeArgs {
    int m = 0;
    std::optional<int> to;
    std::string method = "recurrence";
    int a = 0;
    std::optional<int> n;
    std::optional<int> decimal;
};

struct VerifyArgs {
    std::string suite = "all";
    std::optional<int> max_n;
    VerifyBounds bounds;
};

struct ExpandArgs {
    std::string object;
    int n = 0;
    long k = 1;
    int trunc = 1;
};

struct BenchArgs {
    std::vector<int> ms = {10, 50, 100, 200};
    std::vector<std::string> methods = {"recurrence", "kronecker", "generalized", "generalized-simple"};
    int reps = 1;
    int n_scale = 1;
    bool a_zero = false;
};

int run_compute(const ComputeArgs& args, bool as_json, std::ostream& out)
{
    auto kind = parse_method(args.method);
    const int last = args.to.value_or(args.m);
    if (last < args.m) {
        throw PreconditionError("--to must be >= --m");
    }
    std::vector<OutputRecord> recs;
    for (int m = args.m; m <= last; ++m) {
        MethodId id{*kind, args.a, args.n.value_or(m)};
        recs.push_back(timed_bernoulli(m, id));
    }
    if (as_json) {
        out << records_to_json(recs) << '\n';
    } else {
        for (const auto& r : recs) {
            out << format_record(r, args.decimal) << '\n';
        }
    }
    return exit_ok;
}

int run_verify(VerifyArgs args, bool as_json, std::ostream& out)
{
    if (args.max_n) {
        args.bounds.max_n = *args.max_n;
        args.bounds.lemma_max_n = *args.max_n;
    }
    std::vector<std::string> suites;
    if (args.suite == "all") {
        suites = suite_names();
    } else {
        suites.push_back(args.suite);
    }

    std::vector<SuiteReport> reports;
    bool all_passed = true;
    for (const auto& name : suites) {
        reports.push_back(run_suite(name, args.bounds));
        all_passed = all_passed && reports.back().passed();
    }

    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back({{"suite", r.suite},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"first_failure", r.first_failure.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.first_failure)}});
        }
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << "suite " << r.suite << ": ";
            if (r.passed()) {
                out << "pass (" << r.checks << " checks)\n";
            } else {
                out << "FAIL (" << r.failures << " of " << r.checks
                    << " checks failed); minimal failing instance: " << r.first_failure << '\n';
            }
        }
        out << (all_passed ? "pass" : "fail") << '\n';
    }
    return all_passed ? exit_ok : exit_identity_failure;
}

BiSeries expand_object(const ExpandArgs& args)
{
    const std::string& o = args.object;
    if (o == "f") {
        return expand_f(args.n, args.trunc);
    }
    if (o == "g") {
        return expand_g_closed(args.n, args.trunc);
    }
    if (o == "g-alt") {
        return expand_g_alt(args.n, args.trunc);
    }
    if (o == "g1") {
        return expand_g1(args.n, args.trunc);
    }
    if (o == "phi") {
        return phi(args.trunc);
    }
    if (o == "muhat-zk") {
        return muhat_group_power(args.k, args.trunc);
    }
    if (o == "muhat-Zk") {
        // one extra degree in, so the quotient is known mod F_trunc
        if (args.k < 1) {
            throw PreconditionError("muhat-Zk requires --k >= 1");
        }
        return muhat_log_power(static_cast<int>(args.k), args.trunc + 1);
    }
    if (o == "muhat-Z-inversion") {
        return muhat_Z_via_inversion(args.n, args.trunc);
    }
    if (o == "theorem4-rhs") {
        return theorem4_rhs(args.trunc);
    }
    if (o == "theorem4") {
        return theorem4_statement(args.trunc);
    }
    throw PreconditionError("unknown object '" + o + "'");
}

int run_expand(const ExpandArgs& args, bool as_json, std::ostream& out)
{
    BiSeries s = expand_object(args);
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        std::istringstream lines([&] {
            std::ostringstream os;
            write_terms(os, s);
            return os.str();
        }());
        int a = 0;
        int b = 0;
        std::string value;
        while (lines >> a >> b >> value) {
            arr.push_back({{"a", a}, {"b", b}, {"value", value}});
        }
        out << arr.dump(2) << '\n';
    } else {
        write_terms(out, s);
    }
    return exit_ok;
}

int run_bench_cmd(const BenchArgs& args, bool as_json, std::ostream& out)
{
    BenchConfig config;
    config.ms = args.ms;
    config.methods.clear();
    for (const auto& name : args.methods) {
        config.methods.push_back(*parse_method(name));
    }
    config.repetitions = args.reps;
    config.n_scale = args.n_scale;
    config.a_half = !args.a_zero;

    auto rows = run_bench(config);
    if (as_json) {
        out << records_to_json(rows) << '\n';
    } else {
        write_bench_csv(out, rows);
    }
    if (!bench_values_consistent(rows)) {
        std::cerr << "error: methods disagree on the value of some B_m\n";
        return exit_identity_failure;
    }
    return exit_ok;
}

std::vector<std::string> method_choices()
{
    return {"recurrence", "kronecker", "generalized", "generalized-simple"};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Bernoulli numbers via generalized Kronecker formulas, with identity verification"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string out_path;
    app.add_flag("--json", as_json, "Emit records as a JSON array");
    app.add_option("--out", out_path, "Also write stdout to FILE");

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "Compute B_m by one method");
    compute->add_option("--m", compute_args.m, "Index m")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--to", compute_args.to, "Stream B_m .. B_to");
    compute->add_option("--method", compute_args.method)->check(CLI::IsMember(method_choices()));
    compute->add_option("--a", compute_args.a, "Parameter a for the generalized methods");
    compute->add_option("--n", compute_args.n, "Parameter n for the generalized methods (default m)");
    compute->add_option("--decimal", compute_args.decimal, "Append a rounded decimal with this many digits (approximate)")
        ->check(CLI::NonNegativeNumber);

    VerifyArgs verify_args;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    auto* verify = app.add_subcommand("verify", "Run identity sweeps");
    verify->add_option("--suite", verify_args.suite)->check(CLI::IsMember(suite_choices));
    verify->add_option("--max-n", verify_args.max_n, "Bound on n for the generalized and lemma sweeps")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-m", verify_args.bounds.max_m, "Bound on m for the Kronecker sweep")->check(CLI::PositiveNumber);
    verify->add_option("--series-max-n", verify_args.bounds.series_max_n)->check(CLI::PositiveNumber);
    verify->add_option("--trunc", verify_args.bounds.trunc, "Truncation of the Laurent corpus")->check(CLI::PositiveNumber);
    verify->add_option("--cases", verify_args.bounds.cases, "Size of randomized corpora")->check(CLI::PositiveNumber);
    verify->add_option("--max-p", verify_args.bounds.theorem4_max_p)->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_args.bounds.seed);

    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "Print a truncated series, one term per line");
    expand->add_option("--object", expand_args.object)
        ->required()
        ->check(CLI::IsMember({"f", "g", "g-alt", "g1", "phi", "muhat-zk", "muhat-Zk", "muhat-Z-inversion",
                               "theorem4-rhs", "theorem4"}));
    expand->add_option("--n", expand_args.n)->check(CLI::NonNegativeNumber);
    expand->add_option("--k", expand_args.k);
    expand->add_option("--trunc", expand_args.trunc)->required()->check(CLI::PositiveNumber);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time every method and emit CSV");
    bench->add_option("--m", bench_args.ms, "Values of m")->delimiter(',')->check(CLI::NonNegativeNumber);
    bench->add_option("--methods", bench_args.methods)->delimiter(',')->check(CLI::IsMember(method_choices()));
    bench->add_option("--reps", bench_args.reps)->check(CLI::PositiveNumber);
    bench->add_option("--n-scale", bench_args.n_scale, "Generalized methods use n = n-scale * m")->check(CLI::PositiveNumber);
    bench->add_flag("--a-zero", bench_args.a_zero, "Use a = 0 instead of a = m/2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        if (*compute) {
            code = run_compute(compute_args, as_json, buffer);
        } else if (*verify) {
            code = run_verify(verify_args, as_json, buffer);
        } else if (*expand) {
            code = run_expand(expand_args, as_json, buffer);
        } else if (*bench) {
            code = run_bench_cmd(bench_args, as_json, buffer);
        }
    } catch (const PreconditionError& e) {
        std::cout << buffer.str();
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::cout << buffer.str();
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return exit_usage;
        }
        file << buffer.str();
    }
    return code;
}
