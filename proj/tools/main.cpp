#include <genbinom/genbinom.hpp>
#include <genbinom/partitions.hpp>
#include <genbinom/series.hpp>
#include <genbinom/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace genbinom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitShapeViolation = 2;
constexpr int kExitUsage = 64;

std::vector<long> parse_long_list(const std::string& s, const char* what)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) +
                                        ": bad integer '" + item + "'");
        }
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

int run_value(long n, long p, long k, const std::string& formula)
{
    GBKey key(n, p, k);
    if (formula == "canonical") {
        std::cout << gb_canonical(key).get_str() << "\n";
        return kExitOk;
    }
    if (k < 1 || k > n) {
        std::cerr << "error: formula '" << formula
                  << "' requires 1 <= k <= n; use the default formula for "
                     "boundary keys\n";
        return kExitUsage;
    }
    if ((formula == "second" || formula == "all") && p < 1 &&
        formula == "second") {
        std::cerr << "error: formula 'second' requires p >= 1\n";
        return kExitUsage;
    }
    if (formula == "def") {
        std::cout << gb_def(key).get_str() << "\n";
    } else if (formula == "sum") {
        std::cout << gb_sum(key).get_str() << "\n";
    } else if (formula == "alt") {
        std::cout << gb_alt(key).get_str() << "\n";
    } else if (formula == "second") {
        std::cout << gb_second(key).get_str() << "\n";
    } else if (formula == "symmetric") {
        std::cout << gb_symmetric(key).get_str() << "\n";
    } else { // all
        std::vector<std::pair<const char*, ExactInt>> vals;
        vals.emplace_back("def", gb_def(key));
        vals.emplace_back("sum", gb_sum(key));
        vals.emplace_back("alt", gb_alt(key));
        if (p >= 1)
            vals.emplace_back("second", gb_second(key));
        vals.emplace_back("symmetric", gb_symmetric(key));
        for (const auto& [name, v] : vals)
            std::cout << v.get_str() << "\n";
        for (const auto& [name, v] : vals)
            if (v != vals[0].second) {
                std::cerr << "FAIL consensus at " << key.str() << ": " << name
                          << " = " << v.get_str() << " but "
                          << vals[0].first << " = "
                          << vals[0].second.get_str() << "\n";
                return kExitIdentityFailure;
            }
    }
    return kExitOk;
}

int run_table(long n, const std::string& format)
{
    GBTable table(n);
    if (format == "csv") {
        std::cout << "p\\k";
        for (long k = 0; k <= n; ++k)
            std::cout << "," << k;
        std::cout << "\n";
        for (long p = 0; p <= n; ++p) {
            for (long k = 0; k <= n; ++k)
                std::cout << (k ? "," : "") << table.at(p, k).get_str();
            std::cout << "\n";
        }
    } else if (format == "json") {
        json rows = json::array();
        for (long p = 0; p <= n; ++p) {
            json row = json::array();
            for (long k = 0; k <= n; ++k)
                row.push_back(table.at(p, k).get_str());
            rows.push_back(row);
        }
        std::cout << json{{"n", n}, {"rows", rows}}.dump() << "\n";
    } else {
        for (long p = 0; p <= n; ++p) {
            for (long k = 0; k <= n; ++k)
                std::cout << (k ? " " : "") << table.at(p, k).get_str();
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_verify(const std::vector<std::string>& suites, const VerifyOptions& opts,
               const std::string& format)
{
    std::vector<SuiteReport> reports;
    for (const auto& name : suites)
        reports.push_back(run_suite(name, opts));

    bool ok = true;
    long total_failures = 0;
    for (const auto& rep : reports) {
        ok = ok && rep.ok();
        total_failures += static_cast<long>(rep.failures.size());
    }

    if (format == "json") {
        json out;
        out["suites"] = json::array();
        for (const auto& rep : reports) {
            json failures = json::array();
            for (const auto& f : rep.failures)
                failures.push_back(
                    {{"what", f.what}, {"lhs", f.lhs}, {"rhs", f.rhs}});
            out["suites"].push_back({{"name", rep.name},
                                     {"cases", rep.cases},
                                     {"failures", failures},
                                     {"seconds", rep.seconds}});
        }
        out["ok"] = ok;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "suite,cases,failures\n";
        for (const auto& rep : reports)
            std::cout << rep.name << "," << rep.cases << ","
                      << rep.failures.size() << "\n";
        for (const auto& rep : reports)
            for (const auto& f : rep.failures)
                std::cerr << "FAIL " << f.what << ": lhs=" << f.lhs
                          << " rhs=" << f.rhs << "\n";
    } else {
        for (const auto& rep : reports) {
            std::cout << "suite " << rep.name << ": " << rep.cases
                      << " cases, " << rep.failures.size() << " failures";
            std::fprintf(stdout, " (%.2fs)\n", rep.seconds);
            for (const auto& f : rep.failures)
                std::cout << "  FAIL " << f.what << ": lhs=" << f.lhs
                          << " rhs=" << f.rhs << "\n";
        }
        std::cout << (ok ? "OK" : "FAILED") << " (" << total_failures
                  << " failures)\n";
    }
    return ok ? kExitOk : kExitIdentityFailure;
}

int run_conjecture(const std::vector<long>& r, const std::vector<long>& ns,
                   const std::string& format)
{
    ConjectureReport rep = check_conjecture(r, ns);
    bool shape_ok = true;
    for (const auto& res : rep.results)
        shape_ok = shape_ok && res.coeffs.shape_ok;

    if (format == "json") {
        json results = json::array();
        for (const auto& res : rep.results) {
            json coeffs = json::array();
            for (size_t i = 0; i < res.coeffs.c.size(); ++i)
                coeffs.push_back({{"k", static_cast<long>(i + 1)},
                                  {"c", res.coeffs.c[i].get_str()}});
            results.push_back({{"n", res.n},
                               {"coeffs", coeffs},
                               {"integral", res.integral},
                               {"positive", res.positive}});
        }
        std::cout << json{{"r", rep.r},
                          {"results", results},
                          {"stable", rep.stable}}
                         .dump()
                  << "\n";
    } else if (format == "csv") {
        std::cout << "n,k,c\n";
        for (const auto& res : rep.results)
            for (size_t i = 0; i < res.coeffs.c.size(); ++i)
                std::cout << res.n << "," << i + 1 << ","
                          << res.coeffs.c[i].get_str() << "\n";
    } else {
        for (const auto& res : rep.results) {
            std::cout << "n=" << res.n << ":";
            for (size_t i = 0; i < res.coeffs.c.size(); ++i)
                std::cout << " c_" << i + 1 << "=" << res.coeffs.c[i].get_str();
            std::cout << (res.integral ? " integral" : " NON-INTEGRAL")
                      << (res.positive ? " positive" : " NON-POSITIVE")
                      << (res.coeffs.shape_ok ? "" : " SHAPE-VIOLATION")
                      << "\n";
        }
        std::cout << "stable: " << (rep.stable ? "yes" : "no") << "\n";
    }
    if (!shape_ok) {
        for (const auto& res : rep.results)
            for (const auto& [k, a] : res.coeffs.out_of_range)
                std::cerr << "shape violation at n=" << res.n << ": a_" << k
                          << " = " << a.get_str() << " (expected 0)\n";
        return kExitShapeViolation;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "Exact computation and verification of generalized binomial "
        "coefficients, their generating functions, and partition-moment "
        "coefficients."};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    // value
    long n = 0, p = 0, k = 0;
    std::string formula = "canonical";
    auto* value_cmd =
        app.add_subcommand("value", "Compute a single coefficient");
    value_cmd->add_option("n", n, "upper index, n >= 1")->required();
    value_cmd->add_option("p", p, "middle index, 0 <= p <= n")->required();
    value_cmd->add_option("k", k, "lower index, k >= 0")->required();
    value_cmd->add_option("--formula", formula,
                          "evaluation route (default: total canonical route)")
        ->check(CLI::IsMember(
            {"canonical", "def", "sum", "alt", "second", "symmetric", "all"}));

    // table
    long table_n = 0;
    std::string table_format = "plain";
    auto* table_cmd =
        app.add_subcommand("table", "Print the full (n+1)x(n+1) table");
    table_cmd->add_option("n", table_n, "table size, n >= 1")->required();
    table_cmd->add_option("--format", table_format, "csv, json or plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}));

    // verify
    std::string suites_arg = "core,gf,partition,lemma,conjecture";
    std::string verify_format = "plain";
    std::string corrupt_arg;
    VerifyOptions vopts;
    vopts.workers = 0;
    auto* verify_cmd = app.add_subcommand(
        "verify",
        "Run verification suites. Grids per suite (N = --max-n):\n"
        "  core:       formula consensus, positivity, divisibility, symmetry,\n"
        "              special values, k=0/k>n conventions for n <= N; the\n"
        "              recurrence and the alternating sum identity for n <= N\n"
        "  gf:         bivariate and univariate generating functions n <= N,\n"
        "              helper Lucas identity n <= N+10, closing identity\n"
        "              n <= min(N,12), contiguity grid |a|<=6, -8<=b<=0, c=2,\n"
        "              truncation degree 16\n"
        "  partition:  moment identity for n <= N, r <= 5, s <= 5\n"
        "  lemma:      factorial-weighted three-term identity for r+s <= N+2\n"
        "  conjecture: m=1 and m=2 reductions for weight <= min(N,8), n <= N;\n"
        "              m=3 probes for weight <= min(N,9)");
    verify_cmd->add_option("--suites", suites_arg,
                           "comma-separated subset of "
                           "core,gf,partition,lemma,conjecture");
    verify_cmd->add_option("--max-n", vopts.max_n, "grid size parameter")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--workers", vopts.workers,
                           "worker threads (default: GENBINOM_WORKERS or "
                           "hardware concurrency)");
    verify_cmd->add_option("--format", verify_format, "csv, json or plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}));
    verify_cmd
        ->add_option("--corrupt", corrupt_arg,
                     "test harness: perturb the table entry n,p,k inside the "
                     "core sweep")
        ->group("");

    // conjecture
    std::string r_arg, n_arg = "0";
    std::string conj_format = "plain";
    auto* conj_cmd = app.add_subcommand(
        "conjecture", "Compute partition-moment coefficients c_k");
    conj_cmd->add_option("--r", r_arg, "multi-index, e.g. 2,2")->required();
    conj_cmd->add_option("--n", n_arg, "comma-separated n values")->required();
    conj_cmd->add_option("--format", conj_format, "csv, json or plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*value_cmd)
            return run_value(n, p, k, formula);
        if (*table_cmd)
            return run_table(table_n, table_format);
        if (*verify_cmd) {
            std::vector<std::string> suites;
            std::stringstream ss(suites_arg);
            std::string name;
            while (std::getline(ss, name, ',')) {
                const auto& known = suite_names();
                if (std::find(known.begin(), known.end(), name) == known.end()) {
                    std::cerr << "error: unknown suite '" << name << "'\n";
                    return kExitUsage;
                }
                suites.push_back(name);
            }
            if (suites.empty()) {
                std::cerr << "error: no suites selected\n";
                return kExitUsage;
            }
            if (!corrupt_arg.empty()) {
                auto xs = parse_long_list(corrupt_arg, "--corrupt");
                if (xs.size() != 3) {
                    std::cerr << "error: --corrupt expects n,p,k\n";
                    return kExitUsage;
                }
                vopts.corrupt = std::array<long, 3>{xs[0], xs[1], xs[2]};
            }
            return run_verify(suites, vopts, verify_format);
        }
        if (*conj_cmd) {
            auto r = parse_long_list(r_arg, "--r");
            auto ns = parse_long_list(n_arg, "--n");
            return run_conjecture(r, ns, conj_format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
    return kExitOk;
}
