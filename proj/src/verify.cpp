#include <genbinom/verify.hpp>

#include <genbinom/partitions.hpp>
#include <genbinom/series.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

namespace genbinom {

namespace {

using Task = std::function<std::optional<Failure>()>;

// Runs the tasks across `workers` threads; results are collected per task
// index, so the report is identical regardless of worker count.
std::vector<Failure> run_tasks(const std::vector<Task>& tasks, int workers)
{
    if (workers <= 0)
        workers = default_workers();
    workers = std::max(1, std::min<int>(workers, tasks.size()));

    std::vector<std::optional<Failure>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                break;
            results[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::vector<Failure> failures;
    for (auto& r : results)
        if (r)
            failures.push_back(std::move(*r));
    return failures;
}

std::optional<Failure> pass()
{
    return std::nullopt;
}

std::optional<Failure> fail(std::string what, std::string lhs, std::string rhs)
{
    return Failure{std::move(what), std::move(lhs), std::move(rhs)};
}

std::optional<Failure> from_check(const CheckResult& c)
{
    if (c.ok)
        return pass();
    return fail(c.what, c.lhs, c.rhs);
}

// Every evaluator against the canonical one at a single key, plus
// positivity, divisibility, symmetry and the special-value oracle.
std::optional<Failure> consensus_case(long n, long p, long k, bool corrupted)
{
    GBKey key(n, p, k);
    ExactInt canonical = gb_sum(key);
    if (corrupted)
        canonical += 1;

    struct Eval {
        const char* name;
        ExactInt value;
    };
    std::vector<Eval> evals;
    evals.push_back({"gb_def", gb_def(key)});
    evals.push_back({"gb_alt", gb_alt(key)});
    evals.push_back({"gb_symmetric", gb_symmetric(key)});
    if (p >= 1)
        evals.push_back({"gb_second", gb_second(key)});
    for (const auto& e : evals)
        if (e.value != canonical)
            return fail("consensus " + key.str() + " gb_sum vs " + e.name,
                        canonical.get_str(), e.value.get_str());

    if (canonical <= 0)
        return fail("positivity " + key.str(), canonical.get_str(), "> 0");
    CheckResult div = check_divisibility(key);
    if (!div.ok)
        return from_check(div);
    ExactInt mirror = gb_sum(GBKey(n, n - p, k));
    if (mirror != canonical)
        return fail("symmetry " + key.str(), canonical.get_str(),
                    mirror.get_str());
    if (auto sv = special_value(key); sv && *sv != canonical)
        return fail("special_value " + key.str(), canonical.get_str(),
                    sv->get_str());
    return pass();
}

std::vector<Task> core_tasks(const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    for (long n = 1; n <= opts.max_n; ++n) {
        for (long p = 0; p <= n; ++p) {
            for (long k = 1; k <= n; ++k) {
                bool corrupted = opts.corrupt &&
                                 (*opts.corrupt)[0] == n &&
                                 (*opts.corrupt)[1] == p &&
                                 (*opts.corrupt)[2] == k;
                tasks.push_back([n, p, k, corrupted] {
                    return consensus_case(n, p, k, corrupted);
                });
            }
            // k = 0 convention and k > n vanishing
            tasks.push_back([n, p] {
                GBKey key(n, p, 0);
                ExactInt v = gb_canonical(key);
                ExactInt expect = (p == 0 || p == n) ? 1 : 0;
                if (v != expect)
                    return fail("k=0 convention " + key.str(), v.get_str(),
                                expect.get_str());
                GBKey beyond(n, p, n + 1);
                if (gb_canonical(beyond) != 0)
                    return fail("k>n vanishing " + beyond.str(),
                                gb_canonical(beyond).get_str(), "0");
                return pass();
            });
        }
        // recurrence and the post-Theorem-1 sum identity
        for (long p = 1; p <= n; ++p)
            for (long k = 1; k <= n; ++k) {
                if (n >= 2)
                    tasks.push_back(
                        [n, p, k] { return from_check(check_recurrence(n, p, k)); });
                tasks.push_back(
                    [n, p, k] { return from_check(check_sum_identity(n, p, k)); });
            }
    }
    return tasks;
}

std::vector<Task> gf_tasks(const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    for (long n = 1; n <= opts.max_n; ++n) {
        tasks.push_back([n]() -> std::optional<Failure> {
            if (!check_thm2(n))
                return fail("thm2 n=" + std::to_string(n), "gb_bipoly",
                            "lucas_bivariate");
            return pass();
        });
        tasks.push_back([n]() -> std::optional<Failure> {
            if (!check_thm4(n))
                return fail("thm4 n=" + std::to_string(n), "gf_theorem4",
                            "gb column sums");
            return pass();
        });
    }
    for (long n = 1; n <= opts.max_n + 10; ++n)
        tasks.push_back([n]() -> std::optional<Failure> {
            if (!lucas_univariate_check(n))
                return fail("lucas_univariate n=" + std::to_string(n),
                            "coefficient sum", "recurrence");
            return pass();
        });
    for (long n = 1; n <= std::min(opts.max_n, 12L); ++n)
        tasks.push_back([n]() -> std::optional<Failure> {
            if (!check_closing_identity(n))
                return fail("closing_identity n=" + std::to_string(n), "L_n",
                            "1 + x^n + column sum");
            return pass();
        });
    for (long a = -6; a <= 6; ++a)
        for (long b = -8; b <= 0; ++b)
            tasks.push_back([a, b]() -> std::optional<Failure> {
                if (!check_contiguity(a, b, 2, 16))
                    return fail("contiguity a=" + std::to_string(a) +
                                    ",b=" + std::to_string(b),
                                "lhs", "rhs");
                return pass();
            });
    return tasks;
}

std::vector<Task> partition_tasks(const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    for (long n = 1; n <= opts.max_n; ++n)
        for (long r = 0; r <= 5; ++r)
            for (long s = 1; s <= 5; ++s)
                tasks.push_back(
                    [n, r, s] { return from_check(check_thm5(n, r, s)); });
    return tasks;
}

std::vector<Task> lemma_tasks(const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    const long bound = opts.max_n + 2;
    for (long r = 0; r <= bound; ++r)
        for (long s = 1; r + s <= bound; ++s)
            for (long k = 1; k <= r + s + 1; ++k)
                tasks.push_back(
                    [r, s, k] { return from_check(check_lemma(r, s, k)); });
    return tasks;
}

std::string rat_list(const std::vector<ExactRat>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

std::vector<Task> conjecture_tasks(const VerifyOptions& opts)
{
    std::vector<Task> tasks;
    // m=1 must reduce to plain binomials
    for (long r1 = 1; r1 <= std::min(opts.max_n, 8L); ++r1)
        for (long n = 1; n <= opts.max_n; ++n)
            tasks.push_back([r1, n]() -> std::optional<Failure> {
                ConjectureCoeffs cc = conjecture_coeffs(n, {r1});
                if (!cc.shape_ok)
                    return fail("conjecture m=1 shape r=" + std::to_string(r1) +
                                    ",n=" + std::to_string(n),
                                rat_list(cc.c), "a_k = 0 beyond range");
                for (long k = 1; k <= static_cast<long>(cc.c.size()); ++k)
                    if (cc.c[k - 1] != binomial(r1, k))
                        return fail("conjecture m=1 r=" + std::to_string(r1) +
                                        ",n=" + std::to_string(n) +
                                        ",k=" + std::to_string(k),
                                    cc.c[k - 1].get_str(),
                                    binomial(r1, k).get_str());
                return pass();
            });
    // m=2 must reduce to gb(r+s, s, k)
    for (long r = 1; r <= std::min(opts.max_n, 8L); ++r)
        for (long s = 1; r + s <= std::min(opts.max_n, 8L); ++s)
            for (long n = 1; n <= opts.max_n; ++n)
                tasks.push_back([r, s, n]() -> std::optional<Failure> {
                    ConjectureCoeffs cc = conjecture_coeffs(n, {r, s});
                    if (!cc.shape_ok)
                        return fail("conjecture m=2 shape r=(" +
                                        std::to_string(r) + "," +
                                        std::to_string(s) +
                                        "),n=" + std::to_string(n),
                                    rat_list(cc.c), "a_k = 0 beyond range");
                    for (long k = 1; k <= static_cast<long>(cc.c.size()); ++k) {
                        ExactInt expect = gb_canonical(GBKey(r + s, s, k));
                        if (cc.c[k - 1] != expect)
                            return fail("conjecture m=2 r=(" +
                                            std::to_string(r) + "," +
                                            std::to_string(s) +
                                            "),n=" + std::to_string(n) +
                                            ",k=" + std::to_string(k),
                                        cc.c[k - 1].get_str(),
                                        expect.get_str());
                    }
                    return pass();
                });
    // m=3 probes: integral, positive, stable across n
    for (long r1 = 1; r1 <= std::min(opts.max_n, 9L); ++r1)
        for (long r2 = 1; r2 <= r1; ++r2)
            for (long r3 = 1; r3 <= r2; ++r3) {
                if (r1 + r2 + r3 > std::min(opts.max_n, 9L))
                    continue;
                tasks.push_back([r1, r2, r3]() -> std::optional<Failure> {
                    long w = r1 + r2 + r3;
                    ConjectureReport rep =
                        check_conjecture({r1, r2, r3}, {w, w + 1, w + 2});
                    if (!rep.all_ok())
                        return fail("conjecture m=3 r=(" + std::to_string(r1) +
                                        "," + std::to_string(r2) + "," +
                                        std::to_string(r3) + ")",
                                    rat_list(rep.results[0].coeffs.c),
                                    "integral, positive, stable");
                    return pass();
                });
            }
    return tasks;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"core", "gf", "partition",
                                                   "lemma", "conjecture"};
    return names;
}

int default_workers()
{
    if (const char* env = std::getenv("GENBINOM_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1)
            return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts)
{
    if (opts.max_n < 1)
        throw std::invalid_argument("run_suite: max_n must be >= 1");
    std::vector<Task> tasks;
    if (name == "core")
        tasks = core_tasks(opts);
    else if (name == "gf")
        tasks = gf_tasks(opts);
    else if (name == "partition")
        tasks = partition_tasks(opts);
    else if (name == "lemma")
        tasks = lemma_tasks(opts);
    else if (name == "conjecture")
        tasks = conjecture_tasks(opts);
    else
        throw std::invalid_argument("run_suite: unknown suite '" + name + "'");

    SuiteReport report;
    report.name = name;
    report.cases = static_cast<long>(tasks.size());
    auto t0 = std::chrono::steady_clock::now();
    report.failures = run_tasks(tasks, opts.workers);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

} // namespace genbinom
