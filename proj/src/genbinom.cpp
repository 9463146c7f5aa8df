#include <genbinom/genbinom.hpp>

#include <algorithm>

namespace genbinom {

ExactInt gb_def(const GBKey& key)
{
    const long n = key.n, p = key.p, k = key.k;
    if (k < 1 || k > n)
        throw std::domain_error("gb_def: requires 1 <= k <= n, got " +
                                key.str());
    // Terminating 3F2[1-k,-p,p-n; 1-n,1; 1]: last nonzero term index is
    // min(k-1, p, n-p), so the (1-n+r) denominator never vanishes.
    const long last = std::min({k - 1, p, n - p});
    ExactRat term = 1;
    ExactRat sum = 1;
    for (long r = 0; r < last; ++r) {
        ExactInt num = ExactInt(1 - k + r) * (-p + r) * (p - n + r);
        ExactInt den = ExactInt(1 - n + r) * (1 + r) * (r + 1);
        term *= make_rat(num, den);
        sum += term;
    }
    ExactRat value = sum * binomial(n, k);
    if (!is_integer(value))
        throw std::domain_error("gb_def: non-integer result at " + key.str());
    return value.get_num();
}

ExactInt gb_sum(const GBKey& key)
{
    const long n = key.n, p = key.p, k = key.k;
    if (k < 1)
        throw std::domain_error("gb_sum: requires k >= 1, got " + key.str());
    if (k > n)
        return 0;
    ExactInt inner = 0;
    const long rmax = std::min({p, n - p, k - 1});
    for (long r = 0; r <= rmax; ++r)
        inner += binomial(p, r) * binomial(n - p, r) *
                 binomial(n - r - 1, k - r - 1);
    return exact_div(n * inner, k);
}

ExactInt gb_canonical(const GBKey& key)
{
    if (key.k == 0)
        return (key.p == 0 || key.p == key.n) ? 1 : 0;
    if (key.k > key.n)
        return 0;
    return gb_sum(key);
}

ExactInt gb_alt(const GBKey& key)
{
    const long n = key.n, p = key.p, k = key.k;
    if (k < 1 || k > n)
        throw std::domain_error("gb_alt: requires 1 <= k <= n, got " +
                                key.str());
    ExactInt sum = 0;
    for (long i = 0; i <= n - k; ++i) {
        ExactInt bracket = binomial(n - i, i) + binomial(n - i - 1, i - 1);
        ExactInt term = binomial(n - i, k) * binomial(n - 2 * i, p - i) *
                        bracket;
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

ExactInt gb_second(const GBKey& key)
{
    const long n = key.n, p = key.p, k = key.k;
    if (p < 1)
        throw std::domain_error("gb_second: requires p >= 1, got " +
                                key.str());
    if (k < 1 || k > n)
        throw std::domain_error("gb_second: requires 1 <= k <= n, got " +
                                key.str());
    ExactInt inner = 0;
    for (long i = 0; i <= k - 1; ++i)
        inner += binomial(n - p + i, n - p) * binomial(p, i + 1) *
                 binomial(n - p, k - i - 1);
    ExactRat value = make_rat(n * inner, p);
    if (!is_integer(value))
        throw std::domain_error("gb_second: non-integer result at " +
                                key.str());
    return value.get_num();
}

ExactInt gb_symmetric(const GBKey& key)
{
    const long n = key.n, p = key.p, k = key.k;
    if (k < 1 || k > n)
        throw std::domain_error("gb_symmetric: requires 1 <= k <= n, got " +
                                key.str());
    ExactInt sum = 0;
    for (long i = 0; i <= n - k; ++i) {
        sum += binomial(k - 1 + i, n - p) * binomial(p, n - k - i) *
               binomial(n - p, i);
        sum += binomial(k - 1 + i, p) * binomial(n - p, n - k - i) *
               binomial(p, i);
    }
    return sum;
}

std::optional<ExactInt> special_value(const GBKey& key)
{
    const long n = key.n, k = key.k;
    const long q = std::min(key.p, n - key.p); // symmetry
    const long p = key.p;

    if (k > n)
        return ExactInt(0);
    if (q == 0)
        return binomial(n, k);
    if (k == 0)
        return std::nullopt; // covered by the gb_canonical convention
    if (q == 1)
        return ExactInt(k) * binomial(n, k);
    if (q == 2)
        return ExactInt(k) * binomial(n, k) +
               exact_div(ExactInt(n) * (n - 3), 2) * binomial(n - 2, k - 2);
    if (k == 1)
        return ExactInt(n);
    if (k == 2)
        return exact_div(ExactInt(n) * (n - 1 + p * (n - p)), 2);
    if (k == n)
        return binomial(n, p);
    if (n >= 2 && k == n - 1)
        return ExactInt(n) * (binomial(n - 1, p - 1) + binomial(n - 2, p));
    if (n >= 3 && k == n - 2)
        return binomial(n, 2) * (binomial(n - 2, p) + binomial(n - 2, p - 2)) +
               exact_div(ExactInt(n) * (n - 3), 2) * binomial(n - 4, p - 2);
    return std::nullopt;
}

GBTable::GBTable(long n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("GBTable: n must be >= 1");
    rows_.resize(n + 1);
    for (long p = 0; p <= n; ++p) {
        rows_[p].resize(n + 1);
        for (long k = 0; k <= n; ++k)
            rows_[p][k] = gb_canonical(GBKey(n, p, k));
    }
    for (long p = 0; p <= n; ++p)
        for (long k = 0; k <= n; ++k)
            if (rows_[p][k] != rows_[n - p][k])
                throw std::logic_error("GBTable: symmetry violation at p=" +
                                       std::to_string(p) +
                                       ",k=" + std::to_string(k));
}

namespace {

CheckResult make_check(const std::string& what, const ExactInt& lhs,
                       const ExactInt& rhs)
{
    return CheckResult{lhs == rhs, lhs.get_str(), rhs.get_str(), what};
}

CheckResult make_check(const std::string& what, const ExactRat& lhs,
                       const ExactRat& rhs)
{
    return CheckResult{lhs == rhs, lhs.get_str(), rhs.get_str(), what};
}

} // namespace

CheckResult check_recurrence(long n, long p, long k)
{
    if (n < 2 || p < 1 || p > n || k < 1 || k > n)
        throw std::invalid_argument("check_recurrence: out of domain");
    ExactInt lhs = (n - 1) * (ExactInt(n - p + 1) * gb_canonical(GBKey(n, p - 1, k)) -
                              ExactInt(p) * gb_canonical(GBKey(n, p, k)));
    ExactInt rhs = ExactInt(n) * (n - 2 * p + 1) *
                   gb_canonical(GBKey(n - 1, p - 1, k));
    return make_check("recurrence(n=" + std::to_string(n) +
                          ",p=" + std::to_string(p) +
                          ",k=" + std::to_string(k) + ")",
                      lhs, rhs);
}

CheckResult check_sum_identity(long n, long p, long k)
{
    if (p < 1 || p > n || k < 1 || k > n)
        throw std::invalid_argument("check_sum_identity: out of domain");
    ExactInt lhs = ExactInt(n + 1) * (gb_canonical(GBKey(n, p, k)) +
                                      gb_canonical(GBKey(n, p - 1, k)));
    ExactInt correction = 0;
    for (long i = 2; i <= n - k; ++i) {
        ExactInt term = binomial(n - i, k) * binomial(n - 2 * i + 1, p - i) *
                        binomial(n - i - 1, i - 2);
        if (i % 2 == 0)
            correction += term;
        else
            correction -= term;
    }
    ExactInt rhs = ExactInt(k + 1) * gb_canonical(GBKey(n + 1, p, k + 1)) -
                   ExactInt(n + 1) * correction;
    return make_check("sum_identity(n=" + std::to_string(n) +
                          ",p=" + std::to_string(p) +
                          ",k=" + std::to_string(k) + ")",
                      lhs, rhs);
}

CheckResult check_lemma(long r, long s, long k)
{
    if (r < 0 || s < 1 || r + s < 1 || k < 1 || k > r + s + 1)
        throw std::invalid_argument("check_lemma: out of domain");
    ExactRat lhs = make_rat(factorial(r + 1) * factorial(s), r + s + 1) *
                   gb_canonical(GBKey(r + s + 1, s, k));
    ExactRat rhs = make_rat(factorial(r) * factorial(s + 1), r + s + 1) *
                       gb_canonical(GBKey(r + s + 1, s + 1, k)) +
                   ExactRat(r - s) *
                       make_rat(factorial(r) * factorial(s), r + s) *
                       gb_canonical(GBKey(r + s, s, k));
    return make_check("lemma(r=" + std::to_string(r) +
                          ",s=" + std::to_string(s) +
                          ",k=" + std::to_string(k) + ")",
                      lhs, rhs);
}

CheckResult check_divisibility(const GBKey& key)
{
    const long n = key.n, p = key.p, k = key.k;
    if (k < 1 || k > n)
        throw std::invalid_argument("check_divisibility: requires 1 <= k <= n");
    ExactInt v = gb_sum(key);
    ExactInt vk = v * k;
    ExactInt vp = v * p;
    bool ok_k = mpz_divisible_ui_p(vk.get_mpz_t(),
                                   static_cast<unsigned long>(n));
    bool ok_p = p < 1 || mpz_divisible_ui_p(vp.get_mpz_t(),
                                            static_cast<unsigned long>(n));
    return CheckResult{ok_k && ok_p, vk.get_str() + "," + vp.get_str(),
                       "0 mod " + std::to_string(n),
                       "divisibility" + key.str()};
}

} // namespace genbinom
