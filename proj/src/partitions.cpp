#include <genbinom/partitions.hpp>

#include <algorithm>
#include <numeric>

namespace genbinom {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::map<long, long, std::greater<>> Partition::multiplicities() const
{
    std::map<long, long, std::greater<>> m;
    for (long part : parts_)
        ++m[part];
    return m;
}

std::string Partition::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

PartitionEnumerator::PartitionEnumerator(long n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("PartitionEnumerator: n must be >= 1");
}

bool PartitionEnumerator::next(std::vector<long>& out)
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        cur_ = {n_};
        out = cur_;
        return true;
    }
    // Find the last part > 1; everything after it is a run of 1s.
    long i = static_cast<long>(cur_.size()) - 1;
    while (i >= 0 && cur_[i] == 1)
        --i;
    if (i < 0) {
        done_ = true;
        return false;
    }
    long m = cur_[i] - 1;
    long rem = 1 + (static_cast<long>(cur_.size()) - 1 - i);
    cur_.resize(i);
    cur_.push_back(m);
    while (rem > m) {
        cur_.push_back(m);
        rem -= m;
    }
    if (rem > 0)
        cur_.push_back(rem);
    out = cur_;
    return true;
}

std::vector<Partition> enumerate_partitions(long n)
{
    std::vector<Partition> out;
    PartitionEnumerator en(n);
    std::vector<long> parts;
    while (en.next(parts))
        out.emplace_back(parts);
    return out;
}

ExactInt z_weight(const Partition& mu)
{
    ExactInt z = 1;
    for (const auto& [value, mult] : mu.multiplicities()) {
        ExactInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(value),
                      static_cast<unsigned long>(mult));
        z *= pw * factorial(mult);
    }
    return z;
}

Poly moment_lhs(long n, const std::vector<long>& r)
{
    if (n < 1)
        throw std::invalid_argument("moment_lhs: n must be >= 1");
    for (long rj : r)
        if (rj < 0)
            throw std::invalid_argument("moment_lhs: r entries must be >= 0");

    Poly acc;
    PartitionEnumerator en(n);
    std::vector<long> parts;
    while (en.next(parts)) {
        Partition mu(parts);
        ExactInt inner = 0;
        for (const auto& [value, mult] : mu.multiplicities()) {
            ExactInt prod = 1;
            for (long rj : r)
                prod *= raising_factorial(value, rj);
            inner += mult * prod;
        }
        ExactRat weight = make_rat(inner, z_weight(mu));
        acc += (Poly(weight)).shifted(mu.length() - 1);
    }
    return acc;
}

Poly binomial_basis_poly(long n, long k)
{
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("binomial_basis_poly: requires 1 <= k <= n");
    // C(X+n-1, n-k) = prod_{t=0}^{n-k-1} (X+n-1-t) / (n-k)!
    Poly p(1);
    for (long t = 0; t < n - k; ++t)
        p = p * Poly(std::vector<ExactRat>{ExactRat(n - 1 - t), 1});
    p *= make_rat(1, factorial(n - k));
    return p;
}

BinomialBasisExpansion to_binomial_basis(const Poly& P, long n)
{
    if (n < 1)
        throw std::invalid_argument("to_binomial_basis: n must be >= 1");
    if (P.degree() > n - 1)
        throw std::invalid_argument(
            "to_binomial_basis: degree " + std::to_string(P.degree()) +
            " exceeds n-1 = " + std::to_string(n - 1));
    BinomialBasisExpansion out{n, {}};
    out.a.resize(n);
    Poly rest = P;
    for (long k = 1; k <= n; ++k) {
        const long d = n - k;
        // leading coefficient of B_k is 1/d!
        ExactRat ak = rest.coeff(d) * factorial(d);
        out.a[k - 1] = ak;
        if (ak != 0)
            rest -= ak * binomial_basis_poly(n, k);
    }
    if (!rest.is_zero())
        throw std::logic_error("to_binomial_basis: nonzero remainder");
    return out;
}

CheckResult check_thm5(long n, long r, long s)
{
    if (n < 1 || r < 0 || s < 1)
        throw std::invalid_argument("check_thm5: out of domain");
    Poly lhs = moment_lhs(n, {r, s});
    Poly rhs;
    ExactRat scale = make_rat(factorial(r) * factorial(s), r + s);
    const long kmax = std::min(n, r + s);
    for (long k = 1; k <= kmax; ++k) {
        ExactRat coeff = scale * gb_canonical(GBKey(r + s, s, k));
        rhs += coeff * binomial_basis_poly(n, k);
    }
    return CheckResult{lhs == rhs, lhs.str("X"), rhs.str("X"),
                       "thm5(n=" + std::to_string(n) +
                           ",r=" + std::to_string(r) +
                           ",s=" + std::to_string(s) + ")"};
}

ConjectureCoeffs conjecture_coeffs(long n, const std::vector<long>& r)
{
    if (r.empty())
        throw std::invalid_argument("conjecture_coeffs: empty multi-index");
    long weight = 0;
    ExactInt fact_prod = 1;
    for (long rj : r) {
        if (rj < 1)
            throw std::invalid_argument(
                "conjecture_coeffs: r entries must be >= 1");
        weight += rj;
        fact_prod *= factorial(rj);
    }
    BinomialBasisExpansion expansion = to_binomial_basis(moment_lhs(n, r), n);
    const long kmax = std::min(n, weight);
    ConjectureCoeffs out;
    out.shape_ok = true;
    ExactRat scale = make_rat(weight, fact_prod);
    for (long k = 1; k <= kmax; ++k)
        out.c.push_back(expansion.a[k - 1] * scale);
    for (long k = kmax + 1; k <= n; ++k) {
        if (expansion.a[k - 1] != 0) {
            out.shape_ok = false;
            out.out_of_range.emplace_back(k, expansion.a[k - 1]);
        }
    }
    return out;
}

bool ConjectureReport::all_ok() const
{
    if (!stable)
        return false;
    for (const auto& res : results)
        if (!res.integral || !res.positive || !res.coeffs.shape_ok)
            return false;
    return true;
}

ConjectureReport check_conjecture(const std::vector<long>& r,
                                  const std::vector<long>& n_values)
{
    ConjectureReport report;
    report.r = r;
    report.stable = true;
    for (long n : n_values) {
        ConjectureReport::PerN entry;
        entry.n = n;
        entry.coeffs = conjecture_coeffs(n, r);
        entry.integral = true;
        entry.positive = true;
        for (const auto& c : entry.coeffs.c) {
            if (!is_integer(c))
                entry.integral = false;
            if (c <= 0)
                entry.positive = false;
        }
        report.results.push_back(std::move(entry));
    }
    // cross-n stability for k shared by every run
    size_t shared = SIZE_MAX;
    for (const auto& res : report.results)
        shared = std::min(shared, res.coeffs.c.size());
    if (report.results.size() > 1 && shared != SIZE_MAX) {
        for (size_t k = 0; k < shared; ++k)
            for (size_t i = 1; i < report.results.size(); ++i)
                if (report.results[i].coeffs.c[k] !=
                    report.results[0].coeffs.c[k])
                    report.stable = false;
    }
    return report;
}

} // namespace genbinom
