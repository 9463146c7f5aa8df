#ifndef GENBINOM_GENBINOM_HPP
#define GENBINOM_GENBINOM_HPP

#include <genbinom/exact.hpp>

#include <optional>
#include <string>
#include <vector>

namespace genbinom {

// The triple (n,p,k) indexing a generalized binomial coefficient.
// Constraints: n >= 1, 0 <= p <= n, k >= 0.
struct GBKey {
    long n;
    long p;
    long k;

    GBKey(long n_, long p_, long k_) : n(n_), p(p_), k(k_)
    {
        if (n < 1)
            throw std::invalid_argument("GBKey: n must be >= 1");
        if (p < 0 || p > n)
            throw std::invalid_argument("GBKey: p must be in [0,n]");
        if (k < 0)
            throw std::invalid_argument("GBKey: k must be >= 0");
    }

    std::string str() const
    {
        return "(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
               ",k=" + std::to_string(k) + ")";
    }
};

// Evaluation via the terminating 3F2 term-ratio recurrence times C(n,k).
// Requires 1 <= k <= n; the series is indeterminate at k = 0.
ExactInt gb_def(const GBKey& key);

// Canonical evaluator: (n/k) * sum_r C(p,r) C(n-p,r) C(n-r-1,k-r-1).
// Requires k >= 1; returns 0 for k > n. The only division is the final
// exact n/k rescale.
ExactInt gb_sum(const GBKey& key);

// Total wrapper: k=0 gives 1 for p in {0,n} and 0 otherwise (convention,
// see docs); k>n gives 0; otherwise gb_sum.
ExactInt gb_canonical(const GBKey& key);

// Alternating pure-integer bracket sum, no division anywhere.
ExactInt gb_alt(const GBKey& key);

// (n/p)-prefactored coefficient-identification sum; requires p >= 1 and
// 1 <= k <= n. Asserts integrality of the result.
ExactInt gb_second(const GBKey& key);

// Symmetrized two-bracket pure-integer sum; requires 1 <= k <= n.
ExactInt gb_symmetric(const GBKey& key);

// Closed-form value when (n,p,k) matches one of the special patterns
// (min(p,n-p) in {0,1,2}, or k in {1,2,n-1,n-2,n}, or k > n), absent
// otherwise. Serves as an independent oracle against gb_sum.
std::optional<ExactInt> special_value(const GBKey& key);

// Dense (n+1) x (n+1) table of gb_canonical values, rows p, columns k.
// Symmetry table[p][k] == table[n-p][k] is asserted at construction.
class GBTable {
public:
    explicit GBTable(long n);

    long n() const { return n_; }
    const ExactInt& at(long p, long k) const { return rows_.at(p).at(k); }
    const std::vector<ExactInt>& row(long p) const { return rows_.at(p); }

private:
    long n_;
    std::vector<std::vector<ExactInt>> rows_;
};

// Outcome of an identity check, with both evaluated sides as witness.
struct CheckResult {
    bool ok;
    std::string lhs;
    std::string rhs;
    std::string what;

    explicit operator bool() const { return ok; }
};

// (n-p+1) gb(n,p-1,k) - p gb(n,p,k) = n/(n-1) (n-2p+1) gb(n-1,p-1,k),
// compared after clearing the n-1 denominator. Requires n >= 2.
CheckResult check_recurrence(long n, long p, long k);

// gb(n,p,k) + gb(n,p-1,k) against (k+1)/(n+1) gb(n+1,p,k+1) minus the
// alternating correction sum, compared after clearing n+1.
CheckResult check_sum_identity(long n, long p, long k);

// The factorial-weighted three-term identity behind the Theorem-5 proof,
// checked as exact rationals. Requires r >= 0, s >= 1, r+s >= 1,
// 1 <= k <= r+s+1.
CheckResult check_lemma(long r, long s, long k);

// n | k*gb(n,p,k), and n | p*gb(n,p,k) when p >= 1.
CheckResult check_divisibility(const GBKey& key);

} // namespace genbinom

#endif // GENBINOM_GENBINOM_HPP
