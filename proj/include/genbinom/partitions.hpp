#ifndef GENBINOM_PARTITIONS_HPP
#define GENBINOM_PARTITIONS_HPP

#include <genbinom/genbinom.hpp>
#include <genbinom/poly.hpp>

#include <functional>
#include <map>
#include <vector>

namespace genbinom {

// Weakly decreasing sequence of positive integers.
class Partition {
public:
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long length() const { return static_cast<long>(parts_.size()); }
    long weight() const;

    // value -> multiplicity, values in decreasing order
    std::map<long, long, std::greater<>> multiplicities() const;

    std::string str() const;

private:
    std::vector<long> parts_;
};

// Streams the partitions of n in reverse lexicographic order,
// (n) first, (1,...,1) last. Iterative, no recursion.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(long n);

    // Fills `out` with the next partition; false when exhausted.
    bool next(std::vector<long>& out);

private:
    long n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<long> cur_;
};

std::vector<Partition> enumerate_partitions(long n);

// z_mu = prod_i i^{m_i} m_i!
ExactInt z_weight(const Partition& mu);

// sum over |mu| = n of X^{l(mu)-1}/z_mu * sum_i prod_j (mu_i)_{r_j},
// an exact polynomial in X of degree n-1. Entries of r must be >= 0.
Poly moment_lhs(long n, const std::vector<long>& r);

// Coefficients a_1..a_n over the triangular basis
// B_k(X) = C(X+n-1, n-k), deg B_k = n-k.
struct BinomialBasisExpansion {
    long n;
    std::vector<ExactRat> a; // a[k-1] multiplies B_k
};

// B_k as an explicit polynomial in X.
Poly binomial_basis_poly(long n, long k);

// Exact triangular elimination on leading coefficients; throws if
// degree(P) > n-1.
BinomialBasisExpansion to_binomial_basis(const Poly& P, long n);

// moment_lhs(n,(r,s)) against (r!s!/(r+s)) sum_k gb(r+s,s,k) B_k.
// Requires n >= 1, r >= 0, s >= 1.
CheckResult check_thm5(long n, long r, long s);

struct ConjectureCoeffs {
    std::vector<ExactRat> c;           // c[k-1] for k = 1..min(n,|r|)
    bool shape_ok;                     // a_k = 0 for k > min(n,|r|)
    std::vector<std::pair<long, ExactRat>> out_of_range; // offending a_k
};

// Expands moment_lhs(n,r) in the binomial basis and rescales by
// |r| / prod_j r_j!. Entries of r must be >= 1.
ConjectureCoeffs conjecture_coeffs(long n, const std::vector<long>& r);

struct ConjectureReport {
    std::vector<long> r;
    struct PerN {
        long n;
        ConjectureCoeffs coeffs;
        bool integral;
        bool positive;
    };
    std::vector<PerN> results;
    bool stable; // c_k agrees across all n for shared k
    bool all_ok() const;
};

ConjectureReport check_conjecture(const std::vector<long>& r,
                                  const std::vector<long>& n_values);

} // namespace genbinom

#endif // GENBINOM_PARTITIONS_HPP
