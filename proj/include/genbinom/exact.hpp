#ifndef GENBINOM_EXACT_HPP
#define GENBINOM_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace genbinom {

// All arithmetic in this project is exact. Integers are GMP big integers,
// rationals are GMP rationals kept in canonical form (gcd(num,den)=1, den>0).
using ExactInt = mpz_class;
using ExactRat = mpq_class;

inline ExactRat make_rat(const ExactInt& num, const ExactInt& den)
{
    if (den == 0)
        throw std::domain_error("make_rat: zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const ExactRat& q)
{
    return q.get_den() == 1;
}

// Exact integer division. A nonzero remainder is a bug signal, not a
// rounding concern, so it throws.
inline ExactInt exact_div(const ExactInt& a, const ExactInt& b)
{
    if (b == 0)
        throw std::domain_error("exact_div: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("exact_div: " + a.get_str() +
                                " not divisible by " + b.get_str());
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline ExactInt factorial(long n)
{
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Binomial coefficient with the zero convention used throughout:
// 0 if b < 0, 0 if a >= 0 and b > a, and 0 for negative upper argument.
inline ExactInt binomial(long a, long b)
{
    if (b < 0 || a < 0 || b > a)
        return 0;
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

// Raising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
inline ExactInt raising_factorial(long a, long k)
{
    if (k < 0)
        throw std::domain_error("raising_factorial: negative k");
    ExactInt r = 1;
    for (long i = 0; i < k; ++i)
        r *= a + i;
    return r;
}

inline ExactRat raising_factorial(const ExactRat& a, long k)
{
    if (k < 0)
        throw std::domain_error("raising_factorial: negative k");
    ExactRat r = 1;
    for (long i = 0; i < k; ++i)
        r *= a + i;
    return r;
}

// Lowering factorial a(a-1)...(a-k+1), the empty product for k = 0.
inline ExactInt lowering_factorial(long a, long k)
{
    if (k < 0)
        throw std::domain_error("lowering_factorial: negative k");
    ExactInt r = 1;
    for (long i = 0; i < k; ++i)
        r *= a - i;
    return r;
}

} // namespace genbinom

#endif // GENBINOM_EXACT_HPP
