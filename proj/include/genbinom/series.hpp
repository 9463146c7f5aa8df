#ifndef GENBINOM_SERIES_HPP
#define GENBINOM_SERIES_HPP

#include <genbinom/genbinom.hpp>
#include <genbinom/poly.hpp>

namespace genbinom {

// L_n(x,y) = alpha^n + beta^n for the roots of
// t^2 - (1+x)(1+y) t + x(1+y), computed square-root-free through the
// two-term recurrence L_n = (1+x)(1+y) L_{n-1} - x(1+y) L_{n-2},
// L_0 = 2, L_1 = (1+x)(1+y).
BiPoly lucas_bivariate(long n);

// sum_{0<=p,k<=n} gb(n,p,k) x^p y^k built from the full table.
BiPoly gb_bipoly(long n);
BiPoly gb_bipoly(const GBTable& table);

// Bivariate generating function: gb_bipoly(n) == lucas_bivariate(n).
bool check_thm2(long n);

// sum_{0<=i<n} n/(n-i) C(n-i,i) z^i against u_n from u_0 = 2, u_1 = 1,
// u_n = u_{n-1} + z u_{n-2}.
bool lucas_univariate_check(long n);

// Truncated 2F1[a,b;c;-y] as a Poly in y, via the exact term ratio
// (never factorial quotients, so negative integer parameters past
// termination are harmless). Stops at min(degree, termination index).
Poly hyp2f1_trunc(long a, long b, long c, long degree);

// n y (y+1)^p 2F1[p+1,p-n+1;2;-y], truncated at y-degree n (exact
// polynomial already for p < n; truncation only bites for p = n).
Poly gf_theorem4(long n, long p);

// Univariate generating function: gf_theorem4(n,p) against the gb table
// column sum, for every 0 <= p <= n.
bool check_thm4(long n);

// (c-b-1) F[a,b;c;y] - a(1-y) F[a+1,b+1;c;y] = (c-a-b-1) F[a,b+1;c;y],
// coefficientwise up to the truncation degree.
bool check_contiguity(long a, long b, long c, long degree);

// L_n(x,y) = 1 + x^n + sum_p x^p * gf_theorem4(n,p).
bool check_closing_identity(long n);

} // namespace genbinom

#endif // GENBINOM_SERIES_HPP
