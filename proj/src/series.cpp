#include <genbinom/series.hpp>

#include <algorithm>

namespace genbinom {

namespace {

BiPoly trace_poly()
{
    // (1+x)(1+y)
    BiPoly t;
    t.add_term(0, 0, 1);
    t.add_term(1, 0, 1);
    t.add_term(0, 1, 1);
    t.add_term(1, 1, 1);
    return t;
}

BiPoly product_poly()
{
    // x(1+y)
    BiPoly p;
    p.add_term(1, 0, 1);
    p.add_term(1, 1, 1);
    return p;
}

} // namespace

BiPoly lucas_bivariate(long n)
{
    if (n < 0)
        throw std::invalid_argument("lucas_bivariate: n must be >= 0");
    BiPoly prev = BiPoly::constant(2);
    if (n == 0)
        return prev;
    const BiPoly trace = trace_poly();
    const BiPoly prod = product_poly();
    BiPoly cur = trace;
    for (long m = 2; m <= n; ++m) {
        BiPoly next = trace * cur - prod * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BiPoly gb_bipoly(const GBTable& table)
{
    BiPoly r;
    const long n = table.n();
    for (long p = 0; p <= n; ++p)
        for (long k = 0; k <= n; ++k)
            r.add_term(p, k, ExactRat(table.at(p, k)));
    return r;
}

BiPoly gb_bipoly(long n)
{
    return gb_bipoly(GBTable(n));
}

bool check_thm2(long n)
{
    if (n < 1)
        throw std::invalid_argument("check_thm2: n must be >= 1");
    return gb_bipoly(n) == lucas_bivariate(n);
}

bool lucas_univariate_check(long n)
{
    if (n < 1)
        throw std::invalid_argument("lucas_univariate_check: n must be >= 1");
    std::vector<ExactRat> coeffs;
    for (long i = 0; i < n; ++i)
        coeffs.push_back(make_rat(ExactInt(n) * binomial(n - i, i), n - i));
    Poly lhs(std::move(coeffs));

    const Poly z = Poly::variable();
    Poly prev(2), cur(1);
    for (long m = 2; m <= n; ++m) {
        Poly next = cur + z * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return lhs == cur;
}

Poly hyp2f1_trunc(long a, long b, long c, long degree)
{
    if (c < 1)
        throw std::invalid_argument("hyp2f1_trunc: c must be >= 1");
    if (degree < 0)
        throw std::invalid_argument("hyp2f1_trunc: degree must be >= 0");
    std::vector<ExactRat> coeffs;
    ExactRat term = 1;
    coeffs.push_back(term);
    for (long j = 0; j < degree; ++j) {
        // coefficient of y^{j+1} over coefficient of y^j, argument -y
        term *= make_rat(ExactInt(-1) * (a + j) * (b + j),
                         ExactInt(c + j) * (j + 1));
        if (term == 0)
            break;
        coeffs.push_back(term);
    }
    return Poly(std::move(coeffs));
}

Poly gf_theorem4(long n, long p)
{
    if (n < 1 || p < 0 || p > n)
        throw std::invalid_argument("gf_theorem4: requires 1 <= n, 0 <= p <= n");
    Poly one_plus_y(std::vector<ExactRat>{1, 1});
    Poly f = hyp2f1_trunc(p + 1, p - n + 1, 2, n);
    Poly rhs = (ExactRat(n) * one_plus_y.pow(p) * f).shifted(1);
    return rhs.truncated(n);
}

bool check_thm4(long n)
{
    if (n < 1)
        throw std::invalid_argument("check_thm4: n must be >= 1");
    GBTable table(n);
    for (long p = 0; p <= n; ++p) {
        std::vector<ExactRat> col(n + 1);
        for (long k = 1; k <= n; ++k)
            col[k] = ExactRat(table.at(p, k));
        if (gf_theorem4(n, p) != Poly(std::move(col)))
            return false;
    }
    return true;
}

bool check_contiguity(long a, long b, long c, long degree)
{
    // Positive-argument series F[.;y] obtained from the (-y) expansion by
    // flipping odd coefficients.
    auto f = [degree, c](long aa, long bb) {
        return hyp2f1_trunc(aa, bb, c, degree).negated_argument();
    };
    Poly one_minus_y(std::vector<ExactRat>{1, -1});
    Poly lhs = ExactRat(c - b - 1) * f(a, b) -
               ExactRat(a) * one_minus_y * f(a + 1, b + 1);
    Poly rhs = ExactRat(c - a - b - 1) * f(a, b + 1);
    return lhs.truncated(degree) == rhs.truncated(degree);
}

bool check_closing_identity(long n)
{
    if (n < 1)
        throw std::invalid_argument("check_closing_identity: n must be >= 1");
    BiPoly rhs = BiPoly::constant(1);
    rhs.add_term(n, 0, 1);
    for (long p = 0; p <= n; ++p) {
        Poly col = gf_theorem4(n, p);
        for (long k = 0; k <= col.degree(); ++k)
            rhs.add_term(p, k, col.coeff(k));
    }
    return lucas_bivariate(n) == rhs;
}

} // namespace genbinom
