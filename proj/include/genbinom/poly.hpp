#ifndef GENBINOM_POLY_HPP
#define GENBINOM_POLY_HPP

#include <genbinom/exact.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace genbinom {

// Dense univariate polynomial over ExactRat, index = degree.
// Canonical form: no trailing zero coefficient; the zero polynomial has
// an empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(const ExactRat& c) { coeffs_.push_back(c); trim(); }
    Poly(const ExactInt& c) : Poly(ExactRat(c)) {}
    Poly(long c) : Poly(ExactRat(c)) {}
    explicit Poly(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    static Poly variable() { return Poly(std::vector<ExactRat>{0, 1}); }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    ExactRat coeff(long d) const
    {
        if (d < 0 || d > degree())
            return 0;
        return coeffs_[d];
    }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator*=(const ExactRat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const ExactRat& s) { return a *= s; }
    friend Poly operator*(const ExactRat& s, Poly a) { return a *= s; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Poly pow(long e) const;

    // Keep only coefficients of degree <= d.
    Poly truncated(long d) const;

    // Substitute y -> -y (flip the sign of odd-degree coefficients).
    Poly negated_argument() const;

    // Multiply by y^s.
    Poly shifted(long s) const;

    std::string str(const std::string& var = "y") const;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<ExactRat> coeffs_;
};

// Sparse bivariate polynomial in x,y; key = (x-degree, y-degree).
// No stored zero coefficients.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(const ExactRat& c);
    static BiPoly monomial(long px, long py, const ExactRat& c);

    ExactRat coeff(long px, long py) const;
    void add_term(long px, long py, const ExactRat& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly operator*(const BiPoly& o) const;

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    const std::map<std::pair<long, long>, ExactRat>& terms() const
    {
        return terms_;
    }

    std::string str() const;

private:
    std::map<std::pair<long, long>, ExactRat> terms_;
};

} // namespace genbinom

#endif // GENBINOM_POLY_HPP
