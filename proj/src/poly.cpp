#include <genbinom/poly.hpp>

namespace genbinom {

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly Poly::operator*(const Poly& o) const
{
    if (is_zero() || o.is_zero())
        return Poly();
    std::vector<ExactRat> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly& Poly::operator*=(const ExactRat& s)
{
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

Poly Poly::pow(long e) const
{
    Poly result(1);
    Poly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base;
        if (e > 1)
            base = base * base;
    }
    return result;
}

Poly Poly::truncated(long d) const
{
    if (d < 0)
        return Poly();
    if (degree() <= d)
        return *this;
    std::vector<ExactRat> out(coeffs_.begin(), coeffs_.begin() + d + 1);
    return Poly(std::move(out));
}

Poly Poly::negated_argument() const
{
    Poly r = *this;
    for (size_t i = 1; i < r.coeffs_.size(); i += 2)
        r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

Poly Poly::shifted(long s) const
{
    if (is_zero() || s == 0)
        return *this;
    std::vector<ExactRat> out(coeffs_.size() + s);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i + s] = coeffs_[i];
    return Poly(std::move(out));
}

std::string Poly::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string s;
    for (long d = 0; d <= degree(); ++d) {
        if (coeffs_[d] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += coeffs_[d].get_str();
        if (d >= 1)
            s += "*" + var + "^" + std::to_string(d);
    }
    return s;
}

BiPoly BiPoly::constant(const ExactRat& c)
{
    BiPoly r;
    r.add_term(0, 0, c);
    return r;
}

BiPoly BiPoly::monomial(long px, long py, const ExactRat& c)
{
    BiPoly r;
    r.add_term(px, py, c);
    return r;
}

ExactRat BiPoly::coeff(long px, long py) const
{
    auto it = terms_.find({px, py});
    return it == terms_.end() ? ExactRat(0) : it->second;
}

void BiPoly::add_term(long px, long py, const ExactRat& c)
{
    if (c == 0)
        return;
    auto key = std::make_pair(px, py);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [key, c] : o.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [key, c] : o.terms_)
        add_term(key.first, key.second, -c);
    return *this;
}

BiPoly BiPoly::operator*(const BiPoly& o) const
{
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

std::string BiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.get_str();
        if (key.first > 0)
            s += "*x^" + std::to_string(key.first);
        if (key.second > 0)
            s += "*y^" + std::to_string(key.second);
    }
    return s;
}

} // namespace genbinom
