#include "miortho/polynomial.hpp"

#include "miortho/errors.hpp"

#include <sstream>

namespace miortho {

void Poly::trim() {
    while (!c_.empty() && c_.back().isZero())
        c_.pop_back();
}

Poly Poly::constant(GaussianRational v) {
    Poly p;
    if (!v.isZero())
        p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(GaussianRational coeff, int deg) {
    Poly p;
    if (coeff.isZero())
        return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, GaussianRational());
    p.c_.back() = std::move(coeff);
    return p;
}

const GaussianRational& Poly::leading() const {
    if (c_.empty())
        throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size())
            r.c_[i] += c_[i];
        if (i < o.c_.size())
            r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (isZero() || o.isZero())
        return {};
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, GaussianRational());
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

Poly Poly::operator*(const GaussianRational& s) const {
    if (s.isZero())
        return {};
    Poly r = *this;
    for (auto& v : r.c_)
        v *= s;
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1)
        return r;
    r.c_.resize(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        r.c_[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    r.trim();
    return r;
}

Poly Poly::reflected() const {
    Poly r = *this;
    for (size_t k = 1; k < r.c_.size(); k += 2)
        r.c_[k] = -r.c_[k];
    return r;
}

GaussianRational Poly::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * z + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (isZero())
        return {};
    return *this * leading().inverse();
}

std::string Poly::str(const std::string& var) const {
    if (isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].isZero())
            continue;
        if (!first)
            os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i == 1)
            os << "*" << var;
        else if (i > 1)
            os << "*" << var << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> polyDivMod(const Poly& p, const Poly& q) {
    if (q.isZero())
        throw Error("polynomial division by zero");
    Poly rem = p;
    if (p.degree() < q.degree())
        return {Poly(), rem};
    std::vector<GaussianRational> quo(static_cast<size_t>(p.degree() - q.degree()) + 1);
    GaussianRational lcInv = q.leading().inverse();
    while (!rem.isZero() && rem.degree() >= q.degree()) {
        int shift = rem.degree() - q.degree();
        GaussianRational f = rem.leading() * lcInv;
        quo[static_cast<size_t>(shift)] = f;
        rem = rem - Poly::monomial(f, shift) * q;
    }
    return {Poly(std::move(quo)), rem};
}

Poly polyExactDivide(const Poly& p, const Poly& q) {
    auto [quo, rem] = polyDivMod(p, q);
    if (!rem.isZero())
        throw NonExactDivision("non-exact polynomial division (remainder degree " +
                               std::to_string(rem.degree()) + ")");
    return quo;
}

Poly polyGcd(Poly a, Poly b) {
    while (!b.isZero()) {
        Poly r = polyDivMod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace miortho
