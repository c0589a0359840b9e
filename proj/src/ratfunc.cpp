#include "miortho/ratfunc.hpp"

#include "miortho/errors.hpp"

namespace miortho {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero())
        throw Error("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.isZero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = polyGcd(num_, den_);
    if (g.degree() > 0) {
        num_ = polyExactDivide(num_, g);
        den_ = polyExactDivide(den_, g);
    }
    GaussianRational lcInv = den_.leading().inverse();
    num_ = num_ * lcInv;
    den_ = den_ * lcInv;
}

Poly RationalFunction::asPolynomial() const {
    if (!isPolynomial())
        throw NonExactDivision("rational function is not a polynomial");
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.isZero())
        throw Error("rational function division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

} // namespace miortho
