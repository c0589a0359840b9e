#pragma once

#include "miortho/polynomial.hpp"

namespace miortho {

// num/den over Q(i), reduced after every operation: gcd(num, den) = 1 and
// den monic.  Reduction after every step keeps determinant intermediates
// from blowing up.
class RationalFunction {
public:
    RationalFunction() : den_(Poly::one()) {}
    RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::one()) {} // NOLINT
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isPolynomial() const { return den_.degree() == 0; }
    // numerator of a polynomial-valued rational function (den == 1)
    Poly asPolynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    RationalFunction derivative() const;

private:
    void reduce();
    Poly num_;
    Poly den_;
};

} // namespace miortho
