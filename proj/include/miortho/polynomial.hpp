#pragma once

#include "miortho/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace miortho {

// Dense univariate polynomial over Q(i), always trimmed so the leading
// coefficient is nonzero.  The zero polynomial has an empty coefficient
// vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(GaussianRational v);
    static Poly monomial(GaussianRational coeff, int deg);
    static Poly one() { return constant(GaussianRational(1)); }
    // the variable itself (eta, or x for Hermite)
    static Poly var() { return monomial(GaussianRational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size()))
            return GaussianRational();
        return c_[static_cast<size_t>(k)];
    }
    const GaussianRational& leading() const;
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const GaussianRational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative() const;
    // p(-x): flips the sign of odd coefficients
    Poly reflected() const;
    GaussianRational eval(const GaussianRational& z) const;

    // monic multiple of *this (leading coefficient 1); zero stays zero
    Poly monic() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

// quotient/remainder with deg(rem) < deg(q)
std::pair<Poly, Poly> polyDivMod(const Poly& p, const Poly& q);
// exact quotient; throws NonExactDivision when the remainder is nonzero
Poly polyExactDivide(const Poly& p, const Poly& q);
// monic gcd
Poly polyGcd(Poly a, Poly b);

} // namespace miortho
