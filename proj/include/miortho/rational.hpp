#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace miortho {

using Rational = mpq_class;

// Element of Q(i).  Both parts are arbitrary-precision rationals kept in
// canonical form (lowest terms, positive denominator) by GMP.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) { // NOLINT(google-explicit-constructor)
        re.canonicalize();
    }
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    GaussianRational(long num, long den) : re(Rational(num, den)), im(0) { re.canonicalize(); }

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }
    // true for elements of Z (integral and real)
    bool isInteger() const { return im == 0 && re.get_den() == 1; }

    GaussianRational conj() const { return {re, -im}; }
    Rational normSq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const;
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // "7/2", "-3", "7/2+1/3*i", "2-i", "1i" (both "*i" and "i" suffixes accepted)
    static GaussianRational parse(std::string_view s);
    std::string str() const;
};

inline GaussianRational gaussianI() { return {Rational(0), Rational(1)}; }

// 2^e as an exact rational (e may be negative).
Rational rationalPow2(long e);

std::string rationalStr(const Rational& r);
Rational parseRational(std::string_view s);

} // namespace miortho
