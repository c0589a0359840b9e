#pragma once

#include "miortho/polynomial.hpp"
#include "miortho/rational.hpp"

#include <cstdio>
#include <mpfr.h>

#include <string>
#include <vector>

namespace miortho {

// Thin RAII wrapper around mpfr_t.  Every value carries its own precision;
// binary operations round to the larger of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat fromLong(long x, mpfr_prec_t prec);
    static BigFloat fromRational(const Rational& q, mpfr_prec_t prec);
    static BigFloat fromString(const std::string& s, mpfr_prec_t prec);
    // 2^e at the given precision (exact)
    static BigFloat pow2(long e, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool isZero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
    bool operator==(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }

    BigFloat abs() const;
    BigFloat sqrt() const; // requires nonnegative argument

    // deterministic decimal form with enough digits for the precision
    std::string str() const;

private:
    mpfr_t v_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex fromGaussian(const GaussianRational& q, mpfr_prec_t prec) {
        return {BigFloat::fromRational(q.re, prec), BigFloat::fromRational(q.im, prec)};
    }
    static BigComplex fromLong(long x, mpfr_prec_t prec) {
        return {BigFloat::fromLong(x, prec), BigFloat::fromLong(0, prec)};
    }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool isZero() const { return re.isZero() && im.isZero(); }

    BigComplex conj() const { return {re, -im}; }
    BigFloat abs() const;

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const;
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    BigComplex inverse() const;
    // principal branch: nonnegative real part, ties to nonnegative imaginary part
    BigComplex sqrt() const;
};

// Dense polynomial with BigComplex coefficients (index = degree, trimmed
// only on explicit request; numeric code keeps exact-length vectors).
struct FloatPoly {
    std::vector<BigComplex> c;

    static FloatPoly fromExact(const Poly& p, mpfr_prec_t prec);
    int degree() const { return static_cast<int>(c.size()) - 1; }
    BigComplex eval(const BigComplex& z) const;
    FloatPoly derivative() const;
    FloatPoly operator+(const FloatPoly& o) const;
    FloatPoly operator-(const FloatPoly& o) const;
    FloatPoly operator*(const FloatPoly& o) const;
    FloatPoly scaled(const BigComplex& s) const;
    // largest coefficient magnitude
    BigFloat coeffScale() const;
};

// exact polynomial evaluated in big-float arithmetic; coefficients are
// converted at the precision of z
BigComplex polyEvalBig(const Poly& p, const BigComplex& z);

} // namespace miortho
