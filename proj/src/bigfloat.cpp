#include "miortho/bigfloat.hpp"

#include "miortho/errors.hpp"

namespace miortho {

BigFloat BigFloat::fromLong(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::fromRational(const Rational& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::fromString(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw Error("cannot parse big float '" + s + "'");
    return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t joinPrec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat r(joinPrec(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat r(joinPrec(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat r(joinPrec(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
    BigFloat r(joinPrec(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str() const {
    // ~0.302 decimal digits per bit, plus guard digits
    int digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 3;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat BigComplex::abs() const {
    BigFloat r(prec());
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
    return *this * o.inverse();
}

BigComplex BigComplex::inverse() const {
    BigFloat n = re * re + im * im;
    if (n.isZero())
        throw Error("BigComplex: division by zero");
    return {re / n, -im / n};
}

BigComplex BigComplex::sqrt() const {
    mpfr_prec_t p = prec();
    if (isZero())
        return BigComplex(p);
    BigFloat r = abs();
    if (im.isZero()) {
        if (re.sign() >= 0)
            return {re.sqrt(), BigFloat::fromLong(0, p)};
        return {BigFloat::fromLong(0, p), (-re).sqrt()};
    }
    BigFloat two = BigFloat::fromLong(2, p);
    BigFloat t = ((r + re.abs()) / two).sqrt();
    if (re.sign() >= 0)
        return {t, im / (t * two)};
    BigFloat s = im.abs() / (t * two);
    // imaginary part keeps the sign of im (principal branch)
    return im.sign() >= 0 ? BigComplex{s, t} : BigComplex{s, -t};
}

FloatPoly FloatPoly::fromExact(const Poly& p, mpfr_prec_t prec) {
    FloatPoly f;
    f.c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs())
        f.c.push_back(BigComplex::fromGaussian(q, prec));
    return f;
}

BigComplex FloatPoly::eval(const BigComplex& z) const {
    if (c.empty())
        return BigComplex(z.prec());
    BigComplex acc(std::max(z.prec(), c.back().prec()));
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * z + c[i];
    return acc;
}

FloatPoly FloatPoly::derivative() const {
    FloatPoly d;
    if (c.size() <= 1)
        return d;
    d.c.reserve(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k)
        d.c.push_back(c[k] * BigComplex::fromLong(static_cast<long>(k), c[k].prec()));
    return d;
}

FloatPoly FloatPoly::operator+(const FloatPoly& o) const {
    mpfr_prec_t p = 64;
    for (const auto& x : c)
        p = std::max(p, x.prec());
    for (const auto& x : o.c)
        p = std::max(p, x.prec());
    FloatPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), BigComplex(p));
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i)
        r.c[i] += o.c[i];
    return r;
}

FloatPoly FloatPoly::operator-(const FloatPoly& o) const {
    return *this + o.scaled(BigComplex::fromLong(-1, 64));
}

FloatPoly FloatPoly::operator*(const FloatPoly& o) const {
    FloatPoly r;
    if (c.empty() || o.c.empty())
        return r;
    mpfr_prec_t p = std::max(c[0].prec(), o.c[0].prec());
    r.c.assign(c.size() + o.c.size() - 1, BigComplex(p));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] += c[i] * o.c[j];
    return r;
}

FloatPoly FloatPoly::scaled(const BigComplex& s) const {
    FloatPoly r = *this;
    for (auto& x : r.c)
        x *= s;
    return r;
}

BigFloat FloatPoly::coeffScale() const {
    BigFloat m(64);
    for (const auto& x : c)
        m = max(m, x.abs());
    return m;
}

BigComplex polyEvalBig(const Poly& p, const BigComplex& z) {
    BigComplex acc(z.prec());
    for (size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * z + BigComplex::fromGaussian(p.coeffs()[i], z.prec());
    return acc;
}

} // namespace miortho
