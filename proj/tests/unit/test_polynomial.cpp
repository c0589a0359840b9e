#include "miortho/bigfloat.hpp"
#include "miortho/classical.hpp"
#include "miortho/errors.hpp"
#include "miortho/polynomial.hpp"

#include <doctest.h>

#include <cstdint>

using namespace miortho;

namespace {

struct Xorshift {
    uint64_t s;
    explicit Xorshift(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

Poly randomPoly(Xorshift& rng, int maxDeg) {
    int deg = static_cast<int>(rng.range(0, maxDeg));
    std::vector<GaussianRational> c;
    for (int i = 0; i <= deg; ++i)
        c.emplace_back(Rational(rng.range(-9, 9), rng.range(1, 5)),
                       Rational(rng.range(-9, 9), rng.range(1, 5)));
    return Poly(std::move(c));
}

Poly etaSq1() { // eta^2 + 1
    return Poly(std::vector<GaussianRational>{GaussianRational(1), GaussianRational(0),
                                              GaussianRational(1)});
}

} // namespace

TEST_CASE("derivative basics") {
    CHECK(etaSq1().derivative() == Poly::monomial(GaussianRational(2), 1));
    CHECK(Poly::constant(GaussianRational(5)).derivative().isZero());
    SUBCASE("degree drops by exactly one") {
        Xorshift rng(7);
        for (int i = 0; i < 50; ++i) {
            Poly p = randomPoly(rng, 10);
            if (p.degree() >= 1)
                CHECK(p.derivative().degree() == p.degree() - 1);
        }
    }
}

TEST_CASE("Hermite derivative identity H'_n = 2n H_{n-1}") {
    // brute-force oracle over a range of n
    for (int n = 1; n <= 8; ++n)
        CHECK(hermitePoly(n).derivative() ==
              hermitePoly(n - 1) * GaussianRational(2L * n));
    CHECK(hermitePoly(2).derivative() == hermitePoly(1) * GaussianRational(4));
}

TEST_CASE("derivative linearity and Leibniz rule") {
    Xorshift rng(99);
    for (int i = 0; i < 40; ++i) {
        Poly p = randomPoly(rng, 10);
        Poly q = randomPoly(rng, 10);
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("exact division") {
    Poly etaMinus1(std::vector<GaussianRational>{GaussianRational(-1), GaussianRational(1)});
    Poly etaPlus1(std::vector<GaussianRational>{GaussianRational(1), GaussianRational(1)});
    Poly etaSqMinus1 = etaMinus1 * etaPlus1;
    CHECK(polyExactDivide(etaSqMinus1, etaMinus1) == etaPlus1);
    Xorshift rng1(1);
    Poly p = randomPoly(rng1, 6);
    CHECK(polyExactDivide(p, Poly::one()) == p);
    Poly a(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1),
                                         GaussianRational(0), GaussianRational(1)}); // eta^3+eta
    CHECK_THROWS_AS(polyExactDivide(a, etaSq1() + Poly::one()), NonExactDivision);

    SUBCASE("divide(mul(p,q), q) == p") {
        Xorshift rng(5);
        for (int i = 0; i < 40; ++i) {
            Poly p2 = randomPoly(rng, 8);
            Poly q2 = randomPoly(rng, 8);
            if (q2.isZero())
                continue;
            CHECK(polyExactDivide(p2 * q2, q2) == p2);
        }
    }
}

TEST_CASE("evaluation") {
    CHECK(etaSq1().eval(gaussianI()).isZero());
    CHECK(Poly::var().eval(GaussianRational(3, 7)) == GaussianRational(3, 7));

    SUBCASE("H_2 vanishes at 1/sqrt(2) to 256-bit accuracy") {
        mpfr_prec_t prec = 256;
        BigFloat half = BigFloat::fromRational(Rational(1, 2), prec);
        BigComplex x(half.sqrt(), BigFloat::fromLong(0, prec));
        BigComplex v = polyEvalBig(hermitePoly(2), x);
        CHECK(v.abs() < BigFloat::pow2(-240, 64));
    }
}

TEST_CASE("gcd and monic") {
    Poly etaMinus1(std::vector<GaussianRational>{GaussianRational(-1), GaussianRational(1)});
    Poly a = etaMinus1 * etaSq1();
    Poly b = etaMinus1 * etaMinus1;
    CHECK(polyGcd(a, b) == etaMinus1);
    CHECK(polyGcd(etaSq1(), etaMinus1).degree() == 0);
}

TEST_CASE("zero polynomial conventions") {
    Poly z;
    CHECK(z.isZero());
    CHECK(z.degree() == -1);
    CHECK((z + z).isZero());
    CHECK((z * etaSq1()).isZero());
    CHECK_THROWS_AS(polyDivMod(etaSq1(), z), Error);
}
