#include "miortho/errors.hpp"
#include "miortho/rational.hpp"

#include <doctest.h>

#include <cstdint>

using namespace miortho;

namespace {

// tiny deterministic generator for property tests (no external RNG needed)
struct Xorshift {
    uint64_t s;
    explicit Xorshift(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

GaussianRational randomGaussian(Xorshift& rng) {
    return {Rational(rng.range(-20, 20), rng.range(1, 9)),
            Rational(rng.range(-20, 20), rng.range(1, 9))};
}

} // namespace

TEST_CASE("gaussian rational field axioms on sampled values") {
    Xorshift rng(0x9e3779b9);
    for (int i = 0; i < 200; ++i) {
        GaussianRational a = randomGaussian(rng);
        GaussianRational b = randomGaussian(rng);
        GaussianRational c = randomGaussian(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        if (!a.isZero())
            CHECK(a * a.inverse() == GaussianRational(1));
    }
}

TEST_CASE("denominators stay canonical") {
    GaussianRational a(Rational(4, -6), Rational(0));
    a.re.canonicalize();
    CHECK(a.re.get_den() == 3);
    CHECK(a.re.get_num() == -2);
    GaussianRational b = GaussianRational(1, 2) + GaussianRational(1, 2);
    CHECK(b.re.get_den() == 1);
}

TEST_CASE("parse and format round-trip") {
    for (const char* s : {"7/2", "-3", "0", "7/2+1/3*i", "2-1*i", "1*i", "-2/3*i"}) {
        GaussianRational v = GaussianRational::parse(s);
        CHECK(GaussianRational::parse(v.str()) == v);
    }
    CHECK(GaussianRational::parse("7/2+1i") == GaussianRational(Rational(7, 2), Rational(1)));
    CHECK(GaussianRational::parse("i") == gaussianI());
    CHECK(GaussianRational::parse("-i") == -gaussianI());
    CHECK(GaussianRational::parse("2-i") == GaussianRational(Rational(2), Rational(-1)));
    CHECK(GaussianRational::parse(" 3/4 + 1/2 i ") ==
          GaussianRational(Rational(3, 4), Rational(1, 2)));
    CHECK_THROWS_AS(GaussianRational::parse("abc"), Error);
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), Error);

    Xorshift rng(42);
    for (int i = 0; i < 100; ++i) {
        GaussianRational v = randomGaussian(rng);
        CHECK(GaussianRational::parse(v.str()) == v);
    }
}

TEST_CASE("i * i = -1") {
    CHECK(gaussianI() * gaussianI() == GaussianRational(-1));
    CHECK(gaussianI().inverse() == -gaussianI());
}

TEST_CASE("power-of-two helper") {
    CHECK(rationalPow2(0) == 1);
    CHECK(rationalPow2(5) == 32);
    CHECK(rationalPow2(-3) == Rational(1, 8));
}
