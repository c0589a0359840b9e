#include "miortho/classical.hpp"
#include "miortho/errors.hpp"
#include "miortho/quasirational.hpp"

#include <doctest.h>

#include <cstdint>
#include <vector>

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

QuasiRational plainPoly(std::vector<GaussianRational> c) {
    return QuasiRational(RationalFunction(Poly(std::move(c))));
}

QuasiRational randomQrf(Xorshift& rng) {
    QuasiRational q;
    q.expCoeff = GaussianRational(rng.range(-2, 2));
    q.powEta = GaussianRational(rng.range(-3, 3), 2);
    q.powOneMinus = GaussianRational(rng.range(-3, 3), 2);
    q.powOnePlus = GaussianRational(rng.range(-3, 3), 2);
    std::vector<GaussianRational> c;
    int deg = static_cast<int>(rng.range(0, 3));
    for (int i = 0; i <= deg; ++i)
        c.emplace_back(Rational(rng.range(-5, 5)), Rational(rng.range(-2, 2)));
    c.emplace_back(Rational(1), Rational(0)); // keep it nonzero
    q.rat = RationalFunction(Poly(std::move(c)));
    return q;
}

} // namespace

TEST_CASE("qrf derivative rules") {
    SUBCASE("(e^eta)' = e^eta") {
        QuasiRational f;
        f.expCoeff = GaussianRational(1);
        f.rat = RationalFunction(Poly::one());
        QuasiRational d = f.derivative();
        CHECK(d.samePrefactor(f));
        CHECK(d.rat == f.rat);
    }
    SUBCASE("(eta^b)' = eta^b * b/eta") {
        QuasiRational f;
        f.powEta = GaussianRational(5, 3);
        f.rat = RationalFunction(Poly::one());
        QuasiRational d = f.derivative();
        CHECK(d.samePrefactor(f));
        CHECK(d.rat == RationalFunction(Poly::constant(GaussianRational(5, 3)), Poly::var()));
    }
    SUBCASE("((1-eta)^c * eta)' has rat part 1 - c*eta/(1-eta)") {
        GaussianRational c(3, 2);
        QuasiRational f;
        f.powOneMinus = c;
        f.rat = RationalFunction(Poly::var());
        QuasiRational d = f.derivative();
        Poly oneMinus = Poly::one() - Poly::var();
        RationalFunction expected =
            RationalFunction(Poly::one()) -
            RationalFunction(Poly::var() * c, oneMinus);
        CHECK(d.rat == expected);
    }
    SUBCASE("agrees with the polynomial derivative when all exponents vanish") {
        Xorshift rng(11);
        for (int i = 0; i < 30; ++i) {
            std::vector<GaussianRational> c;
            int deg = static_cast<int>(rng.range(0, 8));
            for (int k = 0; k <= deg; ++k)
                c.emplace_back(Rational(rng.range(-9, 9), rng.range(1, 4)));
            Poly p(c);
            QuasiRational f = plainPoly(c);
            CHECK(f.derivative().rat == RationalFunction(p.derivative()));
        }
    }
}

TEST_CASE("wronskian basics") {
    SUBCASE("single entry") {
        Xorshift rng(3);
        QuasiRational f = randomQrf(rng);
        std::vector<QuasiRational> fs{f};
        QuasiRational w = wronskian(fs);
        CHECK(w.samePrefactor(f));
        CHECK(w.rat == f.rat);
    }
    SUBCASE("W[1, eta] = 1") {
        std::vector<QuasiRational> fs{plainPoly({GaussianRational(1)}),
                                      plainPoly({GaussianRational(0), GaussianRational(1)})};
        QuasiRational w = wronskian(fs);
        CHECK(w.rat == RationalFunction(Poly::one()));
    }
    SUBCASE("W[H1, H2] = 8x^2 + 4") {
        std::vector<QuasiRational> fs{QuasiRational(RationalFunction(hermitePoly(1))),
                                      QuasiRational(RationalFunction(hermitePoly(2)))};
        QuasiRational w = wronskian(fs);
        Poly expected(std::vector<GaussianRational>{GaussianRational(4), GaussianRational(0),
                                                    GaussianRational(8)});
        CHECK(w.rat == RationalFunction(expected));
    }
    SUBCASE("size cap") {
        std::vector<QuasiRational> fs(9, plainPoly({GaussianRational(1)}));
        CHECK_THROWS_AS(wronskian(fs), SizeCapExceeded);
    }
}

TEST_CASE("wronskian is alternating") {
    Xorshift rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<QuasiRational> fs{randomQrf(rng), randomQrf(rng), randomQrf(rng)};
        QuasiRational w1 = wronskian(fs);
        std::swap(fs[0], fs[2]);
        QuasiRational w2 = wronskian(fs);
        CHECK(w1.rat == -w2.rat);
        CHECK(w1.samePrefactor(w2));
    }
}

TEST_CASE("wronskian with a repeated entry vanishes") {
    Xorshift rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        QuasiRational f = randomQrf(rng);
        std::vector<QuasiRational> fs{f, randomQrf(rng), f};
        CHECK(wronskian(fs).rat.isZero());
    }
}

TEST_CASE("polynomial wronskian") {
    CHECK(polynomialWronskian({}) == Poly::one());
    std::vector<Poly> hs{hermitePoly(1), hermitePoly(2)};
    Poly expected(std::vector<GaussianRational>{GaussianRational(4), GaussianRational(0),
                                                GaussianRational(8)});
    CHECK(polynomialWronskian(hs) == expected);

    // W[H1, H2, H0] against a hand-rolled Sarrus expansion of the 3x3
    // derivative matrix (columns H1, H2, H0; rows derivative order)
    std::vector<Poly> h3{hermitePoly(1), hermitePoly(2), hermitePoly(0)};
    Poly m[3][3];
    for (int col = 0; col < 3; ++col) {
        Poly cur = h3[static_cast<size_t>(col)];
        for (int row = 0; row < 3; ++row) {
            m[row][col] = cur;
            cur = cur.derivative();
        }
    }
    Poly sarrus = m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] +
                  m[0][2] * m[1][0] * m[2][1] - m[0][2] * m[1][1] * m[2][0] -
                  m[0][1] * m[1][0] * m[2][2] - m[0][0] * m[1][2] * m[2][1];
    CHECK(sarrus == Poly::constant(GaussianRational(16)));
    CHECK(polynomialWronskian(h3) == sarrus);
}
