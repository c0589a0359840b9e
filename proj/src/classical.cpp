#include "miortho/classical.hpp"

#include "miortho/errors.hpp"

namespace miortho {

std::string familyKindName(FamilyKind k) {
    switch (k) {
    case FamilyKind::Hermite: return "H";
    case FamilyKind::Laguerre: return "L";
    case FamilyKind::Jacobi: return "J";
    }
    return "?";
}

FamilyKind parseFamilyKind(const std::string& s) {
    if (s == "H" || s == "hermite" || s == "Hermite")
        return FamilyKind::Hermite;
    if (s == "L" || s == "laguerre" || s == "Laguerre")
        return FamilyKind::Laguerre;
    if (s == "J" || s == "jacobi" || s == "Jacobi")
        return FamilyKind::Jacobi;
    throw InvalidSpec("unknown family '" + s + "'");
}

Poly hermitePoly(int n) {
    if (n < 0)
        throw Error("hermitePoly: negative degree");
    Poly prev = Poly::one();
    if (n == 0)
        return prev;
    Poly cur = Poly::monomial(GaussianRational(2), 1);
    Poly twoX = cur;
    for (int k = 1; k < n; ++k) {
        Poly next = twoX * cur - prev * GaussianRational(2L * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly laguerrePoly(const GaussianRational& alpha, int n) {
    if (n < 0)
        throw Error("laguerrePoly: negative degree");
    Poly prev = Poly::one();
    if (n == 0)
        return prev;
    // L_1 = 1 + alpha - eta
    Poly cur(std::vector<GaussianRational>{alpha + GaussianRational(1), GaussianRational(-1)});
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+alpha-eta) L_k - (k+alpha) L_{k-1}
        Poly a(std::vector<GaussianRational>{alpha + GaussianRational(2L * k + 1),
                                             GaussianRational(-1)});
        Poly next = (a * cur - prev * (alpha + GaussianRational(static_cast<long>(k)))) *
                    GaussianRational(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly jacobiPoly(const GaussianRational& alpha, const GaussianRational& beta, int n) {
    if (n < 0)
        throw Error("jacobiPoly: negative degree");
    Poly prev = Poly::one();
    if (n == 0)
        return prev;
    GaussianRational ab = alpha + beta;
    // P_1 = (alpha - beta)/2 + (alpha + beta + 2)/2 * eta
    Poly cur(std::vector<GaussianRational>{(alpha - beta) * GaussianRational(1, 2),
                                           (ab + GaussianRational(2)) * GaussianRational(1, 2)});
    for (int k = 1; k < n; ++k) {
        // 2(k+1)(k+ab+1)(2k+ab) P_{k+1}
        //   = (2k+ab+1) [ (2k+ab+2)(2k+ab) eta + alpha^2 - beta^2 ] P_k
        //     - 2 (k+alpha)(k+beta)(2k+ab+2) P_{k-1}
        GaussianRational twoKab = ab + GaussianRational(2L * k);
        GaussianRational lead = GaussianRational(2L * (k + 1)) *
                                (ab + GaussianRational(static_cast<long>(k + 1))) * twoKab;
        if (lead.isZero())
            throw DegenerateParameters(
                "Jacobi recurrence pivot vanishes at n=" + std::to_string(k + 1) +
                " (alpha+beta = " + ab.str() + ")");
        Poly mid(std::vector<GaussianRational>{alpha * alpha - beta * beta,
                                               (twoKab + GaussianRational(2)) * twoKab});
        Poly next = (mid * cur * (twoKab + GaussianRational(1)) -
                     prev * (GaussianRational(2) * (alpha + GaussianRational(static_cast<long>(k))) *
                             (beta + GaussianRational(static_cast<long>(k))) *
                             (twoKab + GaussianRational(2)))) *
                    lead.inverse();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly classicalPoly(const Family& family, int n) {
    switch (family.kind) {
    case FamilyKind::Hermite: return hermitePoly(n);
    case FamilyKind::Laguerre: return laguerrePoly(family.alpha(), n);
    case FamilyKind::Jacobi: return jacobiPoly(family.alpha(), family.beta(), n);
    }
    throw Error("unreachable");
}

GaussianRational classicalEnergy(const Family& family, int n) {
    GaussianRational nn(static_cast<long>(n));
    switch (family.kind) {
    case FamilyKind::Hermite: return GaussianRational(2) * nn;
    case FamilyKind::Laguerre: return GaussianRational(4) * nn;
    case FamilyKind::Jacobi:
        return GaussianRational(4) * nn * (nn + family.g + family.h);
    }
    throw Error("unreachable");
}

GaussianRational virtualEnergy(const Family& family, SeedType type, int v) {
    GaussianRational vv(static_cast<long>(v));
    GaussianRational half(1, 2);
    switch (family.kind) {
    case FamilyKind::Laguerre:
        if (type == SeedType::I)
            return GaussianRational(-4) * (family.g + vv + half);
        return GaussianRational(-4) * (family.g - vv - half);
    case FamilyKind::Jacobi:
        if (type == SeedType::I)
            return GaussianRational(-4) * (family.g + vv + half) * (family.h - vv - half);
        return GaussianRational(-4) * (family.g - vv - half) * (family.h + vv + half);
    case FamilyKind::Hermite:
        throw UnsupportedFamily("Hermite has no virtual state energies");
    }
    throw Error("unreachable");
}

QuasiRational seedFunction(const Family& family, SeedType type, int v) {
    if (v < 0)
        throw Error("seedFunction: negative degree");
    GaussianRational half(1, 2);
    QuasiRational q;
    switch (family.kind) {
    case FamilyKind::Laguerre:
        if (type == SeedType::I) {
            q.expCoeff = GaussianRational(1);
            q.rat = RationalFunction(laguerrePoly(family.alpha(), v).reflected());
        } else {
            q.powEta = half - family.g;
            q.rat = RationalFunction(laguerrePoly(half - family.g, v));
        }
        return q;
    case FamilyKind::Jacobi:
        if (type == SeedType::I) {
            q.powOnePlus = half - family.h;
            q.rat = RationalFunction(jacobiPoly(family.alpha(), half - family.h, v));
        } else {
            q.powOneMinus = half - family.g;
            q.rat = RationalFunction(jacobiPoly(half - family.g, family.beta(), v));
        }
        return q;
    case FamilyKind::Hermite:
        throw UnsupportedFamily("Hermite has no virtual state functions; use Krein-Adler mode");
    }
    throw Error("unreachable");
}

namespace {

Poly laguerreC1(const GaussianRational& g) {
    // g + 1/2 - eta
    return Poly(std::vector<GaussianRational>{g + GaussianRational(1, 2), GaussianRational(-1)});
}

Poly jacobiC1(const GaussianRational& g, const GaussianRational& h) {
    // h - g - (g + h + 1) eta
    return Poly(std::vector<GaussianRational>{h - g, -(g + h + GaussianRational(1))});
}

} // namespace

StructureData structureFunctions(const Family& family, int mCount, int nCount, bool kaMode) {
    if (kaMode && nCount != 0)
        throw InvalidSpec("Krein-Adler structure functions require N = 0");
    StructureData s;
    GaussianRational mShift(static_cast<long>(mCount - nCount));
    GaussianRational one(1);
    GaussianRational mm(static_cast<long>(mCount));
    switch (family.kind) {
    case FamilyKind::Hermite:
        if (!kaMode)
            throw UnsupportedFamily("Hermite participates only in Krein-Adler mode");
        s.c1Shifted = Poly(std::vector<GaussianRational>{GaussianRational(), GaussianRational(-1, 2)});
        s.c1ShiftedMinusDelta = s.c1Shifted;
        s.c2 = Poly::constant(GaussianRational(1, 4));
        s.kaExtraConst = -mm * GaussianRational(1, 2);
        break;
    case FamilyKind::Laguerre: {
        GaussianRational gs = family.g + mShift;
        s.c1Shifted = laguerreC1(gs);
        s.c1ShiftedMinusDelta = laguerreC1(gs - one);
        s.c2 = Poly::var();
        if (kaMode)
            s.kaExtraConst = -mm;
        break;
    }
    case FamilyKind::Jacobi: {
        GaussianRational gs = family.g + mShift;
        GaussianRational hs = family.h - mShift;
        s.c1Shifted = jacobiC1(gs, hs);
        s.c1ShiftedMinusDelta = jacobiC1(gs - one, hs - one);
        s.c2 = Poly::one() - Poly::var() * Poly::var();
        if (kaMode)
            s.kaExtraConst = -mm * (family.g + family.h + mm);
        break;
    }
    }
    s.etaDotSq = s.c2 * GaussianRational(4);
    return s;
}

std::vector<std::string> parameterBoundWarnings(const Family& family,
                                                const std::vector<int>& dI,
                                                const std::vector<int>& dII) {
    std::vector<std::string> warnings;
    if (!family.parametersReal()) {
        warnings.push_back("parameter bounds not applicable to complex parameters");
        return warnings;
    }
    auto exceeds = [](const GaussianRational& p, const Rational& bound) {
        return p.re > bound;
    };
    long n = static_cast<long>(dII.size());
    long m = static_cast<long>(dI.size());
    if (family.kind == FamilyKind::Laguerre) {
        Rational need(2 * n + 3, 2); // N + 3/2
        for (int d : dII)
            need = std::max(need, Rational(2L * d + 1, 2));
        if (!exceeds(family.g, need))
            warnings.push_back("Laguerre bound violated: g <= " + need.get_str());
    } else if (family.kind == FamilyKind::Jacobi) {
        Rational needG(n + 2);
        for (int d : dII)
            needG = std::max(needG, Rational(2L * d + 1, 2));
        if (!exceeds(family.g, needG))
            warnings.push_back("Jacobi bound violated: g <= " + needG.get_str());
        Rational needH(m + 2);
        for (int d : dI)
            needH = std::max(needH, Rational(2L * d + 1, 2));
        if (!exceeds(family.h, needH))
            warnings.push_back("Jacobi bound violated: h <= " + needH.get_str());
    }
    return warnings;
}

} // namespace miortho
