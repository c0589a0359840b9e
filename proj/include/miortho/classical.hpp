#pragma once

#include "miortho/quasirational.hpp"

#include <string>
#include <vector>

namespace miortho {

enum class FamilyKind { Hermite, Laguerre, Jacobi };

std::string familyKindName(FamilyKind k);
FamilyKind parseFamilyKind(const std::string& s);

// Classical family with its coupling parameters.  Laguerre carries g,
// Jacobi carries g and h, Hermite carries neither.  The conventional
// polynomial parameters are derived: alpha = g - 1/2, beta = h - 1/2.
struct Family {
    FamilyKind kind = FamilyKind::Hermite;
    GaussianRational g;
    GaussianRational h;

    static Family hermite() { return {FamilyKind::Hermite, {}, {}}; }
    static Family laguerre(GaussianRational g) { return {FamilyKind::Laguerre, std::move(g), {}}; }
    static Family jacobi(GaussianRational g, GaussianRational h) {
        return {FamilyKind::Jacobi, std::move(g), std::move(h)};
    }

    GaussianRational alpha() const { return g - GaussianRational(1, 2); }
    GaussianRational beta() const { return h - GaussianRational(1, 2); }
    bool parametersReal() const { return g.isReal() && h.isReal(); }
};

enum class SeedType { I, II };

// Classical orthogonal polynomial (three-term recurrence, exact):
// Hermite H_n(x), Laguerre L_n^{(g-1/2)}(eta), Jacobi P_n^{(g-1/2,h-1/2)}(eta).
Poly classicalPoly(const Family& family, int n);

// Laguerre / Jacobi polynomials at explicit parameters (recurrence)
Poly laguerrePoly(const GaussianRational& alpha, int n);
Poly jacobiPoly(const GaussianRational& alpha, const GaussianRational& beta, int n);
Poly hermitePoly(int n);

// eigenenergy E(n): 2n (H), 4n (L), 4n(n+g+h) (J)
GaussianRational classicalEnergy(const Family& family, int n);

// virtual state energy for the Laguerre/Jacobi seed solutions
GaussianRational virtualEnergy(const Family& family, SeedType type, int v);

// seed / virtual state function mu_v (prefactor without the /2 inside the
// (1 +- eta) factors; the compensating exact power of two is applied by the
// Wronskian construction in the deform module)
QuasiRational seedFunction(const Family& family, SeedType type, int v);

// c1 at shifted parameters, c1 at shifted - delta, c2, etaDot^2 = 4 c2, and
// the Krein-Adler additive constant of f2
struct StructureData {
    Poly c1Shifted;
    Poly c1ShiftedMinusDelta;
    Poly c2;
    Poly etaDotSq;
    GaussianRational kaExtraConst;
};

StructureData structureFunctions(const Family& family, int mCount, int nCount, bool kaMode);

// Parameter bound checks (Lbound/Jbound).  Violations produce warnings by
// default; strict mode turns them into DegenerateParameters errors.
std::vector<std::string> parameterBoundWarnings(const Family& family,
                                                const std::vector<int>& dI,
                                                const std::vector<int>& dII);

} // namespace miortho
