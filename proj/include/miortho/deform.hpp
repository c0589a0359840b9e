#pragma once

#include "miortho/bigfloat.hpp"
#include "miortho/mindex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace miortho {

// Deformed family: denominator polynomial Xi_D, the structure functions at
// the shifted parameters, and a cache of the deformed polynomials P_{D,n}.
class DeformedFamily {
public:
    explicit DeformedFamily(MultiIndexSpec spec);

    const MultiIndexSpec& spec() const { return spec_; }
    const Poly& xi() const { return xi_; }
    const StructureData& structure() const { return structure_; }
    int ellD() const { return ellD_; }

    int expectedXiDegree() const;
    int expectedPolyDegree(int n) const;

    // P_{D,n}; throws NonPolynomialResult / DegenerateParameters
    const Poly& poly(int n) const;

private:
    MultiIndexSpec spec_;
    Poly xi_;
    StructureData structure_;
    int ellD_ = 0;
    mutable std::map<int, Poly> cache_;
};

// denominator polynomial Xi_D (Wronskian of the seed functions, with the
// explicit prefactor; Krein-Adler: Wronskian of eigenpolynomials)
Poly denominatorPoly(const MultiIndexSpec& spec);
// multi-indexed / Krein-Adler polynomial P_{D,n}
Poly deformedPoly(const MultiIndexSpec& spec, int n);

// Xi_D * (H~_D p): exact polynomial, no division involved
Poly applyOperatorNumerator(const DeformedFamily& fam, const Poly& p);
// H~_D p as a reduced rational function over Xi_D
RationalFunction applyOperator(const DeformedFamily& fam, const Poly& p);

// float-coefficient operator for the direct matrix build
struct FloatOperator {
    FloatPoly xi, xiD, xiDD;
    FloatPoly c1s, c1sd, c2;
    BigComplex kaConst;
    mpfr_prec_t prec;

    explicit FloatOperator(const DeformedFamily& fam, mpfr_prec_t prec);
    // Xi * (H~_D p) in float arithmetic
    FloatPoly numerator(const FloatPoly& p) const;
};

struct IdentityCheck {
    std::string caseId;
    bool pass = false;
    bool degenerate = false; // construction hit degenerate parameters; skipped
    std::string note;
    GaussianRational solved;
    GaussianRational predicted;
    int residualDegree = -1; // -1: identically zero
};

// Eq-(fuchs)-style check: Xi_D (H~_D P_{D,n} - E(n) P_{D,n}) == 0 exactly
IdentityCheck checkEigenIdentity(const DeformedFamily& fam, int n);

// basic equation (forward) / exchanged basic equation, with the scalar
// coefficient solved from leading coefficients and compared to the
// Theorem 5/6 prediction
IdentityCheck checkBasicIdentity(const DeformedFamily& fam, const ExtraIndex& extra, int bigN,
                                 BasicDirection direction);

// low-level residual: L = Xi_op (H~_op p - eigen p), solved s with L = s*rhs
// (s = 0 for L == 0); returns {L - s*rhs, s}
std::pair<Poly, GaussianRational> basicResidualSolved(const DeformedFamily& opFam, const Poly& p,
                                                      const GaussianRational& eigen,
                                                      const Poly& rhs);

// exact disjointness of the zero sets of P_{D,N} and Xi_D
bool zeroSetsDisjoint(const DeformedFamily& fam, int bigN);

// identity-in-parameters sweep ------------------------------------------------

struct FreeCase {
    FamilyKind kind = FamilyKind::Laguerre;
    DeformMode mode = DeformMode::MultiIndexed;
    std::vector<int> dI, dII, dKA;
    int bigN = 1;
    bool runEigen = true; // n = 0..bigN
    bool runBasic = true; // all extras, both directions
};

struct ParamSweepSample {
    std::string params;
    bool pass = false;
    bool degenerate = false;
    std::string note;
};

struct ParamSweepReport {
    std::vector<ParamSweepSample> samples;
    bool allPass = false;
};

// deterministic parameter sample lists (half-integers, other rationals, one
// Gaussian rational)
const std::vector<GaussianRational>& parameterSamplesG();
const std::vector<GaussianRational>& parameterSamplesH();

ParamSweepReport identityInParameters(const FreeCase& freeCase, int samples);

} // namespace miortho
