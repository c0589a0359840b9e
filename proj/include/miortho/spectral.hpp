#pragma once

#include "miortho/deform.hpp"
#include "miortho/numroots.hpp"

#include <string>
#include <vector>

namespace miortho {

enum class BuildPath { Direct, ClosedForm, Both };

std::string buildPathName(BuildPath p);
BuildPath parseBuildPath(const std::string& s);

struct SpectralMatrix {
    std::vector<std::vector<BigComplex>> mTilde;
    std::vector<std::vector<BigComplex>> m;
    ZeroSet zeroSet;
    std::vector<BigComplex> xiZeros;
    std::vector<BigComplex> etaDot; // fixed sqrt branch of 4 c2(eta_n), per zero
    BuildPath path = BuildPath::Both;
    BigFloat dualPathDiscrepancy{64}; // max elementwise |direct - closedForm| (path Both)
    BigFloat maxEntry{64};
    BigFloat symmetryDefect{64}; // max |M_nm - M_mn|
    long precisionBits = 0;
};

// Build M~ and M at the zeros.  path Direct applies the operator to the
// Lagrange basis; ClosedForm uses the closed-form entries; Both builds the
// two and records the discrepancy (the stored matrix is the closed form).
// flipBranch negates every eta-dot, which must leave all assertions intact.
SpectralMatrix buildMatrices(const DeformedFamily& fam, int bigN, const ZeroSet& zeroSet,
                             const std::vector<BigComplex>& xiZeros, long precisionBits,
                             BuildPath path, bool flipBranch = false);

// max |conj(M~_nm) - M~_{nbar,mbar}| (real parameters only)
BigFloat conjugationDefect(const SpectralMatrix& sm);

struct ChristoffelSet {
    std::vector<BigComplex> lambdas; // unnormalized: 1 / (etaDot^2 P'^2)
};

ChristoffelSet christoffelNumbers(const DeformedFamily& fam, int bigN, const ZeroSet& zeroSet,
                                  long precisionBits);

struct Participant {
    std::string label;
    Poly poly;
    GaussianRational mEigenvalue; // predicted eigenvalue of M
};

// ordinary lower-degree polynomials plus all extras (the N~ participants of
// the discrete orthogonality relations)
std::vector<Participant> participantSet(const DeformedFamily& fam, int bigN);

struct OrthogonalityReport {
    std::vector<std::vector<BigFloat>> normalized; // |S_ab| / sum |terms|
    BigFloat maxOffDiagonal{64};
};

OrthogonalityReport orthogonalitySums(const DeformedFamily& fam, const ZeroSet& zeroSet,
                                      const ChristoffelSet& chris,
                                      const std::vector<Participant>& parts, long precisionBits);

struct EigenpairResidual {
    std::string label;
    GaussianRational predicted;
    BigFloat residual{64}; // ||Mv - alpha v||_inf / ||v||_inf
};

std::vector<EigenpairResidual> predictedEigenpairsCheck(const SpectralMatrix& sm,
                                                        const DeformedFamily& fam, int bigN,
                                                        const std::vector<Participant>& parts);

// full eigenvalue multiset of M (characteristic polynomial + root finding),
// sorted by (re, im)
std::vector<BigComplex> eigenSpectrum(const SpectralMatrix& sm);

// exact linear-independence verdict for the participant coefficient matrix
bool basisDeterminantNonzero(const std::vector<Poly>& polys);

struct QuadratureReport {
    BigFloat maxRelError{64};     // k = 0 .. 2N-1
    BigFloat controlRelError{64}; // k = 2N (must NOT be small)
    std::vector<std::string> momentStrings;
};

// Gauss-quadrature moment ratios for the classical families (D empty)
QuadratureReport quadratureMomentCheck(const Family& family, int bigN, const ZeroSet& zeroSet,
                                       const ChristoffelSet& chris, long precisionBits);

// exact normalized moment mu_k / mu_0 of the classical weight
GaussianRational classicalMomentRatio(const Family& family, int k);

} // namespace miortho
