#pragma once

#include "miortho/bigfloat.hpp"
#include "miortho/classical.hpp"

#include <string>
#include <vector>

namespace miortho {

// All roots of p by Ehrlich-Aberth iteration on the monic-normalized
// polynomial (initial points on a Cauchy-bound circle), Newton-polished at
// doubled precision.  Deterministic given p and precision; roots sorted by
// (re, im).  Residuals are certified against 2^(-precisionBits/2) relative
// to the local coefficient scale.
std::vector<BigComplex> findRoots(const Poly& p, long precisionBits);
std::vector<BigComplex> findRoots(const FloatPoly& p, long precisionBits);

enum class ZeroClass { Ordinary, ExtraReal, ExtraComplexPair };

struct ZeroSet {
    std::vector<BigComplex> zeros;
    // conjugation involution (pair[n] = nbar); empty when parameters are not real
    std::vector<int> conjPair;
    std::vector<ZeroClass> classes;
    int ordinaryCount = 0;
    long precisionBits = 0;
    BigFloat residualBound{64};
    std::vector<std::string> warnings;
};

// Classification of roots: conjugation pairing (greedy nearest-conjugate
// matching), real/complex split, ordinary-zero count in the family's
// orthogonality domain.  Pairwise separation below 2^(-prec/2) aborts with
// DegenerateParameters; an inconsistent pairing raises PairingFailure.
ZeroSet analyzeZeros(const std::vector<BigComplex>& roots, const Family& family,
                     bool parametersReal, long precisionBits);

// find + analyze + residual bound in one step
ZeroSet computeZeroSet(const Poly& p, const Family& family, bool parametersReal,
                       long precisionBits);

} // namespace miortho
