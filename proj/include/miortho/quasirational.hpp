#pragma once

#include "miortho/ratfunc.hpp"

#include <span>
#include <vector>

namespace miortho {

// Function of the form
//     e^{a*eta} * eta^{pe} * (1-eta)^{pm} * (1+eta)^{pp} * rat(eta)
// with all four exponents in Q(i).  Closed under differentiation: the
// derivative keeps the prefactor and replaces rat by rat' + L*rat where L
// is the logarithmic derivative of the prefactor.
struct QuasiRational {
    GaussianRational expCoeff;    // a in e^{a*eta}
    GaussianRational powEta;      // exponent of eta
    GaussianRational powOneMinus; // exponent of (1-eta)
    GaussianRational powOnePlus;  // exponent of (1+eta)
    RationalFunction rat;

    QuasiRational() = default;
    explicit QuasiRational(RationalFunction r) : rat(std::move(r)) {}

    // logarithmic derivative of the prefactor:
    //   a + pe/eta - pm/(1-eta) + pp/(1+eta)
    RationalFunction prefactorLogDerivative() const;

    QuasiRational derivative() const;
    // prefactor exponents add, rational parts multiply
    QuasiRational operator*(const QuasiRational& o) const;

    bool samePrefactor(const QuasiRational& o) const {
        return expCoeff == o.expCoeff && powEta == o.powEta &&
               powOneMinus == o.powOneMinus && powOnePlus == o.powOnePlus;
    }
    bool isZero() const { return rat.isZero(); }
};

// Wronskian of quasi-rational functions.  Result prefactor is the product
// of the input prefactors; the rational part is the determinant of the
// modified derivative matrix with entry (r, i) = (d/deta + L_i)^r rat_i.
QuasiRational wronskian(std::span<const QuasiRational> fs, int sizeCap = 8);

// Wronskian of plain polynomials (Krein-Adler path).  Empty input gives 1.
Poly polynomialWronskian(std::span<const Poly> ps);

// determinant of a square matrix of rational functions, cofactor expansion
// with memoized minors (sizes stay small)
RationalFunction rationalFunctionDeterminant(const std::vector<std::vector<RationalFunction>>& m);

} // namespace miortho
