#include "miortho/quasirational.hpp"

#include "miortho/errors.hpp"

#include <unordered_map>

namespace miortho {

RationalFunction QuasiRational::prefactorLogDerivative() const {
    RationalFunction l{Poly::constant(expCoeff)};
    if (!powEta.isZero())
        l = l + RationalFunction(Poly::constant(powEta), Poly::var());
    if (!powOneMinus.isZero()) {
        // d/deta log (1-eta)^pm = -pm/(1-eta)
        Poly oneMinus = Poly::one() - Poly::var();
        l = l - RationalFunction(Poly::constant(powOneMinus), oneMinus);
    }
    if (!powOnePlus.isZero()) {
        Poly onePlus = Poly::one() + Poly::var();
        l = l + RationalFunction(Poly::constant(powOnePlus), onePlus);
    }
    return l;
}

QuasiRational QuasiRational::derivative() const {
    QuasiRational d = *this;
    d.rat = rat.derivative() + prefactorLogDerivative() * rat;
    return d;
}

QuasiRational QuasiRational::operator*(const QuasiRational& o) const {
    QuasiRational r;
    r.expCoeff = expCoeff + o.expCoeff;
    r.powEta = powEta + o.powEta;
    r.powOneMinus = powOneMinus + o.powOneMinus;
    r.powOnePlus = powOnePlus + o.powOnePlus;
    r.rat = rat * o.rat;
    return r;
}

RationalFunction rationalFunctionDeterminant(const std::vector<std::vector<RationalFunction>>& m) {
    size_t k = m.size();
    if (k == 0)
        return RationalFunction(Poly::one());
    // minor(S) = determinant of rows k-|S|..k-1 restricted to columns in S
    std::unordered_map<unsigned, RationalFunction> memo;
    auto minor = [&](auto&& self, unsigned cols) -> RationalFunction {
        if (cols == 0)
            return RationalFunction(Poly::one());
        auto it = memo.find(cols);
        if (it != memo.end())
            return it->second;
        size_t sz = static_cast<size_t>(__builtin_popcount(cols));
        size_t row = k - sz;
        RationalFunction acc;
        int sign = 1;
        for (size_t j = 0; j < k; ++j) {
            unsigned bit = 1u << j;
            if (!(cols & bit))
                continue;
            if (!m[row][j].isZero()) {
                RationalFunction term = m[row][j] * self(self, cols & ~bit);
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor(minor, (1u << k) - 1u);
}

QuasiRational wronskian(std::span<const QuasiRational> fs, int sizeCap) {
    if (fs.empty())
        throw Error("wronskian of an empty sequence");
    if (static_cast<int>(fs.size()) > sizeCap)
        throw SizeCapExceeded("wronskian size " + std::to_string(fs.size()) +
                              " exceeds cap " + std::to_string(sizeCap));
    size_t k = fs.size();
    if (k == 1)
        return fs[0];

    // column i holds rat parts of the successive derivatives of fs[i]
    std::vector<std::vector<RationalFunction>> mat(k, std::vector<RationalFunction>(k));
    for (size_t i = 0; i < k; ++i) {
        QuasiRational cur = fs[i];
        for (size_t r = 0; r < k; ++r) {
            mat[r][i] = cur.rat;
            if (r + 1 < k)
                cur = cur.derivative();
        }
    }

    QuasiRational result;
    result.rat = RationalFunction(Poly::one());
    for (const auto& f : fs) {
        result.expCoeff += f.expCoeff;
        result.powEta += f.powEta;
        result.powOneMinus += f.powOneMinus;
        result.powOnePlus += f.powOnePlus;
    }
    result.rat = rationalFunctionDeterminant(mat);
    return result;
}

Poly polynomialWronskian(std::span<const Poly> ps) {
    size_t k = ps.size();
    if (k == 0)
        return Poly::one();
    if (k == 1)
        return ps[0];
    std::vector<std::vector<RationalFunction>> mat(k, std::vector<RationalFunction>(k));
    for (size_t i = 0; i < k; ++i) {
        Poly cur = ps[i];
        for (size_t r = 0; r < k; ++r) {
            mat[r][i] = RationalFunction(cur);
            if (r + 1 < k)
                cur = cur.derivative();
        }
    }
    return rationalFunctionDeterminant(mat).asPolynomial();
}

} // namespace miortho
