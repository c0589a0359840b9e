#include "miortho/spectral.hpp"

#include "miortho/errors.hpp"

#include <algorithm>

namespace miortho {

std::string buildPathName(BuildPath p) {
    switch (p) {
    case BuildPath::Direct: return "direct";
    case BuildPath::ClosedForm: return "closedForm";
    case BuildPath::Both: return "both";
    }
    return "?";
}

BuildPath parseBuildPath(const std::string& s) {
    if (s == "direct")
        return BuildPath::Direct;
    if (s == "closedForm")
        return BuildPath::ClosedForm;
    if (s == "both")
        return BuildPath::Both;
    throw InvalidSpec("unknown build path '" + s + "'");
}

namespace {

using Matrix = std::vector<std::vector<BigComplex>>;

Matrix closedFormMTilde(const DeformedFamily& fam, int bigN,
                        const std::vector<BigComplex>& zeros,
                        const std::vector<BigComplex>& xiZeros, mpfr_prec_t w) {
    size_t n = zeros.size();
    FloatPoly c2 = FloatPoly::fromExact(fam.structure().c2, w);
    FloatPoly c1s = FloatPoly::fromExact(fam.structure().c1Shifted, w);
    FloatPoly c1sd = FloatPoly::fromExact(fam.structure().c1ShiftedMinusDelta, w);
    BigComplex kConst = BigComplex::fromGaussian(fam.structure().kaExtraConst, w);
    BigComplex energyN = BigComplex::fromGaussian(classicalEnergy(fam.spec().family, bigN), w);
    BigComplex two = BigComplex::fromLong(2, w);
    BigComplex four = BigComplex::fromLong(4, w);

    Matrix mt(n, std::vector<BigComplex>(n, BigComplex(w)));
    for (size_t i = 0; i < n; ++i) {
        BigComplex etaN(w);
        etaN += zeros[i];
        BigComplex c2n = c2.eval(etaN);
        for (size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            BigComplex diff = etaN - zeros[j];
            mt[i][j] = BigComplex::fromLong(8, w) * c2n / (diff * diff);
        }
        // diagonal: 4 c2 (S_zeta2 + S_eta2) - (2 c1s - 4 c1sd) S_zeta
        //           - 2 c1s S_eta - E(N) - 4 k
        BigComplex sZeta(w), sZeta2(w), sEta(w), sEta2(w);
        for (const auto& zeta : xiZeros) {
            BigComplex inv = (etaN - zeta).inverse();
            sZeta += inv;
            sZeta2 += inv * inv;
        }
        for (size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            BigComplex inv = (etaN - zeros[j]).inverse();
            sEta += inv;
            sEta2 += inv * inv;
        }
        BigComplex c1sn = c1s.eval(etaN);
        BigComplex c1sdn = c1sd.eval(etaN);
        mt[i][i] = four * c2n * (sZeta2 + sEta2) - (two * c1sn - four * c1sdn) * sZeta -
                   two * c1sn * sEta - energyN - four * kConst;
    }
    return mt;
}

Matrix directMTilde(const DeformedFamily& fam, int bigN, const std::vector<BigComplex>& zeros,
                    mpfr_prec_t w) {
    size_t n = zeros.size();
    FloatOperator op(fam, w);
    BigComplex energyN = BigComplex::fromGaussian(classicalEnergy(fam.spec().family, bigN), w);

    // unnormalized Lagrange basis polynomials prod_{j != m} (eta - eta_j)
    std::vector<FloatPoly> lag(n);
    for (size_t m = 0; m < n; ++m) {
        FloatPoly poly;
        poly.c = {BigComplex::fromLong(1, w)};
        for (size_t j = 0; j < n; ++j) {
            if (j == m)
                continue;
            FloatPoly lin;
            lin.c = {-zeros[j], BigComplex::fromLong(1, w)};
            BigComplex up0(w);
            up0 += lin.c[0];
            lin.c[0] = up0;
            poly = poly * lin;
        }
        lag[m] = op.numerator(poly);
    }

    std::vector<BigComplex> denom(n, BigComplex(w));
    for (size_t i = 0; i < n; ++i) {
        BigComplex prod = BigComplex::fromLong(1, w);
        for (size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            prod *= zeros[i] - zeros[j];
        }
        denom[i] = prod;
    }

    Matrix mt(n, std::vector<BigComplex>(n, BigComplex(w)));
    for (size_t i = 0; i < n; ++i) {
        BigComplex etaN(w);
        etaN += zeros[i];
        BigComplex xiVal = op.xi.eval(etaN);
        for (size_t m = 0; m < n; ++m) {
            mt[i][m] = lag[m].eval(etaN) / (xiVal * denom[i]);
            if (m == i)
                mt[i][m] -= energyN;
        }
    }
    return mt;
}

BigFloat maxAbsEntry(const Matrix& m) {
    BigFloat r(64);
    for (const auto& row : m)
        for (const auto& e : row)
            r = max(r, e.abs());
    return r;
}

} // namespace

SpectralMatrix buildMatrices(const DeformedFamily& fam, int bigN, const ZeroSet& zeroSet,
                             const std::vector<BigComplex>& xiZeros, long precisionBits,
                             BuildPath path, bool flipBranch) {
    SpectralMatrix sm;
    sm.zeroSet = zeroSet;
    sm.xiZeros = xiZeros;
    sm.path = path;
    sm.precisionBits = precisionBits;
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * precisionBits);
    const auto& zeros = zeroSet.zeros;
    size_t n = zeros.size();

    // separation guard between P zeros and Xi zeros / other P zeros
    BigFloat scale = BigFloat::fromLong(1, 64);
    for (const auto& z : zeros)
        scale = max(scale, z.abs());
    BigFloat sepTol = BigFloat::pow2(-precisionBits / 2, 64) * scale;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j)
            if ((zeros[i] - zeros[j]).abs() < sepTol)
                throw ZeroCollision("P zeros collide");
        for (const auto& zeta : xiZeros)
            if ((zeros[i] - zeta).abs() < sepTol)
                throw ZeroCollision("P zero collides with a Xi zero");
    }

    // eta-dot branch, fixed once per zero
    FloatPoly etaDotSq = FloatPoly::fromExact(fam.structure().etaDotSq, w);
    sm.etaDot.reserve(n);
    for (const auto& z : zeros) {
        BigComplex zz(w);
        zz += z;
        BigComplex ed = etaDotSq.eval(zz).sqrt();
        if (flipBranch)
            ed = -ed;
        sm.etaDot.push_back(ed);
    }

    Matrix direct, closed;
    if (path != BuildPath::ClosedForm)
        direct = directMTilde(fam, bigN, zeros, w);
    if (path != BuildPath::Direct)
        closed = closedFormMTilde(fam, bigN, zeros, xiZeros, w);
    if (path == BuildPath::Both) {
        BigFloat d(64);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                d = max(d, (direct[i][j] - closed[i][j]).abs());
        sm.dualPathDiscrepancy = d;
    }
    sm.mTilde = (path == BuildPath::Direct) ? std::move(direct) : std::move(closed);

    sm.m.assign(n, std::vector<BigComplex>(n, BigComplex(w)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            sm.m[i][j] = -(sm.etaDot[j] / sm.etaDot[i]) * sm.mTilde[i][j];

    sm.maxEntry = maxAbsEntry(sm.m);
    BigFloat sym(64);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            sym = max(sym, (sm.m[i][j] - sm.m[j][i]).abs());
    sm.symmetryDefect = sym;
    return sm;
}

BigFloat conjugationDefect(const SpectralMatrix& sm) {
    const auto& pair = sm.zeroSet.conjPair;
    if (pair.empty())
        throw Error("conjugation structure undefined for complex parameters");
    BigFloat d(64);
    size_t n = sm.mTilde.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const BigComplex& mirrored =
                sm.mTilde[static_cast<size_t>(pair[i])][static_cast<size_t>(pair[j])];
            d = max(d, (sm.mTilde[i][j].conj() - mirrored).abs());
        }
    return d;
}

ChristoffelSet christoffelNumbers(const DeformedFamily& fam, int bigN, const ZeroSet& zeroSet,
                                  long precisionBits) {
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * precisionBits);
    FloatPoly pd = FloatPoly::fromExact(fam.poly(bigN).derivative(), w);
    FloatPoly etaDotSq = FloatPoly::fromExact(fam.structure().etaDotSq, w);
    BigFloat floorVal = BigFloat::pow2(-precisionBits / 2, 64) * pd.coeffScale();
    ChristoffelSet cs;
    cs.lambdas.reserve(zeroSet.zeros.size());
    for (const auto& z : zeroSet.zeros) {
        BigComplex zz(w);
        zz += z;
        BigComplex d = pd.eval(zz);
        if (d.abs() < floorVal)
            throw SimpleZeroViolation("P'_{D,N} vanishes at a zero (multiple zero?)");
        cs.lambdas.push_back((etaDotSq.eval(zz) * d * d).inverse());
    }
    return cs;
}

std::vector<Participant> participantSet(const DeformedFamily& fam, int bigN) {
    std::vector<Participant> parts;
    const auto& spec = fam.spec();
    GaussianRational eN = classicalEnergy(spec.family, bigN);
    for (int m = 0; m < bigN; ++m) {
        if (spec.mode == DeformMode::KreinAdler &&
            std::find(spec.dKA.begin(), spec.dKA.end(), m) != spec.dKA.end())
            continue;
        Participant p;
        p.label = "ord(" + std::to_string(m) + ")";
        p.poly = fam.poly(m);
        p.mEigenvalue = eN - classicalEnergy(spec.family, m);
        parts.push_back(std::move(p));
    }
    for (const auto& extra : enumerateExtras(spec, bigN)) {
        Participant p;
        p.label = extra.label();
        DeformedFamily derived(extra.derived);
        p.poly = derived.poly(bigN);
        p.mEigenvalue = predictedMatrixEigenvalue(spec, extra, bigN);
        parts.push_back(std::move(p));
    }
    return parts;
}

OrthogonalityReport orthogonalitySums(const DeformedFamily& fam, const ZeroSet& zeroSet,
                                      const ChristoffelSet& chris,
                                      const std::vector<Participant>& parts,
                                      long precisionBits) {
    (void)fam;
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * precisionBits);
    size_t nz = zeroSet.zeros.size();
    size_t np = parts.size();
    // participant values at the zeros
    std::vector<std::vector<BigComplex>> vals(np, std::vector<BigComplex>(nz, BigComplex(w)));
    for (size_t a = 0; a < np; ++a) {
        FloatPoly q = FloatPoly::fromExact(parts[a].poly, w);
        for (size_t l = 0; l < nz; ++l) {
            BigComplex zz(w);
            zz += zeroSet.zeros[l];
            vals[a][l] = q.eval(zz);
        }
    }
    OrthogonalityReport rep;
    rep.normalized.assign(np, std::vector<BigFloat>(np, BigFloat(64)));
    for (size_t a = 0; a < np; ++a) {
        for (size_t b = a; b < np; ++b) {
            BigComplex s(w);
            BigFloat absSum(w);
            for (size_t l = 0; l < nz; ++l) {
                BigComplex term = chris.lambdas[l] * vals[a][l] * vals[b][l];
                s += term;
                absSum += term.abs();
            }
            BigFloat norm = absSum.isZero() ? BigFloat(64) : s.abs() / absSum;
            rep.normalized[a][b] = norm;
            rep.normalized[b][a] = norm;
            if (a != b)
                rep.maxOffDiagonal = max(rep.maxOffDiagonal, norm);
        }
    }
    return rep;
}

std::vector<EigenpairResidual> predictedEigenpairsCheck(const SpectralMatrix& sm,
                                                        const DeformedFamily& fam, int bigN,
                                                        const std::vector<Participant>& parts) {
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * sm.precisionBits);
    size_t nz = sm.zeroSet.zeros.size();
    FloatPoly pd = FloatPoly::fromExact(fam.poly(bigN).derivative(), w);
    std::vector<EigenpairResidual> out;
    out.reserve(parts.size());
    for (const auto& part : parts) {
        FloatPoly q = FloatPoly::fromExact(part.poly, w);
        std::vector<BigComplex> v(nz, BigComplex(w));
        BigFloat vInf(64);
        for (size_t l = 0; l < nz; ++l) {
            BigComplex zz(w);
            zz += sm.zeroSet.zeros[l];
            v[l] = q.eval(zz) / (sm.etaDot[l] * pd.eval(zz));
            vInf = max(vInf, v[l].abs());
        }
        BigComplex alpha = BigComplex::fromGaussian(part.mEigenvalue, w);
        BigFloat rInf(64);
        for (size_t i = 0; i < nz; ++i) {
            BigComplex acc(w);
            for (size_t j = 0; j < nz; ++j)
                acc += sm.m[i][j] * v[j];
            acc -= alpha * v[i];
            rInf = max(rInf, acc.abs());
        }
        EigenpairResidual r;
        r.label = part.label;
        r.predicted = part.mEigenvalue;
        r.residual = vInf.isZero() ? rInf : rInf / vInf;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BigComplex> eigenSpectrum(const SpectralMatrix& sm) {
    size_t n = sm.m.size();
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * sm.precisionBits);
    // characteristic polynomial by the Faddeev-LeVerrier recursion
    Matrix b = sm.m;
    std::vector<BigComplex> coeff(n + 1, BigComplex(w));
    coeff[n] = BigComplex::fromLong(1, w);
    BigComplex a(w);
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // B <- M (B + a I)
            Matrix next(n, std::vector<BigComplex>(n, BigComplex(w)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    BigComplex acc(w);
                    for (size_t l = 0; l < n; ++l) {
                        BigComplex blj = b[l][j];
                        if (l == j)
                            blj += a;
                        acc += sm.m[i][l] * blj;
                    }
                    next[i][j] = acc;
                }
            b = std::move(next);
        }
        BigComplex tr(w);
        for (size_t i = 0; i < n; ++i)
            tr += b[i][i];
        a = -(tr / BigComplex::fromLong(static_cast<long>(k), w));
        coeff[n - k] = a;
    }
    FloatPoly charPoly;
    charPoly.c = std::move(coeff);
    try {
        return findRoots(charPoly, sm.precisionBits);
    } catch (const PrecisionExhausted& e) {
        throw ConvergenceFailure(std::string("eigen spectrum: ") + e.what());
    }
}

bool basisDeterminantNonzero(const std::vector<Poly>& polys) {
    size_t n = polys.size();
    for (const auto& p : polys)
        if (p.degree() >= static_cast<int>(n))
            throw InvalidSpec("participant degree exceeds basis size");
    std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = polys[i].coeff(static_cast<int>(j));
    // exact Gaussian elimination over Q(i)
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].isZero())
            ++pivot;
        if (pivot == n)
            return false;
        std::swap(m[pivot], m[col]);
        GaussianRational inv = m[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].isZero())
                continue;
            GaussianRational f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return true;
}

GaussianRational classicalMomentRatio(const Family& family, int k) {
    GaussianRational one(1);
    switch (family.kind) {
    case FamilyKind::Hermite: {
        if (k % 2 == 1)
            return GaussianRational();
        // (k-1)!! / 2^{k/2} via m_k = m_{k-2} (k-1)/2
        GaussianRational m = one;
        for (int j = 2; j <= k; j += 2)
            m = m * GaussianRational(j - 1, 2);
        return m;
    }
    case FamilyKind::Laguerre: {
        GaussianRational m = one;
        for (int i = 1; i <= k; ++i)
            m = m * (family.alpha() + GaussianRational(static_cast<long>(i)));
        return m;
    }
    case FamilyKind::Jacobi: {
        // mu_k/mu_0 = E[(1-2T)^k], T ~ Beta(alpha+1, beta+1)
        GaussianRational a = family.alpha() + one;
        GaussianRational b = family.beta() + one;
        std::vector<GaussianRational> beta(static_cast<size_t>(k) + 1, one);
        for (int j = 1; j <= k; ++j) {
            GaussianRational jj(static_cast<long>(j - 1));
            beta[static_cast<size_t>(j)] =
                beta[static_cast<size_t>(j - 1)] * (a + jj) / (a + b + jj);
        }
        GaussianRational sum;
        GaussianRational binom = one;
        GaussianRational powNeg2 = one;
        for (int j = 0; j <= k; ++j) {
            sum += binom * powNeg2 * beta[static_cast<size_t>(j)];
            binom = binom * GaussianRational(static_cast<long>(k - j)) *
                    GaussianRational(1, j + 1);
            powNeg2 = powNeg2 * GaussianRational(-2);
        }
        return sum;
    }
    }
    throw Error("unreachable");
}

QuadratureReport quadratureMomentCheck(const Family& family, int bigN, const ZeroSet& zeroSet,
                                       const ChristoffelSet& chris, long precisionBits) {
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * precisionBits);
    QuadratureReport rep;
    BigComplex lambdaSum(w);
    for (const auto& l : chris.lambdas)
        lambdaSum += l;
    std::vector<BigComplex> power(zeroSet.zeros.size(), BigComplex::fromLong(1, w));
    BigFloat one = BigFloat::fromLong(1, 64);
    for (int k = 0; k <= 2 * bigN; ++k) {
        BigComplex s(w);
        for (size_t l = 0; l < zeroSet.zeros.size(); ++l)
            s += chris.lambdas[l] * power[l];
        BigComplex quad = s / lambdaSum;
        GaussianRational exact = classicalMomentRatio(family, k);
        rep.momentStrings.push_back(exact.str());
        BigComplex diff = quad - BigComplex::fromGaussian(exact, w);
        BigFloat rel = diff.abs() /
                       max(one, BigComplex::fromGaussian(exact, w).abs());
        if (k <= 2 * bigN - 1)
            rep.maxRelError = max(rep.maxRelError, rel);
        else
            rep.controlRelError = rel;
        for (size_t l = 0; l < zeroSet.zeros.size(); ++l) {
            BigComplex zz(w);
            zz += zeroSet.zeros[l];
            power[l] *= zz;
        }
    }
    return rep;
}

} // namespace miortho
