#include "miortho/numroots.hpp"

#include "miortho/errors.hpp"

#include <algorithm>

namespace miortho {

namespace {

struct AberthState {
    std::vector<BigComplex> z;
    bool converged = false;
};

void aberthIterate(const FloatPoly& f, const FloatPoly& fd, AberthState& st, mpfr_prec_t w,
                   int maxIter) {
    size_t n = st.z.size();
    BigFloat stop = BigFloat::pow2(-static_cast<long>(w) + 16, w);
    BigComplex one = BigComplex::fromLong(1, w);
    for (int iter = 0; iter < maxIter; ++iter) {
        BigFloat maxCorr(w);
        for (size_t k = 0; k < n; ++k) {
            BigComplex pv = f.eval(st.z[k]);
            if (pv.isZero())
                continue;
            BigComplex pdv = fd.eval(st.z[k]);
            if (pdv.isZero()) {
                // stationary point hit; nudge deterministically
                st.z[k] += BigComplex(BigFloat::pow2(-8, w), BigFloat::pow2(-9, w));
                maxCorr = max(maxCorr, BigFloat::fromLong(1, w));
                continue;
            }
            BigComplex newton = pv / pdv;
            BigComplex sum(w);
            for (size_t j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                sum += (st.z[k] - st.z[j]).inverse();
            }
            BigComplex denom = one - newton * sum;
            BigComplex corr = denom.isZero() ? newton : newton / denom;
            st.z[k] -= corr;
            BigFloat rel = corr.abs() / (BigFloat::fromLong(1, w) + st.z[k].abs());
            maxCorr = max(maxCorr, rel);
        }
        if (maxCorr < stop) {
            st.converged = true;
            return;
        }
    }
}

std::vector<BigComplex> initialGuesses(const FloatPoly& monic, mpfr_prec_t w) {
    int n = monic.degree();
    // Cauchy bound: 1 + max |a_i| for the monic polynomial
    BigFloat radius = BigFloat::fromLong(1, w);
    BigFloat m(w);
    for (int i = 0; i < n; ++i)
        m = max(m, monic.c[static_cast<size_t>(i)].abs());
    radius += m;
    BigFloat pi(w);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    std::vector<BigComplex> z;
    z.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        // fixed angular offset keeps the start set asymmetric about the real axis
        BigFloat theta = (BigFloat::fromLong(2 * k, w) * pi) / BigFloat::fromLong(n, w) +
                         BigFloat::fromRational(Rational(2, 5), w);
        BigFloat c(w), s(w);
        mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
        z.emplace_back(radius * c, radius * s);
    }
    return z;
}

void sortRoots(std::vector<BigComplex>& roots) {
    std::sort(roots.begin(), roots.end(), [](const BigComplex& a, const BigComplex& b) {
        int c = mpfr_cmp(a.re.raw(), b.re.raw());
        if (c != 0)
            return c < 0;
        return mpfr_cmp(a.im.raw(), b.im.raw()) < 0;
    });
}

std::vector<BigComplex> rootsCore(const FloatPoly& poly, long precisionBits,
                                  const Poly* exact) {
    int deg = poly.degree();
    while (deg >= 0 && poly.c[static_cast<size_t>(deg)].isZero())
        --deg;
    if (deg < 0)
        throw DegenerateInput("root finding on the zero polynomial");
    if (deg == 0)
        return {};
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * precisionBits);
    AberthState st;
    for (int attempt = 0; attempt < 2 && !st.converged; ++attempt) {
        FloatPoly f;
        if (exact) {
            f = FloatPoly::fromExact(*exact, w);
        } else {
            f.c.assign(poly.c.begin(), poly.c.begin() + deg + 1);
            for (auto& c : f.c) {
                BigComplex tmp(w);
                tmp += c;
                c = tmp;
            }
        }
        // monic normalization
        BigComplex lcInv = f.c.back().inverse();
        f = f.scaled(lcInv);
        f.c.back() = BigComplex::fromLong(1, w);
        FloatPoly fd = f.derivative();
        if (st.z.empty()) {
            st.z = initialGuesses(f, w);
        } else {
            for (auto& z : st.z) {
                BigComplex up(w);
                up += z;
                z = up;
            }
        }
        aberthIterate(f, fd, st, w, 500);
        if (!st.converged)
            w *= 2; // one fallback doubling (4x the requested precision)
    }
    if (!st.converged)
        throw PrecisionExhausted("Aberth iteration stalled at degree " + std::to_string(deg));

    // Newton polish at doubled precision
    mpfr_prec_t wp = w * 2;
    FloatPoly fp;
    if (exact) {
        fp = FloatPoly::fromExact(*exact, wp);
    } else {
        fp.c.assign(poly.c.begin(), poly.c.begin() + deg + 1);
        for (auto& c : fp.c) {
            BigComplex tmp(wp);
            tmp += c;
            c = tmp;
        }
    }
    FloatPoly fpd = fp.derivative();
    for (auto& z : st.z) {
        BigComplex zz(wp);
        zz += z;
        for (int i = 0; i < 4; ++i) {
            BigComplex pv = fp.eval(zz);
            if (pv.isZero())
                break;
            BigComplex pdv = fpd.eval(zz);
            if (pdv.isZero())
                break;
            zz -= pv / pdv;
        }
        // store at 2x the requested precision
        BigComplex out(static_cast<mpfr_prec_t>(2 * precisionBits));
        out += zz;
        z = out;
    }

    // residual certification against the local coefficient scale
    BigFloat bound = BigFloat::pow2(-precisionBits / 2, 64);
    for (const auto& z : st.z) {
        BigComplex zz(wp);
        zz += z;
        BigFloat res = fp.eval(zz).abs();
        BigFloat scale(wp);
        BigFloat zp = BigFloat::fromLong(1, wp);
        BigFloat za = zz.abs();
        for (const auto& c : fp.c) {
            scale += c.abs() * zp;
            zp *= za;
        }
        if (res > bound * scale)
            throw PrecisionExhausted("root residual exceeds certified bound");
    }
    sortRoots(st.z);
    return st.z;
}

} // namespace

std::vector<BigComplex> findRoots(const Poly& p, long precisionBits) {
    if (p.isZero())
        throw DegenerateInput("root finding on the zero polynomial");
    if (p.degree() < 1)
        return {};
    FloatPoly dummy = FloatPoly::fromExact(p, 64);
    return rootsCore(dummy, precisionBits, &p);
}

std::vector<BigComplex> findRoots(const FloatPoly& p, long precisionBits) {
    return rootsCore(p, precisionBits, nullptr);
}

ZeroSet analyzeZeros(const std::vector<BigComplex>& roots, const Family& family,
                     bool parametersReal, long precisionBits) {
    ZeroSet zs;
    zs.zeros = roots;
    zs.precisionBits = precisionBits;
    size_t n = roots.size();
    long p = precisionBits;
    BigFloat scale = BigFloat::fromLong(1, 64);
    for (const auto& z : roots)
        scale = max(scale, z.abs());
    BigFloat sepTol = BigFloat::pow2(-p / 2, 64) * scale;

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if ((roots[i] - roots[j]).abs() < sepTol)
                throw DegenerateParameters("zero separation below threshold (multiple root?)");

    auto pairTolAt = [&](size_t k) {
        return BigFloat::pow2(-p / 4, 64) * max(BigFloat::fromLong(1, 64), roots[k].abs());
    };
    std::vector<bool> isReal(n, false);
    for (size_t k = 0; k < n; ++k)
        isReal[k] = roots[k].im.abs() <= pairTolAt(k);

    if (parametersReal) {
        zs.conjPair.assign(n, -1);
        for (size_t k = 0; k < n; ++k) {
            if (isReal[k]) {
                zs.conjPair[k] = static_cast<int>(k);
                continue;
            }
            if (zs.conjPair[k] >= 0)
                continue;
            BigComplex target = roots[k].conj();
            int best = -1;
            BigFloat bestDist(64);
            for (size_t j = 0; j < n; ++j) {
                if (j == k || isReal[j] || zs.conjPair[j] >= 0)
                    continue;
                BigFloat d = (roots[j] - target).abs();
                if (best < 0 || d < bestDist) {
                    best = static_cast<int>(j);
                    bestDist = d;
                }
            }
            if (best < 0 || bestDist > pairTolAt(k))
                throw PairingFailure("no conjugate partner for zero " + std::to_string(k));
            zs.conjPair[k] = best;
            zs.conjPair[static_cast<size_t>(best)] = static_cast<int>(k);
        }
        for (size_t k = 0; k < n; ++k) {
            int kb = zs.conjPair[k];
            if (kb < 0 || zs.conjPair[static_cast<size_t>(kb)] != static_cast<int>(k))
                throw PairingFailure("conjugation map is not an involution");
        }
    }

    BigFloat boundaryTol = BigFloat::pow2(-p / 2, 64);
    zs.classes.assign(n, ZeroClass::ExtraReal);
    for (size_t k = 0; k < n; ++k) {
        if (!isReal[k]) {
            zs.classes[k] = ZeroClass::ExtraComplexPair;
            continue;
        }
        const BigFloat& x = roots[k].re;
        bool ordinary = false;
        switch (family.kind) {
        case FamilyKind::Hermite: ordinary = true; break;
        case FamilyKind::Laguerre:
            ordinary = x.sign() > 0;
            if (x.abs() < boundaryTol)
                zs.warnings.push_back("zero " + std::to_string(k) + " near domain boundary 0");
            break;
        case FamilyKind::Jacobi: {
            BigFloat one = BigFloat::fromLong(1, 64);
            ordinary = x > -one && x < one;
            if ((x - one).abs() < boundaryTol || (x + one).abs() < boundaryTol)
                zs.warnings.push_back("zero " + std::to_string(k) + " near domain boundary +-1");
            break;
        }
        }
        if (ordinary) {
            zs.classes[k] = ZeroClass::Ordinary;
            ++zs.ordinaryCount;
        }
    }
    return zs;
}

ZeroSet computeZeroSet(const Poly& p, const Family& family, bool parametersReal,
                       long precisionBits) {
    auto roots = findRoots(p, precisionBits);
    ZeroSet zs = analyzeZeros(roots, family, parametersReal, precisionBits);
    // certified residual bound: evaluate the exact polynomial at 2x precision
    BigFloat bound(64);
    for (const auto& z : roots) {
        BigComplex zz(static_cast<mpfr_prec_t>(2 * precisionBits));
        zz += z;
        bound = max(bound, polyEvalBig(p, zz).abs());
    }
    zs.residualBound = bound;
    return zs;
}

} // namespace miortho
