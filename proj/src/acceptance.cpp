#include "miortho/acceptance.hpp"

#include "miortho/report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace miortho {

namespace {

constexpr long kPrec = 256;

MultiIndexSpec classicalSpec(const Family& fam) {
    MultiIndexSpec s;
    // empty-D classical case; Hermite lives in Krein-Adler mode
    s.mode = fam.kind == FamilyKind::Hermite ? DeformMode::KreinAdler : DeformMode::MultiIndexed;
    s.family = fam;
    return s;
}

MultiIndexSpec flagshipSpec(GaussianRational g = GaussianRational(7, 2)) {
    MultiIndexSpec s;
    s.mode = DeformMode::MultiIndexed;
    s.dI = {1};
    s.dII = {2};
    s.family = Family::laguerre(std::move(g));
    return s;
}

MultiIndexSpec jacobiCaseSpec() {
    MultiIndexSpec s;
    s.mode = DeformMode::MultiIndexed;
    s.dI = {1};
    s.dII = {1};
    s.family = Family::jacobi(GaussianRational(3), GaussianRational(4));
    return s;
}

MultiIndexSpec kaSpec(const Family& fam, std::vector<int> d) {
    MultiIndexSpec s;
    s.mode = DeformMode::KreinAdler;
    s.dKA = std::move(d);
    s.family = fam;
    return s;
}

struct Criterion {
    std::string name;
    std::function<bool(std::ostream&)> run;
};

BigFloat tolOrth() { return BigFloat::fromString("1e-50", 128); }
BigFloat tolEig() { return BigFloat::pow2(-100, 64); }
BigFloat tolDual() { return BigFloat::pow2(-128, 64); }

bool classicalOrthogonality(const MultiIndexSpec& spec, int bigN, std::ostream& log) {
    DeformedFamily fam(spec);
    ZeroSet zs = computeZeroSet(fam.poly(bigN), spec.family, true, kPrec);
    ChristoffelSet cs = christoffelNumbers(fam, bigN, zs, kPrec);
    auto parts = participantSet(fam, bigN);
    auto rep = orthogonalitySums(fam, zs, cs, parts, kPrec);
    log << familyKindName(spec.family.kind) << " maxOffDiag=" << rep.maxOffDiagonal.str() << " ";
    return rep.maxOffDiagonal < tolOrth();
}

bool criterion1(std::ostream& log) {
    bool ok = classicalOrthogonality(classicalSpec(Family::hermite()), 6, log);
    ok = classicalOrthogonality(classicalSpec(Family::laguerre(GaussianRational(7, 2))), 6, log) && ok;
    ok = classicalOrthogonality(
             classicalSpec(Family::jacobi(GaussianRational(2), GaussianRational(3))), 6, log) && ok;
    return ok;
}

bool criterion2(std::ostream& log) {
    const int bigN = 5;
    MultiIndexSpec spec = flagshipSpec();
    DeformedFamily fam(spec);
    auto extras = enumerateExtras(spec, bigN);
    bool ok = fam.ellD() == 4 && extras.size() == 4;
    log << "#EP=" << extras.size() << " ";
    ok = ok && fam.xi().degree() == 4;
    for (int n = 0; n <= bigN; ++n)
        ok = ok && fam.poly(n).degree() == 4 + n;
    log << "degXi=" << fam.xi().degree() << " ";

    ZeroSet zs = computeZeroSet(fam.poly(bigN), spec.family, true, kPrec);
    std::vector<BigComplex> xiZeros = findRoots(fam.xi(), kPrec);
    ChristoffelSet cs = christoffelNumbers(fam, bigN, zs, kPrec);
    auto parts = participantSet(fam, bigN);
    ok = ok && parts.size() == 9 && zs.zeros.size() == 9;

    auto orth = orthogonalitySums(fam, zs, cs, parts, kPrec);
    log << "maxOffDiag=" << orth.maxOffDiagonal.str() << " ";
    ok = ok && orth.maxOffDiagonal < tolOrth();

    SpectralMatrix sm = buildMatrices(fam, bigN, zs, xiZeros, kPrec, BuildPath::Both);
    auto spectrum = eigenSpectrum(sm);
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * kPrec);
    std::vector<bool> used(spectrum.size(), false);
    BigFloat worst(64);
    for (const auto& part : parts) {
        BigComplex target = BigComplex::fromGaussian(part.mEigenvalue, w);
        int best = -1;
        BigFloat bestDist(64);
        for (size_t j = 0; j < spectrum.size(); ++j) {
            if (used[j])
                continue;
            BigFloat d = (spectrum[j] - target).abs();
            if (best < 0 || d < bestDist) {
                best = static_cast<int>(j);
                bestDist = d;
            }
        }
        used[static_cast<size_t>(best)] = true;
        worst = max(worst, bestDist);
    }
    log << "spectrumDist=" << worst.str() << " ";
    ok = ok && worst < tolEig();

    auto res = predictedEigenpairsCheck(sm, fam, bigN, parts);
    BigFloat worstRes(64);
    for (const auto& e : res)
        worstRes = max(worstRes, e.residual);
    log << "eigResidual=" << worstRes.str() << " ";
    return ok && worstRes < tolEig();
}

bool criterion3(std::ostream& log) {
    MultiIndexSpec flag = flagshipSpec();
    DeformedFamily famL(flag);
    bool ok = true;
    for (int n = 0; n <= 5; ++n) {
        auto c = checkEigenIdentity(famL, n);
        ok = ok && c.pass;
    }
    MultiIndexSpec jac = jacobiCaseSpec();
    DeformedFamily famJ(jac);
    for (int n = 0; n <= 3; ++n) {
        auto c = checkEigenIdentity(famJ, n);
        ok = ok && c.pass;
    }
    log << (ok ? "all residuals identically zero " : "nonzero residual ");
    return ok;
}

bool criterion4(std::ostream& log) {
    bool ok = true;
    auto runAll = [&](const MultiIndexSpec& spec, int bigN) {
        DeformedFamily fam(spec);
        for (const auto& extra : enumerateExtras(spec, bigN)) {
            for (auto dir : {BasicDirection::Forward, BasicDirection::Exchanged}) {
                auto c = checkBasicIdentity(fam, extra, bigN, dir);
                if (!c.pass) {
                    log << "[" << c.caseId << " " << c.note << "] ";
                    ok = false;
                }
            }
        }
    };
    runAll(flagshipSpec(), 5);
    runAll(jacobiCaseSpec(), 3);
    if (ok)
        log << "basic/exchanged identities and coefficients exact ";
    return ok;
}

bool criterion5(std::ostream& log) {
    bool ok = true;
    auto runKA = [&](const MultiIndexSpec& spec) {
        const int bigN = 5;
        ok = ok && kreinAdlerConditionsHold(spec.dKA);
        DeformedFamily fam(spec);
        for (const auto& extra : enumerateExtras(spec, bigN)) {
            for (auto dir : {BasicDirection::Forward, BasicDirection::Exchanged}) {
                auto c = checkBasicIdentity(fam, extra, bigN, dir);
                ok = ok && c.pass;
            }
        }
        ZeroSet zs = computeZeroSet(fam.poly(bigN), spec.family, true, kPrec);
        std::vector<BigComplex> xiZeros;
        if (fam.xi().degree() >= 1)
            xiZeros = findRoots(fam.xi(), kPrec);
        SpectralMatrix sm = buildMatrices(fam, bigN, zs, xiZeros, kPrec, BuildPath::Both);
        auto spectrum = eigenSpectrum(sm);
        BigFloat worst(64);
        mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * kPrec);
        for (const auto& e : spectrum) {
            BigFloat rounded(w);
            mpfr_round(rounded.raw(), e.re.raw());
            worst = max(worst, (e - BigComplex(rounded, BigFloat::fromLong(0, w))).abs());
        }
        log << familyKindName(spec.family.kind) << " intDist=" << worst.str() << " ";
        ok = ok && worst < tolEig();
    };
    runKA(kaSpec(Family::hermite(), {1, 2}));
    runKA(kaSpec(Family::laguerre(GaussianRational(7, 2)), {1, 2}));
    runKA(kaSpec(Family::laguerre(GaussianRational(13, 10)), {1, 2}));
    return ok;
}

bool criterion6(std::ostream& log) {
    const int bigN = 5;
    MultiIndexSpec spec = flagshipSpec(GaussianRational(Rational(7, 2), Rational(1)));
    DeformedFamily fam(spec);
    bool ok = true;
    for (int n = 0; n <= bigN; ++n)
        ok = ok && checkEigenIdentity(fam, n).pass;
    for (const auto& extra : enumerateExtras(spec, bigN))
        for (auto dir : {BasicDirection::Forward, BasicDirection::Exchanged})
            ok = ok && checkBasicIdentity(fam, extra, bigN, dir).pass;
    log << (ok ? "exact identities hold at g=7/2+i " : "exact identity failed ");
    // numeric symmetry with conjugation-dependent checks skipped
    ZeroSet zs = computeZeroSet(fam.poly(bigN), spec.family, false, kPrec);
    std::vector<BigComplex> xiZeros = findRoots(fam.xi(), kPrec);
    SpectralMatrix sm = buildMatrices(fam, bigN, zs, xiZeros, kPrec, BuildPath::Both);
    BigFloat tol = BigFloat::pow2(-kPrec / 2, 64) * max(BigFloat::fromLong(1, 64), sm.maxEntry);
    log << "symmetryDefect=" << sm.symmetryDefect.str() << " ";
    return ok && sm.symmetryDefect <= tol;
}

bool criterion7(std::ostream& log) {
    // flagship
    MultiIndexSpec spec = flagshipSpec();
    DeformedFamily fam(spec);
    ZeroSet zs = computeZeroSet(fam.poly(5), spec.family, true, kPrec);
    std::vector<BigComplex> xiZeros = findRoots(fam.xi(), kPrec);
    SpectralMatrix sm = buildMatrices(fam, 5, zs, xiZeros, kPrec, BuildPath::Both);
    BigFloat tolFlag = tolDual() * max(BigFloat::fromLong(1, 64), sm.maxEntry);
    bool ok = sm.dualPathDiscrepancy <= tolFlag;
    log << "flagship dual=" << sm.dualPathDiscrepancy.str() << " ";

    // classical Hermite N=2
    MultiIndexSpec hSpec = classicalSpec(Family::hermite());
    DeformedFamily hFam(hSpec);
    ZeroSet hzs = computeZeroSet(hFam.poly(2), hSpec.family, true, kPrec);
    SpectralMatrix hsm = buildMatrices(hFam, 2, hzs, {}, kPrec, BuildPath::Both);
    BigFloat tolH = tolDual() * max(BigFloat::fromLong(1, 64), hsm.maxEntry);
    ok = ok && hsm.dualPathDiscrepancy <= tolH;
    log << "H dual=" << hsm.dualPathDiscrepancy.str() << " ";
    long expected[2][2] = {{3, -1}, {-1, 3}};
    BigFloat defect(64);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            defect = max(defect,
                         (hsm.m[i][j] - BigComplex::fromLong(expected[i][j], 64)).abs());
    log << "H entryDefect=" << defect.str() << " ";
    return ok && defect <= tolH;
}

bool criterion8(std::ostream& log) {
    bool ok = true;
    auto quad = [&](const MultiIndexSpec& spec) {
        const int bigN = 4;
        DeformedFamily fam(spec);
        ZeroSet zs = computeZeroSet(fam.poly(bigN), spec.family, true, kPrec);
        ChristoffelSet cs = christoffelNumbers(fam, bigN, zs, kPrec);
        auto rep = quadratureMomentCheck(spec.family, bigN, zs, cs, kPrec);
        log << familyKindName(spec.family.kind) << " err=" << rep.maxRelError.str() << " ";
        ok = ok && rep.maxRelError < tolOrth() &&
             rep.controlRelError > BigFloat::fromString("1e-10", 64);
    };
    quad(classicalSpec(Family::hermite()));
    quad(classicalSpec(Family::laguerre(GaussianRational(7, 2))));
    quad(classicalSpec(Family::jacobi(GaussianRational(2), GaussianRational(3))));

    // Chebyshev case: constant Christoffel numbers
    MultiIndexSpec cheb = classicalSpec(Family::jacobi(GaussianRational(0), GaussianRational(0)));
    DeformedFamily fam(cheb);
    ZeroSet zs = computeZeroSet(fam.poly(4), cheb.family, true, kPrec);
    ChristoffelSet cs = christoffelNumbers(fam, 4, zs, kPrec);
    BigFloat lo = cs.lambdas[0].abs(), hi = lo;
    for (const auto& l : cs.lambdas) {
        lo = l.abs() < lo ? l.abs() : lo;
        hi = max(hi, l.abs());
    }
    BigFloat spread = (hi - lo) / lo;
    log << "chebSpread=" << spread.str() << " ";
    return ok && spread < tolOrth();
}

bool criterion9(std::ostream& log) {
    MultiIndexSpec spec = flagshipSpec();
    DeformedFamily fam(spec);
    auto parts = participantSet(fam, 5);
    std::vector<Poly> polys;
    for (const auto& p : parts)
        polys.push_back(p.poly);
    polys.push_back(fam.poly(5));
    bool nonzero = basisDeterminantNonzero(polys);
    std::vector<Poly> dup = polys;
    dup[2] = dup[7];
    bool controlZero = !basisDeterminantNonzero(dup);
    log << "det nonzero=" << (nonzero ? "yes" : "no")
        << " dupControlZero=" << (controlZero ? "yes" : "no") << " ";
    return nonzero && controlZero;
}

} // namespace

bool runAcceptanceSuite(std::ostream& out) {
    const std::vector<Criterion> criteria = {
        {"classical discrete orthogonality H/L/J N=6 (<1e-50)", criterion1},
        {"flagship L dI={1} dII={2} g=7/2 N=5: extras/degrees/orthogonality/spectrum/eigenvectors",
         criterion2},
        {"eigen identity suite exact over Q(i) (flagship n=0..5, Jacobi g=3 h=4 N=3)", criterion3},
        {"basic equations forward+exchanged with exact Theorem coefficients", criterion4},
        {"Krein-Adler suite: conditions, basic equations, integer spectra", criterion5},
        {"complex parameters g=7/2+i: exact identities + numeric symmetry", criterion6},
        {"dual-path matrix agreement (<2^-128); Hermite N=2 matrix [[3,-1],[-1,3]]", criterion7},
        {"quadrature moment ratios k<2N (<1e-50), k=2N control; Chebyshev constant weights",
         criterion8},
        {"basis corollary: nonzero determinant + duplicate-row control", criterion9},
    };
    bool all = true;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        std::ostringstream log;
        bool pass = false;
        std::string error;
        auto t0 = std::chrono::steady_clock::now();
        try {
            pass = c.run(log);
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        double sec = std::chrono::duration<double>(t1 - t0).count();
        out << (pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << c.name;
        out << "  [" << log.str();
        if (!error.empty())
            out << "error: " << error;
        out << "t=" << sec << "s]\n";
        all = all && pass;
    }
    out << (all ? "RESULT: all criteria passed\n" : "RESULT: criteria FAILED\n");
    return all;
}

} // namespace miortho
