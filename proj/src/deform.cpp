#include "miortho/deform.hpp"

#include "miortho/errors.hpp"

#include <sstream>

namespace miortho {

namespace {

// eta^k as a polynomial times p
Poly mulPowEta(Poly p, long k) {
    for (long i = 0; i < k; ++i)
        p = p * Poly::var();
    return p;
}

Poly mulPowOneMinus(Poly p, long k) {
    Poly f = Poly::one() - Poly::var();
    for (long i = 0; i < k; ++i)
        p = p * f;
    return p;
}

Poly mulPowOnePlus(Poly p, long k) {
    Poly f = Poly::one() + Poly::var();
    for (long i = 0; i < k; ++i)
        p = p * f;
    return p;
}

long requireNonnegInteger(const GaussianRational& e, const char* what) {
    if (!e.isInteger() || e.re < 0)
        throw NonPolynomialResult(std::string("prefactor bookkeeping failed: exponent of ") +
                                  what + " reduces to " + e.str());
    return e.re.get_num().get_si();
}

// Combine the Wronskian with the explicit prefactor of Eq.-style multipliers
// and extract the exact polynomial.
Poly extractPolynomial(QuasiRational w, const GaussianRational& addExp,
                       const GaussianRational& addEta, const GaussianRational& addOneMinus,
                       const GaussianRational& addOnePlus, const Rational& constant) {
    w.expCoeff += addExp;
    w.powEta += addEta;
    w.powOneMinus += addOneMinus;
    w.powOnePlus += addOnePlus;
    if (!w.expCoeff.isZero())
        throw NonPolynomialResult("prefactor bookkeeping failed: exponential exponent " +
                                  w.expCoeff.str());
    long a = requireNonnegInteger(w.powEta, "eta");
    long b = requireNonnegInteger(w.powOneMinus, "(1-eta)");
    long c = requireNonnegInteger(w.powOnePlus, "(1+eta)");
    Poly num = mulPowOnePlus(mulPowOneMinus(mulPowEta(w.rat.num(), a), b), c);
    Poly quotient;
    try {
        quotient = polyExactDivide(num, w.rat.den());
    } catch (const NonExactDivision&) {
        throw NonPolynomialResult("Wronskian denominator does not cancel");
    }
    return quotient * GaussianRational(constant);
}

std::vector<QuasiRational> seedList(const MultiIndexSpec& spec) {
    std::vector<QuasiRational> seeds;
    seeds.reserve(spec.dI.size() + spec.dII.size());
    for (int d : spec.dI)
        seeds.push_back(seedFunction(spec.family, SeedType::I, d));
    for (int d : spec.dII)
        seeds.push_back(seedFunction(spec.family, SeedType::II, d));
    return seeds;
}

// prefactor exponents of Eq. (XiD) / (PDn).  `withPn` distinguishes the two.
// The (1 +- eta) factors enter without the /2; the compensating exact powers
// of two restore the paper normalization (they collapse to 2^{-2MN} resp.
// 2^{-(2MN+M+N)} for Jacobi and to 1 for Laguerre).
struct Multiplier {
    GaussianRational addExp, addEta, addOneMinus, addOnePlus;
    Rational constant{1};
};

Multiplier xiMultiplier(const MultiIndexSpec& spec, bool withPn) {
    Multiplier mult;
    GaussianRational m(static_cast<long>(spec.mCount()));
    GaussianRational n(static_cast<long>(spec.nCount()));
    GaussianRational half(1, 2);
    const Family& fam = spec.family;
    if (fam.kind == FamilyKind::Laguerre) {
        mult.addExp = -m;
        mult.addEta = (m + fam.g + (withPn ? half : -half)) * n;
    } else if (fam.kind == FamilyKind::Jacobi) {
        mult.addOneMinus = (m + fam.g + (withPn ? half : -half)) * n;
        mult.addOnePlus = (n + fam.h + (withPn ? half : -half)) * m;
        long mn = static_cast<long>(spec.mCount()) * spec.nCount();
        long e = withPn ? 2 * mn + spec.mCount() + spec.nCount() : 2 * mn;
        mult.constant = rationalPow2(-e);
    }
    return mult;
}

} // namespace

Poly denominatorPoly(const MultiIndexSpec& spec) {
    spec.validate();
    if (spec.mode == DeformMode::KreinAdler) {
        std::vector<Poly> ps;
        ps.reserve(spec.dKA.size());
        for (int d : spec.dKA)
            ps.push_back(classicalPoly(spec.family, d));
        return polynomialWronskian(ps);
    }
    if (spec.empty())
        return Poly::one();
    auto seeds = seedList(spec);
    QuasiRational w = wronskian(seeds);
    Multiplier mult = xiMultiplier(spec, false);
    return extractPolynomial(std::move(w), mult.addExp, mult.addEta, mult.addOneMinus,
                             mult.addOnePlus, mult.constant);
}

Poly deformedPoly(const MultiIndexSpec& spec, int n) {
    spec.validate();
    if (n < 0)
        throw InvalidSpec("polynomial degree must be nonnegative");
    if (spec.mode == DeformMode::KreinAdler) {
        std::vector<Poly> ps;
        ps.reserve(spec.dKA.size() + 1);
        for (int d : spec.dKA)
            ps.push_back(classicalPoly(spec.family, d));
        ps.push_back(classicalPoly(spec.family, n));
        return polynomialWronskian(ps);
    }
    auto seeds = seedList(spec);
    seeds.push_back(QuasiRational(RationalFunction(classicalPoly(spec.family, n))));
    QuasiRational w = wronskian(seeds);
    Multiplier mult = xiMultiplier(spec, true);
    return extractPolynomial(std::move(w), mult.addExp, mult.addEta, mult.addOneMinus,
                             mult.addOnePlus, mult.constant);
}

DeformedFamily::DeformedFamily(MultiIndexSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    bool ka = spec_.mode == DeformMode::KreinAdler;
    structure_ = structureFunctions(spec_.family, ka ? static_cast<int>(spec_.dKA.size())
                                                     : spec_.mCount(),
                                    ka ? 0 : spec_.nCount(), ka);
    ellD_ = ell(spec_);
    xi_ = denominatorPoly(spec_);
    if (xi_.degree() != expectedXiDegree())
        throw DegenerateParameters("deg Xi_D = " + std::to_string(xi_.degree()) +
                                   ", expected " + std::to_string(expectedXiDegree()));
}

int DeformedFamily::expectedXiDegree() const {
    if (spec_.mode == DeformMode::KreinAdler)
        return ellD_ + static_cast<int>(spec_.dKA.size());
    return ellD_;
}

int DeformedFamily::expectedPolyDegree(int n) const { return ellD_ + n; }

const Poly& DeformedFamily::poly(int n) const {
    auto it = cache_.find(n);
    if (it != cache_.end())
        return it->second;
    Poly p = deformedPoly(spec_, n);
    bool kaDeleted = spec_.mode == DeformMode::KreinAdler &&
                     std::find(spec_.dKA.begin(), spec_.dKA.end(), n) != spec_.dKA.end();
    if (kaDeleted) {
        if (!p.isZero())
            throw Error("Krein-Adler Wronskian with duplicated entry must vanish");
    } else if (p.degree() != expectedPolyDegree(n)) {
        throw DegenerateParameters("deg P_{D," + std::to_string(n) + "} = " +
                                   std::to_string(p.degree()) + ", expected " +
                                   std::to_string(expectedPolyDegree(n)));
    }
    return cache_.emplace(n, std::move(p)).first->second;
}

Poly applyOperatorNumerator(const DeformedFamily& fam, const Poly& p) {
    const StructureData& s = fam.structure();
    const Poly& xi = fam.xi();
    Poly xiD = xi.derivative();
    Poly xiDD = xiD.derivative();
    Poly pD = p.derivative();
    Poly pDD = pD.derivative();
    Poly inner = (s.c2 * pDD + s.c1Shifted * pD + p * s.kaExtraConst) * xi -
                 (s.c2 * pD * GaussianRational(2) + s.c1ShiftedMinusDelta * p) * xiD +
                 s.c2 * p * xiDD;
    return inner * GaussianRational(-4);
}

RationalFunction applyOperator(const DeformedFamily& fam, const Poly& p) {
    return {applyOperatorNumerator(fam, p), fam.xi()};
}

FloatOperator::FloatOperator(const DeformedFamily& fam, mpfr_prec_t p) : prec(p) {
    xi = FloatPoly::fromExact(fam.xi(), p);
    xiD = xi.derivative();
    xiDD = xiD.derivative();
    c1s = FloatPoly::fromExact(fam.structure().c1Shifted, p);
    c1sd = FloatPoly::fromExact(fam.structure().c1ShiftedMinusDelta, p);
    c2 = FloatPoly::fromExact(fam.structure().c2, p);
    kaConst = BigComplex::fromGaussian(fam.structure().kaExtraConst, p);
}

FloatPoly FloatOperator::numerator(const FloatPoly& p) const {
    FloatPoly pD = p.derivative();
    FloatPoly pDD = pD.derivative();
    BigComplex minusFour = BigComplex::fromLong(-4, prec);
    BigComplex two = BigComplex::fromLong(2, prec);
    FloatPoly inner = (c2 * pDD + c1s * pD + p.scaled(kaConst)) * xi -
                      (c2 * pD.scaled(two) + c1sd * p) * xiD + c2 * p * xiDD;
    return inner.scaled(minusFour);
}

IdentityCheck checkEigenIdentity(const DeformedFamily& fam, int n) {
    IdentityCheck r;
    std::ostringstream id;
    id << "eigen[" << deformModeName(fam.spec().mode) << " "
       << familyKindName(fam.spec().family.kind) << " n=" << n << "]";
    r.caseId = id.str();
    try {
        const Poly& p = fam.poly(n);
        Poly residual =
            applyOperatorNumerator(fam, p) - fam.xi() * p * classicalEnergy(fam.spec().family, n);
        r.pass = residual.isZero();
        r.residualDegree = residual.degree();
        if (!r.pass)
            r.note = "residual degree " + std::to_string(residual.degree());
    } catch (const DegenerateParameters& e) {
        r.degenerate = true;
        r.note = e.what();
    }
    return r;
}

std::pair<Poly, GaussianRational> basicResidualSolved(const DeformedFamily& opFam, const Poly& p,
                                                      const GaussianRational& eigen,
                                                      const Poly& rhs) {
    Poly lhs = applyOperatorNumerator(opFam, p) - opFam.xi() * p * eigen;
    if (lhs.isZero())
        return {lhs, GaussianRational()};
    if (rhs.isZero() || lhs.degree() != rhs.degree())
        return {lhs, GaussianRational()};
    GaussianRational solved = lhs.leading() / rhs.leading();
    return {lhs - rhs * solved, solved};
}

IdentityCheck checkBasicIdentity(const DeformedFamily& fam, const ExtraIndex& extra, int bigN,
                                 BasicDirection direction) {
    IdentityCheck r;
    std::ostringstream id;
    id << "basic[" << extra.label() << " N=" << bigN
       << (direction == BasicDirection::Forward ? " fwd" : " exch") << "]";
    r.caseId = id.str();
    r.predicted = predictedCoefficient(fam.spec(), extra, bigN, direction);
    GaussianRational eigen = predictedEigenvalue(fam.spec(), extra, bigN);
    try {
        DeformedFamily derived(extra.derived);
        const DeformedFamily& opFam = direction == BasicDirection::Forward ? fam : derived;
        const DeformedFamily& rhsFam = direction == BasicDirection::Forward ? derived : fam;
        const Poly& p = rhsFam.poly(bigN); // the polynomial acted upon
        Poly rhs = opFam.poly(bigN) * rhsFam.xi();
        // forward:  Xi_D (H_D P_{D',N} - ~E P_{D',N}) = E' P_{D,N} Xi_{D'}
        // exchanged: roles of D and D' swapped, coefficient E''(D)
        auto [residual, solved] = basicResidualSolved(opFam, p, eigen, rhs);
        r.solved = solved;
        r.residualDegree = residual.degree();
        r.pass = residual.isZero() && solved == r.predicted;
        if (!residual.isZero())
            r.note = "residual degree " + std::to_string(residual.degree());
        else if (solved != r.predicted)
            r.note = "solved " + solved.str() + " != predicted " + r.predicted.str();
    } catch (const DegenerateParameters& e) {
        r.degenerate = true;
        r.note = e.what();
    }
    return r;
}

bool zeroSetsDisjoint(const DeformedFamily& fam, int bigN) {
    if (fam.xi().degree() < 1)
        return true;
    return polyGcd(fam.poly(bigN), fam.xi()).degree() == 0;
}

const std::vector<GaussianRational>& parameterSamplesG() {
    static const std::vector<GaussianRational> samples = {
        GaussianRational(7, 2),  GaussianRational(13, 10), GaussianRational(9, 2),
        GaussianRational(5, 2),  GaussianRational(11, 3),  GaussianRational(17, 4),
        GaussianRational(23, 6), GaussianRational(Rational(7, 2), Rational(1))};
    return samples;
}

const std::vector<GaussianRational>& parameterSamplesH() {
    static const std::vector<GaussianRational> samples = {
        GaussianRational(4),     GaussianRational(9, 2),  GaussianRational(37, 10),
        GaussianRational(16, 3), GaussianRational(21, 4), GaussianRational(11, 2),
        GaussianRational(19, 6), GaussianRational(Rational(4), Rational(1, 2))};
    return samples;
}

ParamSweepReport identityInParameters(const FreeCase& freeCase, int samples) {
    if (samples < 2)
        throw InvalidSpec("parameter sweep needs at least 2 samples");
    const auto& gs = parameterSamplesG();
    const auto& hs = parameterSamplesH();
    ParamSweepReport report;
    bool kaHermite =
        freeCase.mode == DeformMode::KreinAdler && freeCase.kind == FamilyKind::Hermite;
    int count = kaHermite ? 1 : std::min<int>(samples, static_cast<int>(gs.size()));
    for (int i = 0; i < count; ++i) {
        // keep the Gaussian-rational sample in every sweep
        int idx = (count < static_cast<int>(gs.size()) && i == count - 1)
                      ? static_cast<int>(gs.size()) - 1
                      : i;
        MultiIndexSpec spec;
        spec.mode = freeCase.mode;
        spec.dI = freeCase.dI;
        spec.dII = freeCase.dII;
        spec.dKA = freeCase.dKA;
        switch (freeCase.kind) {
        case FamilyKind::Hermite: spec.family = Family::hermite(); break;
        case FamilyKind::Laguerre: spec.family = Family::laguerre(gs[static_cast<size_t>(idx)]); break;
        case FamilyKind::Jacobi:
            spec.family = Family::jacobi(gs[static_cast<size_t>(idx)], hs[static_cast<size_t>(idx)]);
            break;
        }
        ParamSweepSample sample;
        sample.params = kaHermite ? "-" : "g=" + spec.family.g.str() +
                        (freeCase.kind == FamilyKind::Jacobi ? ",h=" + spec.family.h.str() : "");
        try {
            DeformedFamily fam(spec);
            bool ok = true;
            if (freeCase.runEigen) {
                for (int n = 0; n <= freeCase.bigN && ok; ++n) {
                    if (spec.mode == DeformMode::KreinAdler &&
                        std::find(spec.dKA.begin(), spec.dKA.end(), n) != spec.dKA.end())
                        continue;
                    auto c = checkEigenIdentity(fam, n);
                    ok = c.pass && !c.degenerate;
                    if (!ok)
                        sample.note = c.caseId + ": " + c.note;
                }
            }
            if (freeCase.runBasic && ok) {
                for (const auto& extra : enumerateExtras(spec, freeCase.bigN)) {
                    for (auto dir : {BasicDirection::Forward, BasicDirection::Exchanged}) {
                        auto c = checkBasicIdentity(fam, extra, freeCase.bigN, dir);
                        if (!c.pass || c.degenerate) {
                            ok = false;
                            sample.note = c.caseId + ": " + c.note;
                            break;
                        }
                    }
                    if (!ok)
                        break;
                }
            }
            sample.pass = ok;
        } catch (const DegenerateParameters& e) {
            sample.degenerate = true;
            sample.note = e.what();
        }
        report.samples.push_back(std::move(sample));
    }
    report.allPass = true;
    for (const auto& s : report.samples)
        report.allPass = report.allPass && s.pass;
    return report;
}

} // namespace miortho
