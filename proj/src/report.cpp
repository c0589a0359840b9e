#include "miortho/report.hpp"

#include "miortho/errors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>

namespace miortho {

const std::vector<std::string>& allCheckNames() {
    static const std::vector<std::string> names = {
        "degrees",     "eigenIdentity", "basicIdentity", "identityInParameters",
        "zeros",       "matrices",      "orthogonality", "eigenpairs",
        "spectrum",    "basis",         "quadrature",    "diophantine"};
    return names;
}

MultiIndexSpec CaseSpec::indexSpec() const {
    MultiIndexSpec s;
    s.mode = mode;
    s.dI = dI;
    s.dII = dII;
    s.dKA = dKA;
    s.family = family;
    return s;
}

namespace {

Json familyToJson(const Family& f) {
    Json j;
    j["kind"] = familyKindName(f.kind);
    if (f.kind != FamilyKind::Hermite)
        j["g"] = f.g.str();
    if (f.kind == FamilyKind::Jacobi)
        j["h"] = f.h.str();
    return j;
}

Family familyFromJson(const Json& j) {
    FamilyKind kind = parseFamilyKind(j.at("kind").get<std::string>());
    Family f;
    f.kind = kind;
    if (kind != FamilyKind::Hermite)
        f.g = GaussianRational::parse(j.at("g").get<std::string>());
    if (kind == FamilyKind::Jacobi)
        f.h = GaussianRational::parse(j.at("h").get<std::string>());
    return f;
}

} // namespace

Json CaseSpec::toJson() const {
    Json j;
    j["family"] = familyToJson(family);
    j["mode"] = deformModeName(mode);
    j["dI"] = dI;
    j["dII"] = dII;
    j["dKA"] = dKA;
    j["N"] = bigN;
    j["precisionBits"] = precisionBits;
    j["buildPath"] = buildPathName(buildPath);
    j["tolerances"] = Json{{"orthLog10", orthToleranceLog10}, {"eigLog2", eigenToleranceLog2}};
    j["checks"] = checks;
    return j;
}

std::string CaseSpec::serialize() const { return toJson().dump(); }

CaseSpec CaseSpec::fromJson(const Json& j) {
    CaseSpec c;
    c.family = familyFromJson(j.at("family"));
    c.mode = parseDeformMode(j.at("mode").get<std::string>());
    c.dI = j.value("dI", std::vector<int>{});
    c.dII = j.value("dII", std::vector<int>{});
    c.dKA = j.value("dKA", std::vector<int>{});
    c.bigN = j.at("N").get<int>();
    c.precisionBits = j.value("precisionBits", 256L);
    c.buildPath = parseBuildPath(j.value("buildPath", std::string("both")));
    if (j.contains("tolerances")) {
        c.orthToleranceLog10 = j["tolerances"].value("orthLog10", -50);
        c.eigenToleranceLog2 = j["tolerances"].value("eigLog2", -100);
    }
    c.checks = j.value("checks", std::vector<std::string>{});
    return c;
}

CaseSpec CaseSpec::parse(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidSpec(std::string("cannot parse case spec: ") + e.what());
    }
    try {
        return fromJson(j);
    } catch (const Json::exception& e) {
        throw InvalidSpec(std::string("malformed case spec: ") + e.what());
    }
}

bool Report::allPass() const {
    for (const auto& c : checks)
        if (c.status == "fail")
            return false;
    return true;
}

std::vector<std::string> Report::failures() const {
    std::vector<std::string> f;
    for (const auto& c : checks)
        if (c.status == "fail")
            f.push_back(c.name);
    return f;
}

namespace {

std::string complexStr(const BigComplex& z) {
    return "(" + z.re.str() + ", " + z.im.str() + ")";
}

Json matrixToJson(const std::vector<std::vector<BigComplex>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& e : row)
            r.push_back(Json{{"re", e.re.str()}, {"im", e.im.str()}});
        rows.push_back(std::move(r));
    }
    return rows;
}

// Mutable pipeline state shared by the checks.
struct CaseState {
    CaseSpec spec;
    RunOptions options;
    std::optional<DeformedFamily> fam;
    std::string constructionError;
    std::optional<std::vector<Participant>> parts;
    std::optional<ZeroSet> zeroSet;
    std::vector<BigComplex> xiZeros;
    std::optional<SpectralMatrix> matrices;
    std::optional<ChristoffelSet> chris;
    std::optional<std::vector<BigComplex>> spectrum;

    bool paramsReal() const { return spec.family.parametersReal(); }
    BigFloat orthTol() const {
        BigFloat t = BigFloat::fromString("1e" + std::to_string(spec.orthToleranceLog10), 128);
        return t;
    }
    BigFloat eigTol() const { return BigFloat::pow2(spec.eigenToleranceLog2, 64); }
    BigFloat halfPrecTol() const { return BigFloat::pow2(-spec.precisionBits / 2, 64); }

    int expectedOrdinary() const {
        if (spec.mode == DeformMode::MultiIndexed)
            return spec.bigN;
        int below = 0;
        for (int d : spec.dKA)
            if (d < spec.bigN)
                ++below;
        return spec.bigN - below;
    }

    const std::vector<Participant>& participants() {
        if (!parts)
            parts = participantSet(*fam, spec.bigN);
        return *parts;
    }
    const ZeroSet& zeros() {
        if (!zeroSet) {
            zeroSet = computeZeroSet(fam->poly(spec.bigN), spec.family, paramsReal(),
                                     spec.precisionBits);
            if (fam->xi().degree() >= 1)
                xiZeros = findRoots(fam->xi(), spec.precisionBits);
        }
        return *zeroSet;
    }
    const SpectralMatrix& spectralMatrices() {
        if (!matrices)
            matrices = buildMatrices(*fam, spec.bigN, zeros(), xiZeros, spec.precisionBits,
                                     spec.buildPath);
        return *matrices;
    }
    const ChristoffelSet& christoffel() {
        if (!chris)
            chris = christoffelNumbers(*fam, spec.bigN, zeros(), spec.precisionBits);
        return *chris;
    }
    const std::vector<BigComplex>& eigenvalues() {
        if (!spectrum)
            spectrum = eigenSpectrum(spectralMatrices());
        return *spectrum;
    }
};

CheckResult checkDegrees(CaseState& st) {
    CheckResult r{"degrees", "pass", Json::object()};
    const auto& fam = *st.fam;
    r.details["ell"] = fam.ellD();
    r.details["degXi"] = fam.xi().degree();
    r.details["expectedDegXi"] = fam.expectedXiDegree();
    Json degs = Json::array();
    for (int n = 0; n <= st.spec.bigN; ++n) {
        bool deleted = st.spec.mode == DeformMode::KreinAdler &&
                       std::find(st.spec.dKA.begin(), st.spec.dKA.end(), n) != st.spec.dKA.end();
        if (deleted)
            continue;
        const Poly& p = fam.poly(n); // degree asserted inside
        degs.push_back(Json{{"n", n}, {"deg", p.degree()}});
    }
    r.details["degP"] = degs;
    auto extras = enumerateExtras(st.spec.indexSpec(), st.spec.bigN);
    r.details["extraCount"] = extras.size();
    int expectedExtras;
    if (st.spec.mode == DeformMode::MultiIndexed) {
        expectedExtras = fam.ellD();
    } else {
        expectedExtras = 0;
        for (size_t j = 0; j < st.spec.dKA.size(); ++j)
            expectedExtras += st.spec.dKA[j] - static_cast<int>(j);
    }
    r.details["expectedExtraCount"] = expectedExtras;
    bool gcdOk = zeroSetsDisjoint(fam, st.spec.bigN);
    r.details["xiCoprimeWithP"] = gcdOk;
    auto warnings = parameterBoundWarnings(st.spec.family, st.spec.dI, st.spec.dII);
    r.details["parameterBoundWarnings"] = warnings;
    if (static_cast<int>(extras.size()) != expectedExtras || !gcdOk)
        r.status = "fail";
    return r;
}

CheckResult checkEigenIdentities(CaseState& st) {
    CheckResult r{"eigenIdentity", "pass", Json::object()};
    Json cases = Json::array();
    for (int n = 0; n <= st.spec.bigN; ++n) {
        if (st.spec.mode == DeformMode::KreinAdler &&
            std::find(st.spec.dKA.begin(), st.spec.dKA.end(), n) != st.spec.dKA.end())
            continue;
        auto c = checkEigenIdentity(*st.fam, n);
        cases.push_back(Json{{"case", c.caseId},
                             {"status", c.degenerate ? "skip" : (c.pass ? "pass" : "fail")},
                             {"note", c.note}});
        if (!c.pass && !c.degenerate)
            r.status = "fail";
    }
    r.details["cases"] = cases;
    return r;
}

CheckResult checkBasicIdentities(CaseState& st) {
    CheckResult r{"basicIdentity", "pass", Json::object()};
    Json cases = Json::array();
    for (const auto& extra : enumerateExtras(st.spec.indexSpec(), st.spec.bigN)) {
        for (auto dir : {BasicDirection::Forward, BasicDirection::Exchanged}) {
            auto c = checkBasicIdentity(*st.fam, extra, st.spec.bigN, dir);
            cases.push_back(Json{{"case", c.caseId},
                                 {"status", c.degenerate ? "skip" : (c.pass ? "pass" : "fail")},
                                 {"solved", c.solved.str()},
                                 {"predicted", c.predicted.str()},
                                 {"note", c.note}});
            if (!c.pass && !c.degenerate)
                r.status = "fail";
        }
    }
    r.details["cases"] = cases;
    return r;
}

CheckResult checkIdentityInParameters(CaseState& st) {
    CheckResult r{"identityInParameters", "pass", Json::object()};
    FreeCase fc;
    fc.kind = st.spec.family.kind;
    fc.mode = st.spec.mode;
    fc.dI = st.spec.dI;
    fc.dII = st.spec.dII;
    fc.dKA = st.spec.dKA;
    fc.bigN = st.spec.bigN;
    auto sweep = identityInParameters(fc, 8);
    Json samples = Json::array();
    for (const auto& s : sweep.samples)
        samples.push_back(Json{{"params", s.params},
                               {"status", s.degenerate ? "skip" : (s.pass ? "pass" : "fail")},
                               {"note", s.note}});
    r.details["samples"] = samples;
    if (!sweep.allPass)
        r.status = "fail";
    return r;
}

CheckResult checkZeros(CaseState& st) {
    CheckResult r{"zeros", "pass", Json::object()};
    const ZeroSet& zs = st.zeros();
    r.details["count"] = zs.zeros.size();
    r.details["ordinary"] = zs.ordinaryCount;
    r.details["expectedOrdinary"] = st.expectedOrdinary();
    r.details["residualBound"] = zs.residualBound.str();
    Json zlist = Json::array();
    for (size_t i = 0; i < zs.zeros.size(); ++i) {
        Json z;
        z["re"] = zs.zeros[i].re.str();
        z["im"] = zs.zeros[i].im.str();
        z["class"] = zs.classes[i] == ZeroClass::Ordinary
                         ? "ordinary"
                         : (zs.classes[i] == ZeroClass::ExtraReal ? "extraReal"
                                                                   : "extraComplexPair");
        if (!zs.conjPair.empty())
            z["pair"] = zs.conjPair[i];
        zlist.push_back(std::move(z));
    }
    r.details["zeros"] = zlist;
    r.details["precisionBits"] = zs.precisionBits;
    r.details["warnings"] = zs.warnings;

    // Vieta cross-check at half-precision tolerance
    const Poly& p = st.fam->poly(st.spec.bigN);
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * st.spec.precisionBits);
    BigComplex sum(w), prod = BigComplex::fromLong(1, w);
    for (const auto& z : zs.zeros) {
        BigComplex zz(w);
        zz += z;
        sum += zz;
        prod *= zz;
    }
    int n = p.degree();
    BigComplex lcInv = BigComplex::fromGaussian(p.leading(), w).inverse();
    BigComplex vietaSum = -(BigComplex::fromGaussian(p.coeff(n - 1), w) * lcInv);
    BigComplex vietaProd = BigComplex::fromGaussian(p.coeff(0), w) * lcInv;
    if (n % 2 == 1)
        vietaProd = -vietaProd;
    BigFloat one = BigFloat::fromLong(1, 64);
    BigFloat sumErr = (sum - vietaSum).abs() / max(one, vietaSum.abs());
    BigFloat prodErr = (prod - vietaProd).abs() / max(one, vietaProd.abs());
    r.details["vietaSumError"] = sumErr.str();
    r.details["vietaProductError"] = prodErr.str();

    bool ok = zs.ordinaryCount == st.expectedOrdinary() && sumErr < st.halfPrecTol() &&
              prodErr < st.halfPrecTol();
    if (!ok)
        r.status = "fail";
    return r;
}

CheckResult checkMatrices(CaseState& st) {
    CheckResult r{"matrices", "pass", Json::object()};
    const SpectralMatrix& sm = st.spectralMatrices();
    BigFloat tol = st.halfPrecTol() * max(BigFloat::fromLong(1, 64), sm.maxEntry);
    r.details["maxEntry"] = sm.maxEntry.str();
    r.details["symmetryDefect"] = sm.symmetryDefect.str();
    bool ok = sm.symmetryDefect <= tol;
    if (st.paramsReal()) {
        BigFloat cd = conjugationDefect(sm);
        r.details["conjugationDefect"] = cd.str();
        ok = ok && cd <= tol;
    } else {
        r.details["conjugationDefect"] = "skipped (complex parameters)";
    }
    if (sm.path == BuildPath::Both) {
        r.details["dualPathDiscrepancy"] = sm.dualPathDiscrepancy.str();
        ok = ok && sm.dualPathDiscrepancy <= tol;
    }
    if (st.options.dumpMatrices) {
        r.details["mTilde"] = matrixToJson(sm.mTilde);
        r.details["m"] = matrixToJson(sm.m);
    }
    if (!ok)
        r.status = "fail";
    return r;
}

CheckResult checkOrthogonality(CaseState& st) {
    CheckResult r{"orthogonality", "pass", Json::object()};
    auto rep = orthogonalitySums(*st.fam, st.zeros(), st.christoffel(), st.participants(),
                                 st.spec.precisionBits);
    r.details["participants"] = st.participants().size();
    r.details["maxOffDiagonal"] = rep.maxOffDiagonal.str();
    // Christoffel conjugation structure (real parameters)
    if (st.paramsReal() && !st.zeros().conjPair.empty()) {
        BigFloat defect(64);
        const auto& lam = st.christoffel().lambdas;
        for (size_t i = 0; i < lam.size(); ++i) {
            size_t ib = static_cast<size_t>(st.zeros().conjPair[i]);
            defect = max(defect, (lam[i].conj() - lam[ib]).abs());
        }
        BigFloat lamScale(64);
        for (const auto& l : lam)
            lamScale = max(lamScale, l.abs());
        r.details["christoffelConjDefect"] =
            (lamScale.isZero() ? defect : defect / lamScale).str();
    }
    if (!(rep.maxOffDiagonal < st.orthTol()))
        r.status = "fail";
    return r;
}

CheckResult checkEigenpairs(CaseState& st) {
    CheckResult r{"eigenpairs", "pass", Json::object()};
    auto residuals =
        predictedEigenpairsCheck(st.spectralMatrices(), *st.fam, st.spec.bigN, st.participants());
    Json list = Json::array();
    BigFloat worst(64);
    for (const auto& e : residuals) {
        list.push_back(Json{{"participant", e.label},
                            {"eigenvalue", e.predicted.str()},
                            {"residual", e.residual.str()}});
        worst = max(worst, e.residual);
    }
    r.details["residuals"] = list;
    r.details["maxResidual"] = worst.str();
    if (!(worst < st.eigTol()))
        r.status = "fail";
    return r;
}

CheckResult checkSpectrum(CaseState& st) {
    CheckResult r{"spectrum", "pass", Json::object()};
    const auto& eig = st.eigenvalues();
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * st.spec.precisionBits);

    // predictions (multiset)
    std::vector<GaussianRational> predicted;
    for (const auto& part : st.participants())
        predicted.push_back(part.mEigenvalue);

    // exact degeneracies are flagged, not fatal
    Json degeneracies = Json::array();
    for (size_t i = 0; i < predicted.size(); ++i)
        for (size_t j = i + 1; j < predicted.size(); ++j)
            if (predicted[i] == predicted[j])
                degeneracies.push_back(Json{{"a", st.participants()[i].label},
                                            {"b", st.participants()[j].label},
                                            {"value", predicted[i].str()}});
    r.details["degeneracies"] = degeneracies;

    BigFloat tol = st.eigTol();
    std::vector<bool> used(eig.size(), false);
    BigFloat worst(64);
    bool ok = eig.size() == predicted.size();
    Json matches = Json::array();
    for (const auto& pr : predicted) {
        BigComplex target = BigComplex::fromGaussian(pr, w);
        int best = -1;
        BigFloat bestDist(64);
        for (size_t j = 0; j < eig.size(); ++j) {
            if (used[j])
                continue;
            BigFloat d = (eig[j] - target).abs();
            if (best < 0 || d < bestDist) {
                best = static_cast<int>(j);
                bestDist = d;
            }
        }
        if (best < 0) {
            ok = false;
            break;
        }
        used[static_cast<size_t>(best)] = true;
        worst = max(worst, bestDist);
        matches.push_back(Json{{"predicted", pr.str()}, {"distance", bestDist.str()}});
    }
    r.details["matches"] = matches;
    r.details["maxDistance"] = worst.str();
    ok = ok && worst < tol;

    // trace identity
    BigComplex trace(w), eigSum(w);
    const auto& m = st.spectralMatrices().m;
    for (size_t i = 0; i < m.size(); ++i)
        trace += m[i][i];
    for (const auto& e : eig)
        eigSum += e;
    BigFloat traceErr =
        (trace - eigSum).abs() / max(BigFloat::fromLong(1, 64), trace.abs());
    r.details["traceError"] = traceErr.str();
    ok = ok && traceErr < st.halfPrecTol();

    if (!ok)
        r.status = "fail";
    return r;
}

CheckResult checkBasis(CaseState& st) {
    CheckResult r{"basis", "pass", Json::object()};
    std::vector<Poly> polys;
    for (const auto& part : st.participants())
        polys.push_back(part.poly);
    polys.push_back(st.fam->poly(st.spec.bigN));
    bool nonzero = basisDeterminantNonzero(polys);
    r.details["size"] = polys.size();
    r.details["determinantNonzero"] = nonzero;
    // negative control: duplicating a row must kill the determinant
    std::vector<Poly> dup = polys;
    dup[0] = dup[1];
    bool controlZero = !basisDeterminantNonzero(dup);
    r.details["duplicateRowControlZero"] = controlZero;
    if (!nonzero || !controlZero)
        r.status = "fail";
    return r;
}

CheckResult checkQuadrature(CaseState& st) {
    CheckResult r{"quadrature", "pass", Json::object()};
    if (!st.spec.indexSpec().empty()) {
        r.status = "skip";
        r.details["note"] = "quadrature moment check applies to classical families only";
        return r;
    }
    auto rep = quadratureMomentCheck(st.spec.family, st.spec.bigN, st.zeros(), st.christoffel(),
                                     st.spec.precisionBits);
    r.details["maxRelError"] = rep.maxRelError.str();
    r.details["controlRelError"] = rep.controlRelError.str();
    r.details["moments"] = rep.momentStrings;
    BigFloat minControl = BigFloat::fromString("1e-10", 64);
    if (!(rep.maxRelError < st.orthTol()) || !(rep.controlRelError > minControl))
        r.status = "fail";
    return r;
}

CheckResult checkDiophantine(CaseState& st) {
    CheckResult r{"diophantine", "pass", Json::object()};
    const Family& f = st.spec.family;
    auto halfIntegral = [](const GaussianRational& q) {
        return q.isReal() && (q.re.get_den() == 1 || q.re.get_den() == 2);
    };
    bool applies = false;
    if (st.spec.mode == DeformMode::KreinAdler) {
        applies = f.kind == FamilyKind::Hermite || f.kind == FamilyKind::Laguerre ||
                  (f.kind == FamilyKind::Jacobi && halfIntegral(f.g) && halfIntegral(f.h));
    } else {
        applies = (f.kind == FamilyKind::Laguerre && halfIntegral(f.g)) ||
                  (f.kind == FamilyKind::Jacobi && halfIntegral(f.g) && halfIntegral(f.h));
    }
    if (!applies) {
        r.status = "skip";
        r.details["note"] = "outside the diophantine regimes of the corollary";
        return r;
    }
    bool exactOk = true;
    Json vals = Json::array();
    for (const auto& part : st.participants()) {
        vals.push_back(part.mEigenvalue.str());
        exactOk = exactOk && part.mEigenvalue.isInteger();
    }
    r.details["predictedEigenvalues"] = vals;
    r.details["allPredictedIntegral"] = exactOk;
    // numeric side: spectrum entries near integers
    BigFloat worst(64);
    mpfr_prec_t w = static_cast<mpfr_prec_t>(2 * st.spec.precisionBits);
    for (const auto& e : st.eigenvalues()) {
        BigFloat rounded(w);
        mpfr_round(rounded.raw(), e.re.raw());
        BigComplex nearest(rounded, BigFloat::fromLong(0, w));
        worst = max(worst, (e - nearest).abs());
    }
    r.details["maxDistanceToInteger"] = worst.str();
    if (!exactOk || !(worst < st.eigTol()))
        r.status = "fail";
    return r;
}

bool wantsCheck(const CaseSpec& spec, const std::string& name) {
    if (spec.checks.empty())
        return true;
    return std::find(spec.checks.begin(), spec.checks.end(), name) != spec.checks.end();
}

} // namespace

Report runCase(const CaseSpec& spec, const RunOptions& options) {
    for (const auto& c : spec.checks)
        if (std::find(allCheckNames().begin(), allCheckNames().end(), c) == allCheckNames().end())
            throw InvalidSpec("unknown check '" + c + "'");
    if (spec.bigN < 1)
        throw InvalidSpec("N must be positive");
    if (spec.precisionBits < 64)
        throw InvalidSpec("precisionBits must be at least 64");
    spec.indexSpec().validate();

    Report report;
    report.spec = spec;
    CaseState st;
    st.spec = spec;
    st.options = options;
    try {
        st.fam.emplace(spec.indexSpec());
    } catch (const Error& e) {
        st.constructionError = e.what();
    }

    using Runner = CheckResult (*)(CaseState&);
    const std::map<std::string, Runner> runners = {
        {"degrees", &checkDegrees},
        {"eigenIdentity", &checkEigenIdentities},
        {"basicIdentity", &checkBasicIdentities},
        {"identityInParameters", &checkIdentityInParameters},
        {"zeros", &checkZeros},
        {"matrices", &checkMatrices},
        {"orthogonality", &checkOrthogonality},
        {"eigenpairs", &checkEigenpairs},
        {"spectrum", &checkSpectrum},
        {"basis", &checkBasis},
        {"quadrature", &checkQuadrature},
        {"diophantine", &checkDiophantine},
    };

    for (const auto& name : allCheckNames()) {
        if (!wantsCheck(spec, name))
            continue;
        CheckResult result;
        auto t0 = std::chrono::steady_clock::now();
        if (!st.fam && name != "identityInParameters") {
            result = CheckResult{name, "fail",
                                 Json{{"note", "construction failed: " + st.constructionError}}};
        } else {
            try {
                result = runners.at(name)(st);
            } catch (const Error& e) {
                result = CheckResult{name, "fail", Json{{"note", e.what()}}};
            }
        }
        auto t1 = std::chrono::steady_clock::now();
        report.timingsMs.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        report.checks.push_back(std::move(result));
    }
    return report;
}

std::string emitReport(const Report& report, const std::string& format, bool withTimings) {
    if (format == "json") {
        Json j;
        j["schema"] = kReportSchema;
        j["version"] = kVersion;
        j["case"] = report.spec.toJson();
        Json checks = Json::array();
        for (size_t i = 0; i < report.checks.size(); ++i) {
            Json c;
            c["name"] = report.checks[i].name;
            c["status"] = report.checks[i].status;
            c["details"] = report.checks[i].details;
            if (withTimings && i < report.timingsMs.size())
                c["timeMs"] = report.timingsMs[i];
            checks.push_back(std::move(c));
        }
        j["checks"] = checks;
        int pass = 0, fail = 0, skip = 0;
        for (const auto& c : report.checks) {
            if (c.status == "pass")
                ++pass;
            else if (c.status == "fail")
                ++fail;
            else
                ++skip;
        }
        j["summary"] =
            Json{{"pass", pass}, {"fail", fail}, {"skip", skip}, {"failures", report.failures()}};
        return j.dump(2) + "\n";
    }
    if (format == "csv-summary") {
        std::ostringstream os;
        os << "check,status,detail\n";
        auto emitRow = [&](const CheckResult& c) {
            std::string note;
            if (c.details.contains("note"))
                note = c.details["note"].is_string() ? c.details["note"].get<std::string>() : "";
            for (auto& ch : note)
                if (ch == ',')
                    ch = ';';
            os << c.name << "," << c.status << "," << note << "\n";
        };
        for (const auto& c : report.checks)
            if (c.status == "fail")
                emitRow(c);
        for (const auto& c : report.checks)
            if (c.status != "fail")
                emitRow(c);
        return os.str();
    }
    throw InvalidSpec("unknown report format '" + format + "'");
}

} // namespace miortho
