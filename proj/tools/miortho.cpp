#include "miortho/acceptance.hpp"
#include "miortho/errors.hpp"
#include "miortho/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace miortho;

struct CaseFlags {
    std::string family = "L";
    std::string g, h;
    std::string mode;
    std::vector<int> dI, dII, dKA;
    int bigN = 1;
    long prec = 0;
    std::string path = "both";
    int orthLog10 = -50;
    int eigLog2 = -100;
    std::vector<std::string> checks;
};

void addCaseFlags(CLI::App* app, CaseFlags& f) {
    app->set_help_flag("--help", "print help"); // frees -h / --h for the Jacobi parameter
    app->add_option("--family", f.family, "family: H, L or J")->capture_default_str();
    app->add_option("--g", f.g, "parameter g as an exact string, e.g. 7/2 or 7/2+1i");
    app->add_option("--h", f.h, "parameter h (Jacobi)");
    app->add_option("--mode", f.mode, "MI or KA (default: KA when --dKA given)");
    app->add_option("--dI", f.dI, "type I multi-index degrees");
    app->add_option("--dII", f.dII, "type II multi-index degrees");
    app->add_option("--dKA", f.dKA, "Krein-Adler deleted levels");
    app->add_option("-n,--N", f.bigN, "degree N of the anchor polynomial")->capture_default_str();
    app->add_option("--prec", f.prec, "working precision in bits (default 256, env MIORTHO_PRECISION_BITS)");
    app->add_option("--path", f.path, "matrix build path: direct, closedForm, both")
        ->capture_default_str();
    app->add_option("--orth-tol-log10", f.orthLog10, "orthogonality tolerance exponent (base 10)")
        ->capture_default_str();
    app->add_option("--eig-tol-log2", f.eigLog2, "eigen residual tolerance exponent (base 2)")
        ->capture_default_str();
    app->add_option("--checks", f.checks, "subset of checks to run (default: all)");
}

long defaultPrecision() {
    if (const char* env = std::getenv("MIORTHO_PRECISION_BITS"))
        return std::atol(env);
    return 256;
}

CaseSpec toCaseSpec(const CaseFlags& f) {
    CaseSpec c;
    FamilyKind kind = parseFamilyKind(f.family);
    switch (kind) {
    case FamilyKind::Hermite: c.family = Family::hermite(); break;
    case FamilyKind::Laguerre:
        if (f.g.empty())
            throw InvalidSpec("Laguerre requires --g");
        c.family = Family::laguerre(GaussianRational::parse(f.g));
        break;
    case FamilyKind::Jacobi:
        if (f.g.empty() || f.h.empty())
            throw InvalidSpec("Jacobi requires --g and --h");
        c.family = Family::jacobi(GaussianRational::parse(f.g), GaussianRational::parse(f.h));
        break;
    }
    if (!f.mode.empty())
        c.mode = parseDeformMode(f.mode);
    else if (!f.dKA.empty() || kind == FamilyKind::Hermite)
        c.mode = DeformMode::KreinAdler;
    else
        c.mode = DeformMode::MultiIndexed;
    c.dI = f.dI;
    c.dII = f.dII;
    c.dKA = f.dKA;
    c.bigN = f.bigN;
    c.precisionBits = f.prec > 0 ? f.prec : defaultPrecision();
    c.buildPath = parseBuildPath(f.path);
    c.orthToleranceLog10 = f.orthLog10;
    c.eigenToleranceLog2 = f.eigLog2;
    c.checks = f.checks;
    return c;
}

void writeOut(const std::string& text, const std::string& outFile) {
    if (outFile.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(outFile, std::ios::binary);
    if (!os)
        throw miortho::Error("cannot open output file " + outFile);
    os << text;
}

Json polyToJson(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(c.str());
    return Json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

int cmdConstruct(const CaseFlags& flags, const std::string& outFile) {
    CaseSpec spec = toCaseSpec(flags);
    DeformedFamily fam(spec.indexSpec());
    Json j;
    j["case"] = spec.toJson();
    j["ell"] = fam.ellD();
    j["xi"] = polyToJson(fam.xi());
    Json pdn = Json::array();
    for (int n = 0; n <= spec.bigN; ++n)
        pdn.push_back(Json{{"n", n}, {"poly", polyToJson(deformedPoly(spec.indexSpec(), n))}});
    j["pdn"] = pdn;
    Json extras = Json::array();
    for (const auto& e : enumerateExtras(spec.indexSpec(), spec.bigN)) {
        Json ej;
        ej["label"] = e.label();
        ej["type"] = extraTypeName(e.type);
        ej["removed"] = e.removed;
        ej["added"] = e.added;
        ej["eigenvalue"] = predictedEigenvalue(spec.indexSpec(), e, spec.bigN).str();
        ej["mEigenvalue"] = predictedMatrixEigenvalue(spec.indexSpec(), e, spec.bigN).str();
        ej["coeffForward"] =
            predictedCoefficient(spec.indexSpec(), e, spec.bigN, BasicDirection::Forward).str();
        ej["coeffExchanged"] =
            predictedCoefficient(spec.indexSpec(), e, spec.bigN, BasicDirection::Exchanged).str();
        ej["poly"] = polyToJson(deformedPoly(e.derived, spec.bigN));
        extras.push_back(std::move(ej));
    }
    j["extras"] = extras;
    writeOut(j.dump(2) + "\n", outFile);
    return 0;
}

int cmdZeros(const CaseFlags& flags, const std::string& outFile) {
    CaseSpec spec = toCaseSpec(flags);
    DeformedFamily fam(spec.indexSpec());
    ZeroSet zs = computeZeroSet(fam.poly(spec.bigN), spec.family, spec.family.parametersReal(),
                                spec.precisionBits);
    Json j;
    j["case"] = spec.toJson();
    j["precisionBits"] = zs.precisionBits;
    j["residualBound"] = zs.residualBound.str();
    Json zeros = Json::array();
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
        zeros.push_back(std::move(z));
    }
    j["zeros"] = zeros;
    if (fam.xi().degree() >= 1) {
        Json xiz = Json::array();
        for (const auto& z : findRoots(fam.xi(), spec.precisionBits))
            xiz.push_back(Json{{"re", z.re.str()}, {"im", z.im.str()}});
        j["xiZeros"] = xiz;
    }
    j["warnings"] = zs.warnings;
    writeOut(j.dump(2) + "\n", outFile);
    return 0;
}

int runAndEmit(const CaseSpec& spec, const RunOptions& opts, const std::string& format,
               bool timings, const std::string& outFile) {
    Report report = runCase(spec, opts);
    writeOut(emitReport(report, format, timings), outFile);
    return report.allPass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for multi-indexed and Krein-Adler orthogonal polynomials"};
    app.require_subcommand(1);

    CaseFlags flags;
    std::string outFile;
    std::string format = "json";
    std::string caseFile;
    bool timings = false;
    bool dumpMatrices = false;

    auto* construct = app.add_subcommand("construct", "build Xi_D, P_{D,n} and the extras");
    addCaseFlags(construct, flags);
    construct->add_option("--out", outFile, "write output to a file");

    auto* zeros = app.add_subcommand("zeros", "compute and classify the zeros of P_{D,N}");
    addCaseFlags(zeros, flags);
    zeros->add_option("--out", outFile, "write output to a file");

    auto* verify = app.add_subcommand("verify", "run verification checks and emit a report");
    addCaseFlags(verify, flags);
    verify->add_option("--format", format, "json or csv-summary")->capture_default_str();
    verify->add_option("--out", outFile, "write report to a file");
    verify->add_flag("--timings", timings, "include per-check timings (non-reproducible)");
    verify->add_flag("--dump-matrices", dumpMatrices, "include M and M~ entries in the report");

    auto* report = app.add_subcommand("report", "run a stored case-spec file and emit its report");
    report->add_option("--case", caseFile, "case spec JSON file")->required();
    report->add_option("--format", format, "json or csv-summary")->capture_default_str();
    report->add_option("--out", outFile, "write report to a file");
    report->add_flag("--timings", timings, "include per-check timings (non-reproducible)");
    report->add_flag("--dump-matrices", dumpMatrices, "include M and M~ entries in the report");

    auto* suite = app.add_subcommand("suite", "run the bundled acceptance matrix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed())
            return cmdConstruct(flags, outFile);
        if (zeros->parsed())
            return cmdZeros(flags, outFile);
        if (verify->parsed())
            return runAndEmit(toCaseSpec(flags), RunOptions{dumpMatrices}, format, timings,
                              outFile);
        if (report->parsed()) {
            std::ifstream is(caseFile, std::ios::binary);
            if (!is)
                throw miortho::Error("cannot open case file " + caseFile);
            std::string text((std::istreambuf_iterator<char>(is)),
                             std::istreambuf_iterator<char>());
            return runAndEmit(miortho::CaseSpec::parse(text), RunOptions{dumpMatrices}, format,
                              timings, outFile);
        }
        if (suite->parsed())
            return miortho::runAcceptanceSuite(std::cout) ? 0 : 1;
    } catch (const miortho::InvalidSpec& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
