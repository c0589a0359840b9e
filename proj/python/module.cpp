#include "miortho/acceptance.hpp"
#include "miortho/errors.hpp"
#include "miortho/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace miortho;

namespace {

Family makeFamily(const std::string& kind, const std::string& g, const std::string& h) {
    FamilyKind k = parseFamilyKind(kind);
    switch (k) {
    case FamilyKind::Hermite: return Family::hermite();
    case FamilyKind::Laguerre: return Family::laguerre(GaussianRational::parse(g));
    case FamilyKind::Jacobi:
        return Family::jacobi(GaussianRational::parse(g), GaussianRational::parse(h));
    }
    throw InvalidSpec("bad family");
}

MultiIndexSpec makeSpec(const std::string& kind, const std::string& g, const std::string& h,
                        const std::string& mode, const std::vector<int>& dI,
                        const std::vector<int>& dII, const std::vector<int>& dKA) {
    MultiIndexSpec s;
    s.family = makeFamily(kind, g, h);
    s.mode = parseDeformMode(mode);
    s.dI = dI;
    s.dII = dII;
    s.dKA = dKA;
    s.validate();
    return s;
}

std::vector<std::string> polyCoeffs(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(c.str());
    return out;
}

} // namespace

PYBIND11_MODULE(miortho, m) {
    m.doc() = "multi-indexed / Krein-Adler orthogonal polynomial verification laboratory";

    m.def("version", [] { return std::string(kVersion); });

    m.def(
        "classical_poly",
        [](const std::string& kind, const std::string& g, const std::string& h, int n) {
            return polyCoeffs(classicalPoly(makeFamily(kind, g, h), n));
        },
        py::arg("kind"), py::arg("g") = "", py::arg("h") = "", py::arg("n") = 0,
        "exact coefficients (constant term first) of H_n / L_n^{(g-1/2)} / P_n^{(g-1/2,h-1/2)}");

    m.def(
        "energy",
        [](const std::string& kind, const std::string& g, const std::string& h, int n) {
            return classicalEnergy(makeFamily(kind, g, h), n).str();
        },
        py::arg("kind"), py::arg("g") = "", py::arg("h") = "", py::arg("n") = 0);

    m.def(
        "virtual_energy",
        [](const std::string& kind, const std::string& g, const std::string& h,
           const std::string& type, int v) {
            return virtualEnergy(makeFamily(kind, g, h), type == "I" ? SeedType::I : SeedType::II,
                                 v)
                .str();
        },
        py::arg("kind"), py::arg("g"), py::arg("h"), py::arg("type"), py::arg("v"));

    m.def(
        "ell",
        [](const std::string& kind, const std::string& g, const std::string& h,
           const std::string& mode, const std::vector<int>& dI, const std::vector<int>& dII,
           const std::vector<int>& dKA) { return ell(makeSpec(kind, g, h, mode, dI, dII, dKA)); },
        py::arg("kind"), py::arg("g") = "", py::arg("h") = "", py::arg("mode") = "MI",
        py::arg("dI") = std::vector<int>{}, py::arg("dII") = std::vector<int>{},
        py::arg("dKA") = std::vector<int>{});

    m.def(
        "denominator_poly",
        [](const std::string& kind, const std::string& g, const std::string& h,
           const std::string& mode, const std::vector<int>& dI, const std::vector<int>& dII,
           const std::vector<int>& dKA) {
            return polyCoeffs(denominatorPoly(makeSpec(kind, g, h, mode, dI, dII, dKA)));
        },
        py::arg("kind"), py::arg("g") = "", py::arg("h") = "", py::arg("mode") = "MI",
        py::arg("dI") = std::vector<int>{}, py::arg("dII") = std::vector<int>{},
        py::arg("dKA") = std::vector<int>{});

    m.def(
        "deformed_poly",
        [](const std::string& kind, const std::string& g, const std::string& h,
           const std::string& mode, const std::vector<int>& dI, const std::vector<int>& dII,
           const std::vector<int>& dKA, int n) {
            return polyCoeffs(deformedPoly(makeSpec(kind, g, h, mode, dI, dII, dKA), n));
        },
        py::arg("kind"), py::arg("g") = "", py::arg("h") = "", py::arg("mode") = "MI",
        py::arg("dI") = std::vector<int>{}, py::arg("dII") = std::vector<int>{},
        py::arg("dKA") = std::vector<int>{}, py::arg("n") = 0);

    m.def(
        "enumerate_extras",
        [](const std::string& kind, const std::string& g, const std::string& h,
           const std::string& mode, const std::vector<int>& dI, const std::vector<int>& dII,
           const std::vector<int>& dKA, int bigN) {
            MultiIndexSpec spec = makeSpec(kind, g, h, mode, dI, dII, dKA);
            py::list out;
            for (const auto& e : enumerateExtras(spec, bigN)) {
                py::dict d;
                d["label"] = e.label();
                d["type"] = extraTypeName(e.type);
                d["removed"] = e.removed;
                d["added"] = e.added;
                d["eigenvalue"] = predictedEigenvalue(spec, e, bigN).str();
                d["m_eigenvalue"] = predictedMatrixEigenvalue(spec, e, bigN).str();
                d["coeff_forward"] =
                    predictedCoefficient(spec, e, bigN, BasicDirection::Forward).str();
                d["coeff_exchanged"] =
                    predictedCoefficient(spec, e, bigN, BasicDirection::Exchanged).str();
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("kind"), py::arg("g") = "", py::arg("h") = "", py::arg("mode") = "MI",
        py::arg("dI") = std::vector<int>{}, py::arg("dII") = std::vector<int>{},
        py::arg("dKA") = std::vector<int>{}, py::arg("N") = 1);

    m.def(
        "find_roots",
        [](const std::vector<std::string>& coeffs, long prec) {
            std::vector<GaussianRational> c;
            c.reserve(coeffs.size());
            for (const auto& s : coeffs)
                c.push_back(GaussianRational::parse(s));
            py::list out;
            for (const auto& z : findRoots(Poly(std::move(c)), prec))
                out.append(py::make_tuple(z.re.str(), z.im.str()));
            return out;
        },
        py::arg("coeffs"), py::arg("precision_bits") = 256,
        "roots of the polynomial with the given exact coefficients (constant term first)");

    m.def(
        "run_case",
        [](const std::string& caseJson, const std::string& format) {
            Report report = runCase(CaseSpec::parse(caseJson));
            return py::make_tuple(report.allPass(), emitReport(report, format));
        },
        py::arg("case_json"), py::arg("format") = "json",
        "run a case spec (JSON string); returns (all_pass, report)");

    m.def("acceptance_suite", [] {
        std::ostringstream os;
        bool ok = runAcceptanceSuite(os);
        return py::make_tuple(ok, os.str());
    });
}
