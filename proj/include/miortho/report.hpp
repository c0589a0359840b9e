#pragma once

#include "miortho/spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace miortho {

inline constexpr const char* kVersion = "miortho 0.1.0";
inline constexpr const char* kReportSchema = "miortho-report-v1";

using Json = nlohmann::ordered_json;

// Names of the individual checks, in dependency order.
const std::vector<std::string>& allCheckNames();

struct CaseSpec {
    Family family;
    DeformMode mode = DeformMode::MultiIndexed;
    std::vector<int> dI, dII, dKA;
    int bigN = 1;
    long precisionBits = 256;
    BuildPath buildPath = BuildPath::Both;
    int orthToleranceLog10 = -50;
    int eigenToleranceLog2 = -100;
    std::vector<std::string> checks; // empty: every applicable check

    MultiIndexSpec indexSpec() const;
    Json toJson() const;
    std::string serialize() const; // canonical JSON, round-trippable
    static CaseSpec fromJson(const Json& j);
    static CaseSpec parse(const std::string& text);
    bool operator==(const CaseSpec& o) const { return serialize() == o.serialize(); }
};

struct CheckResult {
    std::string name;
    std::string status; // "pass" | "fail" | "skip"
    Json details;
};

struct Report {
    CaseSpec spec;
    std::vector<CheckResult> checks;
    std::vector<double> timingsMs; // parallel to checks; excluded from canonical output

    bool allPass() const;
    std::vector<std::string> failures() const;
};

struct RunOptions {
    bool dumpMatrices = false;
};

Report runCase(const CaseSpec& spec, const RunOptions& options = {});

// format: "json" (schema-versioned, deterministic) or "csv-summary" (one row
// per check, failures first).  Timings are opt-in to keep reports
// byte-reproducible.
std::string emitReport(const Report& report, const std::string& format,
                       bool withTimings = false);

} // namespace miortho
