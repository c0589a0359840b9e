#include "miortho/mindex.hpp"

#include "miortho/errors.hpp"

#include <algorithm>
#include <sstream>

namespace miortho {

std::string deformModeName(DeformMode m) {
    return m == DeformMode::MultiIndexed ? "MI" : "KA";
}

DeformMode parseDeformMode(const std::string& s) {
    if (s == "MI" || s == "multi-indexed" || s == "MultiIndexed")
        return DeformMode::MultiIndexed;
    if (s == "KA" || s == "krein-adler" || s == "KreinAdler")
        return DeformMode::KreinAdler;
    throw InvalidSpec("unknown mode '" + s + "'");
}

namespace {

void checkStrictlyIncreasing(const std::vector<int>& d, const char* name) {
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1)
            throw InvalidSpec(std::string(name) + " entries must be positive");
        if (i > 0 && d[i] <= d[i - 1])
            throw InvalidSpec(std::string(name) + " must be strictly increasing");
    }
}

} // namespace

bool kreinAdlerConditionsHold(const std::vector<int>& d) {
    if (d.empty())
        return true;
    // beyond max(d) every factor is positive
    for (int m = 0; m <= d.back(); ++m) {
        long sign = 1;
        for (int dj : d) {
            if (m == dj) {
                sign = 0;
                break;
            }
            if (m < dj)
                sign = -sign;
        }
        if (sign < 0)
            return false;
    }
    return true;
}

void MultiIndexSpec::validate() const {
    if (mode == DeformMode::MultiIndexed) {
        if (!dKA.empty())
            throw InvalidSpec("dKA set in multi-indexed mode");
        checkStrictlyIncreasing(dI, "dI");
        checkStrictlyIncreasing(dII, "dII");
        if (family.kind == FamilyKind::Hermite && !(dI.empty() && dII.empty()))
            throw InvalidSpec("Hermite has no virtual states; use Krein-Adler mode");
    } else {
        if (!dI.empty() || !dII.empty())
            throw InvalidSpec("dI/dII set in Krein-Adler mode");
        checkStrictlyIncreasing(dKA, "dKA");
        if (!kreinAdlerConditionsHold(dKA))
            throw InvalidSpec("Krein-Adler conditions violated");
    }
}

int ell(const MultiIndexSpec& spec) {
    auto sum = [](const std::vector<int>& d) {
        int s = 0;
        for (int x : d)
            s += x;
        return s;
    };
    if (spec.mode == DeformMode::MultiIndexed) {
        int m = spec.mCount(), n = spec.nCount();
        int lI = sum(spec.dI) - m * (m - 1) / 2;
        int lII = sum(spec.dII) - n * (n - 1) / 2;
        return lI + lII + m * n;
    }
    int m = static_cast<int>(spec.dKA.size());
    return sum(spec.dKA) - m * (m + 1) / 2;
}

std::string extraTypeName(ExtraType t) {
    switch (t) {
    case ExtraType::I: return "I";
    case ExtraType::II: return "II";
    case ExtraType::III: return "III";
    case ExtraType::KA: return "KA";
    }
    return "?";
}

std::string ExtraIndex::label() const {
    std::ostringstream os;
    os << extraTypeName(type) << "(";
    for (size_t i = 0; i < removed.size(); ++i)
        os << (i ? "," : "") << removed[i];
    os << "->";
    for (size_t i = 0; i < added.size(); ++i)
        os << (i ? "," : "") << added[i];
    os << ")";
    return os.str();
}

namespace {

// sorted copy of d with d[j] replaced by eps
std::vector<int> replaceAt(const std::vector<int>& d, size_t j, int eps) {
    std::vector<int> out = d;
    out[j] = eps;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> removeAt(const std::vector<int>& d, size_t j) {
    std::vector<int> out = d;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
}

// E_j = { eps in {0..max(d)} \ d : eps < d[j] }, ascending
std::vector<int> lowerEmptyDegrees(const std::vector<int>& d, size_t j) {
    std::vector<int> out;
    for (int eps = 0; eps < d[j]; ++eps)
        if (std::find(d.begin(), d.end(), eps) == d.end())
            out.push_back(eps);
    return out;
}

} // namespace

std::vector<ExtraIndex> enumerateExtras(const MultiIndexSpec& spec, int bigN) {
    spec.validate();
    if (bigN < 1)
        throw InvalidSpec("N must be positive");
    std::vector<ExtraIndex> extras;
    if (spec.mode == DeformMode::MultiIndexed) {
        for (size_t j = 0; j < spec.dI.size(); ++j) {
            for (int eps : lowerEmptyDegrees(spec.dI, j)) {
                ExtraIndex e;
                e.type = ExtraType::I;
                e.derived = spec;
                e.derived.dI = replaceAt(spec.dI, j, eps);
                e.removed = {spec.dI[j]};
                e.added = {eps};
                extras.push_back(std::move(e));
            }
        }
        for (size_t j = 0; j < spec.dII.size(); ++j) {
            for (int eps : lowerEmptyDegrees(spec.dII, j)) {
                ExtraIndex e;
                e.type = ExtraType::II;
                e.derived = spec;
                e.derived.dII = replaceAt(spec.dII, j, eps);
                e.removed = {spec.dII[j]};
                e.added = {eps};
                extras.push_back(std::move(e));
            }
        }
        for (size_t j = 0; j < spec.dI.size(); ++j) {
            for (size_t k = 0; k < spec.dII.size(); ++k) {
                ExtraIndex e;
                e.type = ExtraType::III;
                e.derived = spec;
                e.derived.dI = removeAt(spec.dI, j);
                e.derived.dII = removeAt(spec.dII, k);
                e.removed = {spec.dI[j], spec.dII[k]};
                extras.push_back(std::move(e));
            }
        }
    } else {
        if (!spec.dKA.empty()) {
            if (std::find(spec.dKA.begin(), spec.dKA.end(), bigN) != spec.dKA.end() ||
                bigN <= spec.dKA.back())
                throw UnsupportedRange("Krein-Adler extras require N > max(dKA)");
        }
        for (size_t j = 0; j < spec.dKA.size(); ++j) {
            for (int eps : lowerEmptyDegrees(spec.dKA, j)) {
                ExtraIndex e;
                e.type = ExtraType::KA;
                e.derived = spec;
                e.derived.dKA = replaceAt(spec.dKA, j, eps);
                e.removed = {spec.dKA[j]};
                e.added = {eps};
                extras.push_back(std::move(e));
            }
        }
    }
    return extras;
}

namespace {

void checkExtraMatches(const MultiIndexSpec& spec, const ExtraIndex& extra) {
    // complements must reconstruct D per the removal/addition bookkeeping
    auto complement = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        for (int x : a)
            if (std::find(b.begin(), b.end(), x) == b.end())
                out.push_back(x);
        return out;
    };
    std::vector<int> removed;
    std::vector<int> added;
    if (spec.mode == DeformMode::MultiIndexed) {
        auto remI = complement(spec.dI, extra.derived.dI);
        auto remII = complement(spec.dII, extra.derived.dII);
        auto addI = complement(extra.derived.dI, spec.dI);
        auto addII = complement(extra.derived.dII, spec.dII);
        removed = remI;
        removed.insert(removed.end(), remII.begin(), remII.end());
        added = addI;
        added.insert(added.end(), addII.begin(), addII.end());
        bool shapeOk = false;
        switch (extra.type) {
        case ExtraType::I: shapeOk = remI.size() == 1 && remII.empty() && addI.size() == 1 && addII.empty(); break;
        case ExtraType::II: shapeOk = remII.size() == 1 && remI.empty() && addII.size() == 1 && addI.empty(); break;
        case ExtraType::III: shapeOk = remI.size() == 1 && remII.size() == 1 && added.empty(); break;
        default: shapeOk = false;
        }
        if (!shapeOk)
            throw MismatchedExtra("extra index does not match its multi-index " + extra.label());
    } else {
        removed = complement(spec.dKA, extra.derived.dKA);
        added = complement(extra.derived.dKA, spec.dKA);
        if (extra.type != ExtraType::KA || removed.size() != 1 || added.size() != 1)
            throw MismatchedExtra("extra index does not match its multi-index " + extra.label());
    }
    if (removed != extra.removed || added != extra.added)
        throw MismatchedExtra("complement bookkeeping mismatch for " + extra.label());
}

} // namespace

GaussianRational predictedEigenvalue(const MultiIndexSpec& spec, const ExtraIndex& extra,
                                     int bigN) {
    checkExtraMatches(spec, extra);
    const Family& fam = spec.family;
    GaussianRational eN = classicalEnergy(fam, bigN);
    switch (extra.type) {
    case ExtraType::I:
        return virtualEnergy(fam, SeedType::I, extra.removed[0]) +
               virtualEnergy(fam, SeedType::I, extra.added[0]) - eN;
    case ExtraType::II:
        return virtualEnergy(fam, SeedType::II, extra.removed[0]) +
               virtualEnergy(fam, SeedType::II, extra.added[0]) - eN;
    case ExtraType::III:
        return virtualEnergy(fam, SeedType::I, extra.removed[0]) +
               virtualEnergy(fam, SeedType::II, extra.removed[1]) - eN;
    case ExtraType::KA:
        return classicalEnergy(fam, extra.removed[0]) + classicalEnergy(fam, extra.added[0]) - eN;
    }
    throw Error("unreachable");
}

GaussianRational predictedMatrixEigenvalue(const MultiIndexSpec& spec, const ExtraIndex& extra,
                                           int bigN) {
    return classicalEnergy(spec.family, bigN) - predictedEigenvalue(spec, extra, bigN);
}

GaussianRational predictedCoefficient(const MultiIndexSpec& spec, const ExtraIndex& extra,
                                      int bigN, BasicDirection direction) {
    checkExtraMatches(spec, extra);
    const Family& fam = spec.family;
    GaussianRational eN = classicalEnergy(fam, bigN);
    GaussianRational two(2);
    if (extra.type == ExtraType::KA) {
        int d = direction == BasicDirection::Forward ? extra.added[0] : extra.removed[0];
        return two * (eN - classicalEnergy(fam, d));
    }
    if (extra.type == ExtraType::I || extra.type == ExtraType::II) {
        SeedType st = extra.type == ExtraType::I ? SeedType::I : SeedType::II;
        int d = direction == BasicDirection::Forward ? extra.added[0] : extra.removed[0];
        return two * (eN - virtualEnergy(fam, st, d));
    }
    // type III
    if (direction == BasicDirection::Forward) {
        if (fam.kind == FamilyKind::Laguerre)
            return GaussianRational(-8);
        if (fam.kind == FamilyKind::Jacobi)
            return GaussianRational(-32);
        throw UnsupportedFamily("type III extras exist only for Laguerre/Jacobi");
    }
    GaussianRational gamma = fam.kind == FamilyKind::Laguerre ? GaussianRational(2)
                                                              : GaussianRational(8);
    GaussianRational a = eN - virtualEnergy(fam, SeedType::I, extra.removed[0]);
    GaussianRational b = eN - virtualEnergy(fam, SeedType::II, extra.removed[1]);
    return -(a * b) / gamma;
}

} // namespace miortho
