#pragma once

#include "miortho/classical.hpp"

#include <string>
#include <vector>

namespace miortho {

enum class DeformMode { MultiIndexed, KreinAdler };

std::string deformModeName(DeformMode m);
DeformMode parseDeformMode(const std::string& s);

// Multi-index D: type I/II degree lists (multi-indexed mode) or a single
// list of deleted eigenlevels (Krein-Adler mode), plus the family.
struct MultiIndexSpec {
    DeformMode mode = DeformMode::MultiIndexed;
    std::vector<int> dI;
    std::vector<int> dII;
    std::vector<int> dKA;
    Family family;

    int mCount() const { return static_cast<int>(dI.size()); }
    int nCount() const { return static_cast<int>(dII.size()); }
    bool empty() const {
        return mode == DeformMode::MultiIndexed ? (dI.empty() && dII.empty()) : dKA.empty();
    }
    // throws InvalidSpec on malformed lists or violated Krein-Adler conditions
    void validate() const;
};

// Krein-Adler conditions: prod_j (m - d_j) >= 0 for all m >= 0
bool kreinAdlerConditionsHold(const std::vector<int>& d);

// degree offset: l_D (multi-indexed) or l'_D (Krein-Adler)
int ell(const MultiIndexSpec& spec);

enum class ExtraType { I, II, III, KA };
std::string extraTypeName(ExtraType t);

struct ExtraIndex {
    MultiIndexSpec derived;   // D'
    ExtraType type = ExtraType::I;
    std::vector<int> removed; // D \ D' (one degree; two for type III)
    std::vector<int> added;   // D' \ D (one degree; none for type III)

    std::string label() const;
};

// All extra lower-degree multi-indices for the given D (canonical order:
// type I by (j, epsilon), then type II, then type III by (j, k)).
std::vector<ExtraIndex> enumerateExtras(const MultiIndexSpec& spec, int bigN);

enum class BasicDirection { Forward, Exchanged };

// ~E(D') of Theorem 5 (and its Krein-Adler analogue)
GaussianRational predictedEigenvalue(const MultiIndexSpec& spec, const ExtraIndex& extra, int bigN);
// matrix-M eigenvalue E(N) - ~E(D')
GaussianRational predictedMatrixEigenvalue(const MultiIndexSpec& spec, const ExtraIndex& extra,
                                           int bigN);
// E'(D') (forward, Theorem 5) or E''(D) (exchanged, Theorem 6)
GaussianRational predictedCoefficient(const MultiIndexSpec& spec, const ExtraIndex& extra, int bigN,
                                      BasicDirection direction);

} // namespace miortho
