// Combinatorial rigidity criterion for X(A) and Y(A). A variety is not rigid
// iff one of the clauses holds; clauses are checked in the fixed order
// m-nonzero (X only), type-1 clause 2, type-2 clause 3a, type-2 clause 3b,
// and the first hit is reported with the lexicographically smallest witness.
#pragma once

#include <map>
#include <string>

#include "workbench/trinomial.hpp"

namespace workbench {

enum class RigidityTarget { X, Y };

enum class RigidityClause { None, MNonzero, Type1Clause2, Type2Clause3a, Type2Clause3b };

std::string to_string(RigidityClause clause);

struct RigidityVerdict {
    bool rigid = true;
    RigidityClause clause = RigidityClause::None;
    // Witness indices; unused slots stay -1.
    int a = -1, b = -1, c = -1;
    std::map<int, int> j;  // block -> position with exponent 1
    std::map<int, int> v;  // block -> position with exponent exactly 2 (clause 3b)
};

RigidityVerdict rigidity_verdict(const TrinomialData& data, RigidityTarget target);

// Re-evaluates the quoted clause against the stored witness.
bool recheck_witness(const TrinomialData& data, RigidityTarget target, const RigidityVerdict& verdict);

}  // namespace workbench
