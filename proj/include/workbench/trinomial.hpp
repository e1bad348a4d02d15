// Defining data of a trinomial variety and the presented coordinate algebra.
//
// Type 1 (q = 1): blocks 1..r, constants a_1..a_r pairwise distinct,
//   g_i = T_i^{l_i} - T_{i+1}^{l_{i+1}} - (a_{i+1} - a_i),  i = 1..r-1.
// Type 2 (q = 0): blocks 0..r, a 2 x (r+1) constant matrix with every two
//   columns linearly independent,
//   g_i = det [ T_i^{l_i}  T_{i+1}^{l_{i+1}}  T_{i+2}^{l_{i+2}} ; row1 ; row2 ],
//   i = 0..r-2.
// S_1..S_m are free generators appearing in no relation.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "workbench/parser.hpp"
#include "workbench/relations.hpp"

namespace workbench {

struct TrinomialData {
    int type = 1;  // 1 or 2
    int m = 0;
    std::vector<std::vector<int>> exponents;  // exponents[i] = block first_block()+i
    std::vector<Rational> constants1;         // type 1: a_1..a_r
    std::array<std::vector<Rational>, 2> constants2;  // type 2 rows, length r+1

    int first_block() const { return type == 1 ? 1 : 0; }
    int block_count() const { return static_cast<int>(exponents.size()); }
    int r() const { return type == 1 ? block_count() : block_count() - 1; }
    int last_block() const { return first_block() + block_count() - 1; }

    const std::vector<int>& block_exponents(int block) const {
        return exponents[static_cast<std::size_t>(block - first_block())];
    }
    int block_size(int block) const {
        return static_cast<int>(block_exponents(block).size());
    }
    int n() const {
        int total = 0;
        for (const auto& l : exponents) total += static_cast<int>(l.size());
        return total;
    }

    Monomial block_monomial(int block) const;  // T_i^{l_i}

    std::vector<VarId> t_variables() const;
    std::vector<VarId> s_variables() const;
    std::vector<VarId> all_variables() const;  // T then S, block order

    VariableBounds bounds() const;
};

struct Violation {
    std::string path;  // JSON-pointer style, e.g. "/A/2"
    std::string code;  // DuplicateConstant, DependentColumns, ...
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Never throws; all constraint failures are reported with field paths.
ValidationReport validate(const TrinomialData& data);

// m + n - r + 1
int dimension(const TrinomialData& data);

// Same blocks and constants with m = 0 (the algebra of Y(A)).
TrinomialData strip_free_part(TrinomialData data);

struct PresentedAlgebra {
    enum class Origin { Trinomial, Custom };

    std::vector<VarId> variables;
    RelationSet rels;
    Origin origin = Origin::Custom;
    std::optional<TrinomialData> data;  // set for Origin::Trinomial

    bool contains_variable(VarId v) const;
    // Reduction with a universe check: every non-parameter variable of p must
    // be a declared generator.
    SparsePolynomial normal_form(const SparsePolynomial& p) const;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

// The r-1 trinomial relations of the data; requires validate(data).ok.
AlgebraPtr relations(const TrinomialData& data);

// Single-relation custom presentation (hypersurface case).
AlgebraPtr custom_algebra(std::vector<VarId> variables, const SparsePolynomial& relation);

}  // namespace workbench
