// Relation sets with pairwise-coprime leading monomials and multivariate
// division. Coprime leading terms make the relations a confluent rewriting
// system, so the remainder is a well-defined normal form: idempotent, linear
// over the rationals, and zero exactly on the ideal.
#pragma once

#include <vector>

#include "workbench/polynomial.hpp"

namespace workbench {

struct Relation {
    SparsePolynomial poly;
    Monomial leading;       // the designated T_i^{l_i} monomial
    Rational leading_coeff;
};

class RelationSet {
public:
    RelationSet() = default;

    // Designates each polynomial's maximal term as leading and checks the
    // supports are pairwise disjoint. Throws InvalidData otherwise.
    static RelationSet from_polynomials(const std::vector<SparsePolynomial>& polys);

    bool empty() const { return rels_.empty(); }
    std::size_t size() const { return rels_.size(); }
    const std::vector<Relation>& relations() const { return rels_; }
    const Relation& at(std::size_t i) const { return rels_[i]; }

private:
    std::vector<Relation> rels_;
};

// Remainder of multivariate division of p by the relation set under the block
// order; no monomial of the result is divisible by any leading monomial.
SparsePolynomial normal_form(const SparsePolynomial& p, const RelationSet& rels);

}  // namespace workbench
