#include "workbench/relations.hpp"

#include "workbench/errors.hpp"

namespace workbench {

RelationSet RelationSet::from_polynomials(const std::vector<SparsePolynomial>& polys) {
    RelationSet set;
    for (const auto& p : polys) {
        if (p.is_zero()) throw InvalidDataError("zero polynomial in relation set");
        const auto& [lm, lc] = p.leading_term();
        if (lm.is_unit()) throw InvalidDataError("constant relation");
        set.rels_.push_back(Relation{p, lm, lc});
    }
    for (std::size_t i = 0; i < set.rels_.size(); ++i)
        for (std::size_t j = i + 1; j < set.rels_.size(); ++j)
            if (!set.rels_[i].leading.coprime_with(set.rels_[j].leading))
                throw InvalidDataError("leading monomials of relations share a variable");
    return set;
}

SparsePolynomial normal_form(const SparsePolynomial& p, const RelationSet& rels) {
    SparsePolynomial remainder;
    SparsePolynomial work = p;
    while (!work.is_zero()) {
        const auto& [mono, coeff] = work.leading_term();
        const Relation* hit = nullptr;
        for (const auto& rel : rels.relations()) {
            if (rel.leading.divides(mono)) {
                hit = &rel;
                break;
            }
        }
        if (hit == nullptr) {
            remainder.add_term(mono, coeff);
            work.add_term(mono, -coeff);
        } else {
            // work -= (coeff / lc) * (mono / leading) * g
            work -= hit->poly.times_term(hit->leading.quotient_of(mono), coeff / hit->leading_coeff);
        }
    }
    return remainder;
}

}  // namespace workbench
