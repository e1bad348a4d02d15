#include "workbench/derivation.hpp"

#include <sstream>

#include "workbench/errors.hpp"

namespace workbench {

Derivation::Derivation(AlgebraPtr base, std::map<VarId, SparsePolynomial> images)
    : base_(std::move(base)), images_(std::move(images)) {
    for (const auto& [v, img] : images_) {
        if (v.is_param() || !base_->contains_variable(v))
            throw InvalidDataError("derivation image assigned to non-generator " + v.name());
        for (VarId w : img.variables())
            if (w.is_param() || !base_->contains_variable(w))
                throw InvalidDataError("derivation image of " + v.name() + " mentions " + w.name());
    }
    // drop structural zeros
    for (auto it = images_.begin(); it != images_.end();)
        it = it->second.is_zero() ? images_.erase(it) : std::next(it);
}

bool Derivation::is_zero() const {
    for (const auto& [v, img] : images_)
        if (!base_->normal_form(img).is_zero()) return false;
    return true;
}

std::string Derivation::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, img] : images_) {
        if (!first) out << ", ";
        first = false;
        out << "d(" << v.name() << ")=" << img.str();
    }
    return first ? "0" : out.str();
}

IdealCheck check_preserves_ideal(const Derivation& d) {
    IdealCheck check;
    check.preserved = true;
    for (const auto& rel : d.base().rels.relations()) {
        SparsePolynomial residue = d.apply_reduced(rel.poly);
        if (!residue.is_zero()) check.preserved = false;
        check.residues.push_back(std::move(residue));
    }
    return check;
}

int default_nilpotency_cap(const Derivation& d) {
    int dim = static_cast<int>(d.base().variables.size()) -
              static_cast<int>(d.base().rels.size());
    int max_img = 1, max_rel = 1;
    for (const auto& [v, img] : d.images()) max_img = std::max(max_img, img.total_degree());
    for (const auto& rel : d.base().rels.relations())
        max_rel = std::max(max_rel, rel.poly.total_degree());
    return 2 + std::max(1, dim) * max_img * max_rel;
}

NilpotencyReport check_locally_nilpotent(const Derivation& d, int cap) {
    IdealCheck ideal = check_preserves_ideal(d);
    if (!ideal.preserved)
        throw IdealNotPreservedError("derivation does not preserve the relation ideal");

    NilpotencyReport report;
    report.cap = cap > 0 ? cap : default_nilpotency_cap(d);
    report.verdict = NilpotencyReport::Verdict::LocallyNilpotent;
    for (VarId v : d.base().variables) {
        SparsePolynomial p = d.apply_reduced(SparsePolynomial::variable(v));
        int n = 1;
        while (!p.is_zero() && n <= report.cap) {
            p = d.apply_reduced(p);
            ++n;
        }
        if (p.is_zero()) {
            report.nil_degree[v] = n;
        } else {
            report.nil_degree[v] = -1;
            report.verdict = NilpotencyReport::Verdict::NotNilpotentWithinCap;
        }
    }
    return report;
}

DerivationHomogeneity homogeneity_degree(const Derivation& d, const VariableGrading& w) {
    DerivationHomogeneity result;
    bool have_degree = false;
    for (VarId v : d.base().variables) {
        SparsePolynomial img = d.base().normal_form(d.image(v));
        if (img.is_zero()) continue;
        auto h = w.degree_of(img);
        if (!h.homogeneous) {
            result.homogeneous = false;
            result.offender = v;
            result.reason = "image of " + v.name() + " mixes degrees " +
                            w.degree_of_monomial(h.offender_a).str() + " and " +
                            w.degree_of_monomial(h.offender_b).str();
            return result;
        }
        Degree shift = w.subtract(h.degree, w.degree(v));
        if (!have_degree) {
            result.degree = std::move(shift);
            have_degree = true;
        } else if (!(shift == result.degree)) {
            result.homogeneous = false;
            result.offender = v;
            result.reason = "image of " + v.name() + " shifts degree by " + shift.str() +
                            ", expected " + result.degree.str();
            return result;
        }
    }
    if (!have_degree) throw ZeroDerivationError("homogeneity degree of the zero derivation");
    result.homogeneous = true;
    return result;
}

DerivationType classify_type(const Derivation& d) {
    if (d.base().origin != PresentedAlgebra::Origin::Trinomial)
        throw MissingInvariantError("custom presentation requires a rational invariant");
    for (VarId v : d.base().variables)
        if (v.is_T() && !d.base().normal_form(d.image(v)).is_zero())
            return DerivationType::Horizontal;
    return DerivationType::Vertical;
}

InvariantDerivative classify_type(const Derivation& d, const RationalFunction& invariant) {
    if (d.base().normal_form(invariant.den).is_zero())
        throw InvalidDataError("invariant denominator vanishes on the variety");
    // quotient rule: delta(num/den) = (den*delta(num) - num*delta(den)) / den^2
    SparsePolynomial numerator = d.base().normal_form(
        invariant.den * d.apply(invariant.num) - invariant.num * d.apply(invariant.den));
    InvariantDerivative out;
    out.derivative = RationalFunction{numerator, invariant.den * invariant.den};
    out.type = numerator.is_zero() ? DerivationType::Vertical : DerivationType::Horizontal;
    return out;
}

AutomorphismMap::AutomorphismMap(AlgebraPtr base, std::map<VarId, SparsePolynomial> images)
    : base_(std::move(base)), images_(std::move(images)) {}

SparsePolynomial AutomorphismMap::apply(const SparsePolynomial& p) const {
    return normal_form(substitute(p, images_), base_->rels);
}

std::map<VarId, SparsePolynomial> AutomorphismMap::at_parameter(const Rational& value) const {
    std::map<VarId, SparsePolynomial> assignment{{VarId::param_s(), SparsePolynomial(value)}};
    std::map<VarId, SparsePolynomial> out;
    for (const auto& [v, img] : images_) out.emplace(v, substitute(img, assignment));
    return out;
}

AutomorphismMap exponential(const Derivation& d, int cap) {
    NilpotencyReport report = check_locally_nilpotent(d, cap);
    if (!report.conclusive_positive())
        throw NotLndError("derivation is not locally nilpotent within cap " +
                          std::to_string(report.cap));

    const SparsePolynomial s = SparsePolynomial::variable(VarId::param_s());
    std::map<VarId, SparsePolynomial> images;
    for (VarId v : d.base().variables) {
        SparsePolynomial sum = SparsePolynomial::variable(v);
        SparsePolynomial power = d.apply_reduced(SparsePolynomial::variable(v));
        Rational factorial(1);
        int n = 1;
        while (!power.is_zero()) {
            factorial *= Rational(n);
            sum += power.scaled(factorial.inverse()) * s.pow(n);
            power = d.apply_reduced(power);
            ++n;
        }
        images.emplace(v, std::move(sum));
    }
    return AutomorphismMap(d.base_ptr(), std::move(images));
}

AuxDegreeReport check_aux_degree_zero(const Derivation& d, const VariableGrading& aux) {
    AuxDegreeReport report;
    report.degree_zero = true;
    for (VarId v : d.base().variables) {
        SparsePolynomial img = d.base().normal_form(d.image(v));
        if (img.is_zero()) continue;
        if (v.is_T()) report.moves_t_variable = true;
        auto h = aux.degree_of(img);
        if (!h.homogeneous || !(h.degree == aux.degree(v))) report.degree_zero = false;
    }
    return report;
}

}  // namespace workbench
