// Derivations of a presented algebra and the locally-nilpotent toolbox:
// descent to the quotient, nilpotency certificates, weight homogeneity,
// vertical/horizontal classification, exponential automorphisms, and the
// auxiliary degree-zero check.
#pragma once

#include <map>
#include <optional>

#include "workbench/grading.hpp"
#include "workbench/trinomial.hpp"

namespace workbench {

struct RationalFunction {
    SparsePolynomial num, den;
};

class Derivation {
public:
    // Image keys and image variables must be generators; parameter variables
    // may not appear. The zero derivation is the empty map.
    Derivation(AlgebraPtr base, std::map<VarId, SparsePolynomial> images);

    const PresentedAlgebra& base() const { return *base_; }
    const AlgebraPtr& base_ptr() const { return base_; }
    const std::map<VarId, SparsePolynomial>& images() const { return images_; }
    SparsePolynomial image(VarId v) const {
        auto it = images_.find(v);
        return it == images_.end() ? SparsePolynomial() : it->second;
    }

    SparsePolynomial apply(const SparsePolynomial& p) const { return apply_derivation(images_, p); }
    SparsePolynomial apply_reduced(const SparsePolynomial& p) const {
        return base_->normal_form(apply(p));
    }

    // True when every image reduces to zero modulo the relations.
    bool is_zero() const;

    std::string str() const;

private:
    AlgebraPtr base_;
    std::map<VarId, SparsePolynomial> images_;
};

struct IdealCheck {
    bool preserved = false;
    std::vector<SparsePolynomial> residues;  // NF(delta(g_i)) per relation
};
IdealCheck check_preserves_ideal(const Derivation& d);

struct NilpotencyReport {
    enum class Verdict { LocallyNilpotent, NotNilpotentWithinCap };
    Verdict verdict = Verdict::NotNilpotentWithinCap;
    int cap = 0;
    // Least n with delta^n(generator) = 0 in the quotient; -1 when the cap
    // was exceeded (inconclusive, never a negative claim).
    std::map<VarId, int> nil_degree;

    bool conclusive_positive() const { return verdict == Verdict::LocallyNilpotent; }
};

// 2 + dim * max image degree * max relation degree, the documented default.
int default_nilpotency_cap(const Derivation& d);

// Iterates NF(delta^k) on every generator. Throws IdealNotPreserved when the
// derivation does not descend to the quotient. cap <= 0 selects the default.
NilpotencyReport check_locally_nilpotent(const Derivation& d, int cap = 0);

struct DerivationHomogeneity {
    bool homogeneous = false;
    Degree degree;          // g0 with delta(A_g) contained in A_{g+g0}
    VarId offender{};       // variable witnessing failure
    std::string reason;
};
// Throws ZeroDerivation when delta vanishes on the quotient.
DerivationHomogeneity homogeneity_degree(const Derivation& d, const VariableGrading& w);

enum class DerivationType { Vertical, Horizontal };

// Trinomial criterion: vertical iff delta(T_ij) = 0 in the quotient for all
// T variables. Throws MissingInvariant on custom presentations.
DerivationType classify_type(const Derivation& d);

struct InvariantDerivative {
    DerivationType type;
    RationalFunction derivative;  // delta(num/den) by the quotient rule, numerator reduced
};
// Quotient-rule route; works for any base with a supplied torus invariant.
InvariantDerivative classify_type(const Derivation& d, const RationalFunction& invariant);

class AutomorphismMap {
public:
    AutomorphismMap(AlgebraPtr base, std::map<VarId, SparsePolynomial> images);

    const PresentedAlgebra& base() const { return *base_; }
    const std::map<VarId, SparsePolynomial>& images() const { return images_; }
    SparsePolynomial image(VarId v) const {
        auto it = images_.find(v);
        return it == images_.end() ? SparsePolynomial::variable(v) : it->second;
    }

    // Substitute the images into p and reduce.
    SparsePolynomial apply(const SparsePolynomial& p) const;
    // Specialize the flow parameter s to a rational value.
    std::map<VarId, SparsePolynomial> at_parameter(const Rational& value) const;

private:
    AlgebraPtr base_;
    std::map<VarId, SparsePolynomial> images_;
};

// exp(s delta): x -> sum_n s^n/n! delta^n(x), finite by nilpotency.
// Throws NotLND unless check_locally_nilpotent is conclusively positive.
AutomorphismMap exponential(const Derivation& d, int cap = 0);

struct AuxDegreeReport {
    bool degree_zero = false;      // homogeneous of degree zero, torsion included
    bool moves_t_variable = false; // some delta(T_ij) != 0 in the quotient
};
AuxDegreeReport check_aux_degree_zero(const Derivation& d, const VariableGrading& aux);

}  // namespace workbench
