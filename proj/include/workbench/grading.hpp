// The grading group Z^(n+m-r) (+ torsion) of a trinomial algebra, presented
// as a quotient of Z^(n+m) by the relation lattice via Smith normal form, and
// per-variable weights with homogeneity tests.
//
// Type 1 relation rows force deg T_i^{l_i} = 0 for every block i (the
// constant term of g_i leaves no alternative); type 2 rows force
// deg T_i^{l_i} = deg T_{i+1}^{l_{i+1}}. Both give free rank n + m - r.
#pragma once

#include <map>
#include <vector>

#include "workbench/int_matrix.hpp"
#include "workbench/trinomial.hpp"

namespace workbench {

struct Degree {
    std::vector<mpz_class> free;
    std::vector<mpz_class> torsion;  // normalized to [0, d_i)

    bool is_zero() const;
    bool operator==(const Degree&) const = default;
    std::string str() const;
};

class GradingGroup {
public:
    // Quotient of Z^coords by the row lattice of relation_rows.
    static GradingGroup quotient(const IntMatrix& relation_rows, std::vector<VarId> coords);

    int free_rank() const { return free_rows_.rows(); }
    const std::vector<mpz_class>& torsion() const { return moduli_; }
    const std::vector<VarId>& coordinates() const { return coords_; }

    Degree degree_of_variable(VarId v) const;  // parameters have degree zero
    Degree zero() const;
    Degree add(const Degree& a, const Degree& b) const;
    Degree subtract(const Degree& a, const Degree& b) const;
    Degree reduce(Degree d) const;  // normalize torsion components

private:
    std::vector<VarId> coords_;
    std::vector<mpz_class> moduli_;  // invariant factors > 1
    IntMatrix torsion_rows_;         // projection rows paired with moduli_
    IntMatrix free_rows_;            // free-part projection
};

GradingGroup grading_group(const TrinomialData& data);

// Per-variable degrees in a fixed grading; covers both the canonical torus
// weights (from_group) and user-supplied auxiliary gradings (custom).
class VariableGrading {
public:
    static VariableGrading from_group(const GradingGroup& group);
    // Validates that every relation of alg is homogeneous; throws InvalidData.
    static VariableGrading custom(int free_rank, std::vector<mpz_class> moduli,
                                  std::map<VarId, Degree> degrees, const PresentedAlgebra& alg);

    int free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& moduli() const { return moduli_; }

    const Degree& degree(VarId v) const;  // parameters map to the zero degree
    Degree zero() const;
    Degree add(const Degree& a, const Degree& b) const;
    Degree subtract(const Degree& a, const Degree& b) const;
    Degree reduce(Degree d) const;

    Degree degree_of_monomial(const Monomial& m) const;

    struct Homogeneity {
        bool homogeneous = false;
        Degree degree;
        Monomial offender_a, offender_b;  // two monomials of different degree
    };
    // Common degree of all monomials of p; throws ZeroPolynomial on p = 0.
    Homogeneity degree_of(const SparsePolynomial& p) const;

private:
    int free_rank_ = 0;
    std::vector<mpz_class> moduli_;
    std::map<VarId, Degree> degrees_;
    Degree zero_;
};

using WeightAssignment = VariableGrading;
using AuxiliaryGrading = VariableGrading;

WeightAssignment weight_assignment(const TrinomialData& data);

}  // namespace workbench
