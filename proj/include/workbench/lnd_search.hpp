// Bounded search for torus-homogeneous locally nilpotent derivations: the
// image of each variable is a general normal-form monomial combination of the
// prescribed weight, the ideal-preservation system is solved exactly (it is
// linear in the unknown coefficients), and solutions are filtered through the
// nilpotency certificate. Negative results are one-directional: they only
// exclude LNDs within the given degree bound.
#pragma once

#include <vector>

#include "workbench/derivation.hpp"

namespace workbench {

// g0_free is the degree shift in the free weight lattice; torsion components
// are unconstrained. Results are canonical: reduced-echelon basis of the
// solution space, primitive integer coefficients, first nonzero positive,
// sorted by printed image support. cap <= 0 selects the per-candidate default.
std::vector<Derivation> search_homogeneous_lnds(const AlgebraPtr& alg, const VariableGrading& w,
                                                const std::vector<mpz_class>& g0_free,
                                                int max_image_degree, int cap = 0);

}  // namespace workbench
