// The hypersurface family x_1..x_k (y^b + z^c) = u v^r together with its
// locally nilpotent derivation and the torus invariant u v^r / (x z^c).
// Variable layout: x_i = T[1][i], y_j = T[2][j], z_j = T[3][j], u = T[4][1],
// v_j = T[5][j].
#pragma once

#include <vector>

#include "workbench/derivation.hpp"

namespace workbench {

struct HypersurfaceExample {
    AlgebraPtr algebra;       // single relation f = x(y^b + z^c) - u v^r
    Derivation derivation;    // delta(u) = b1 x y1^{b1-1} y2^{b2}..., delta(y1) = v^r
    RationalFunction invariant;

    static VarId x(int i) { return VarId::T(1, i); }
    static VarId y(int j) { return VarId::T(2, j); }
    static VarId z(int j) { return VarId::T(3, j); }
    static VarId u() { return VarId::T(4, 1); }
    static VarId v(int j) { return VarId::T(5, j); }
};

HypersurfaceExample example_hypersurface(int k, const std::vector<int>& b,
                                         const std::vector<int>& c, int p,
                                         const std::vector<int>& r);

}  // namespace workbench
