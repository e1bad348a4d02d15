// Vanishing-pattern strata L(J) = { x : T_ij(x) = 0 iff T_ij in J }, the
// admissible patterns with their dimensions, the one-parameter subgroups
// Lambda_{s,u,v} and Omega, and the numeric stratum read-off.
//
// Admissibility: the empty pattern is always admissible. Type 1 admits any
// nonempty J inside a single block (two vanishing block monomials contradict
// the constant terms); type 2 additionally admits any J touching every block
// (two vanishing monomials force all of them), and nothing else.
#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "workbench/trinomial.hpp"

namespace workbench {

struct SupportPattern {
    std::set<VarId> vars;  // T variables only

    bool empty() const { return vars.empty(); }
    bool contains(VarId v) const { return vars.count(v) != 0; }
    std::set<int> blocks() const {
        std::set<int> b;
        for (VarId v : vars) b.insert(v.block);
        return b;
    }
    std::string str() const;

    bool operator==(const SupportPattern&) const = default;
    // Canonical listing order: by size, then lexicographically.
    bool operator<(const SupportPattern& o) const {
        if (vars.size() != o.vars.size()) return vars.size() < o.vars.size();
        return vars < o.vars;
    }
};

struct Stratum {
    SupportPattern pattern;
    int dimension = 0;
    bool nonempty = true;  // admissible strata are nonempty over the closed field
};

// All admissible patterns in canonical order, the empty pattern first.
std::vector<Stratum> admissible_supports(const TrinomialData& data);

using Point = std::map<VarId, std::complex<double>>;

// J = { T variables with |value| < eps }; requires the point to satisfy every
// relation within eps * (term magnitude sum), else NotOnVariety.
SupportPattern stratum_of_point(const Point& point, const TrinomialData& data, double eps);

struct OneParamSubgroup {
    std::map<VarId, long> exponents;  // t . T = t^e T; absent means fixed
    std::string label;

    long exponent(VarId v) const {
        auto it = exponents.find(v);
        return it == exponents.end() ? 0 : it->second;
    }
};

// t . T_su = t^{l_sv} T_su, t . T_sv = t^{-l_su} T_sv, everything else fixed.
OneParamSubgroup lambda_subtorus(const TrinomialData& data, int block, int u, int v);

// Type 2 only: multiplies each T_i1 by t^{prod_{j != i} l_j1}.
OneParamSubgroup omega_subtorus(const TrinomialData& data);

struct SubgroupCheck {
    bool acts = false;
    std::vector<mpz_class> t_degrees;  // d_i with g_i -> t^{d_i} g_i, after clearing
};

// Substitutes T_ij -> t^{e_ij} T_ij into every relation, clears to
// non-negative t-powers and tests the image against t^{d_i} g_i.
SubgroupCheck verify_one_param_subgroup(const OneParamSubgroup& sub, const PresentedAlgebra& alg);

}  // namespace workbench
