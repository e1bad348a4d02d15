#include <doctest.h>

#include "helpers.hpp"
#include "workbench/derivation.hpp"
#include "workbench/hypersurface.hpp"
#include "workbench/lnd_search.hpp"
#include "workbench/parser.hpp"

using namespace workbench;
using wbtest::Gen;

namespace {

const VarId x = VarId::T(1, 1);
const VarId y = VarId::T(1, 2);
const VarId z = VarId::T(2, 1);

// Danielewski x*y - z^2 - c0, optionally with free S variables.
AlgebraPtr danielewski_algebra(const Rational& c0 = Rational(1), int m = 0) {
    TrinomialData d = wbtest::danielewski(c0);
    d.m = m;
    return relations(d);
}

// delta(x) = 2z, delta(z) = y, delta(y) = 0.
Derivation danielewski_lnd(const AlgebraPtr& alg) {
    std::map<VarId, SparsePolynomial> images;
    images[x] = parse_polynomial("2*T[2][1]");
    images[z] = parse_polynomial("T[1][2]");
    return Derivation(alg, images);
}

}  // namespace

TEST_CASE("ideal preservation") {
    HypersurfaceExample ex = example_hypersurface(1, {2}, {3}, 1, {1});
    // delta(f) = 0 exactly in the ambient ring, not only after reduction
    CHECK(ex.derivation.apply(ex.algebra->rels.at(0).poly).is_zero());
    IdealCheck check = check_preserves_ideal(ex.derivation);
    CHECK(check.preserved);
    CHECK(check.residues.at(0).is_zero());

    // Euler derivation on xy - z^2 - c: residue 2c
    Rational c(7);
    AlgebraPtr alg = danielewski_algebra(c);
    std::map<VarId, SparsePolynomial> euler;
    for (VarId v : alg->variables) euler[v] = SparsePolynomial::variable(v);
    IdealCheck bad = check_preserves_ideal(Derivation(alg, euler));
    CHECK_FALSE(bad.preserved);
    CHECK(bad.residues.at(0) == SparsePolynomial(c * Rational(2)));

    CHECK(check_preserves_ideal(Derivation(alg, {})).preserved);
}

TEST_CASE("local nilpotency certificates") {
    AlgebraPtr alg = danielewski_algebra(Rational(1), 1);

    std::map<VarId, SparsePolynomial> dS{{VarId::S(1), SparsePolynomial(1)}};
    NilpotencyReport rep = check_locally_nilpotent(Derivation(alg, dS));
    CHECK(rep.conclusive_positive());
    CHECK(rep.nil_degree.at(VarId::S(1)) == 2);
    CHECK(rep.nil_degree.at(x) == 1);
    CHECK(rep.nil_degree.at(z) == 1);

    HypersurfaceExample ex = example_hypersurface(1, {2}, {3}, 1, {1});
    rep = check_locally_nilpotent(ex.derivation);
    CHECK(rep.conclusive_positive());
    CHECK(rep.nil_degree.at(HypersurfaceExample::u()) == 3);   // u -> 2xy -> 2xv -> 0
    CHECK(rep.nil_degree.at(HypersurfaceExample::y(1)) == 2);  // y -> v -> 0

    // an eigenvector is inconclusive, never reported as "not an LND"
    std::map<VarId, SparsePolynomial> eig{{VarId::S(1), SparsePolynomial::variable(VarId::S(1))}};
    rep = check_locally_nilpotent(Derivation(alg, eig), 10);
    CHECK(rep.verdict == NilpotencyReport::Verdict::NotNilpotentWithinCap);
    CHECK(rep.nil_degree.at(VarId::S(1)) == -1);
    CHECK(rep.cap == 10);

    std::map<VarId, SparsePolynomial> euler;
    for (VarId v : alg->variables) euler[v] = SparsePolynomial::variable(v);
    CHECK_THROWS_AS(check_locally_nilpotent(Derivation(alg, euler)), IdealNotPreservedError);
}

TEST_CASE("homogeneity degree") {
    TrinomialData data = wbtest::danielewski();
    AlgebraPtr alg = relations(data);
    WeightAssignment w = weight_assignment(data);

    Derivation d = danielewski_lnd(alg);
    DerivationHomogeneity h = homogeneity_degree(d, w);
    CHECK(h.homogeneous);
    CHECK(abs(h.degree.free[0]) == 1);
    CHECK(h.degree == w.subtract(w.degree(z), w.degree(x)));
    CHECK(h.degree == w.subtract(w.degree(y), w.degree(z)));

    TrinomialData with_s = wbtest::danielewski();
    with_s.m = 1;
    AlgebraPtr alg_s = relations(with_s);
    WeightAssignment w_s = weight_assignment(with_s);
    Derivation dS(alg_s, {{VarId::S(1), SparsePolynomial(1)}});
    h = homogeneity_degree(dS, w_s);
    CHECK(h.homogeneous);
    CHECK(h.degree == w_s.subtract(w_s.zero(), w_s.degree(VarId::S(1))));  // g0 = -v_1

    Derivation mixed(alg_s, {{x, parse_polynomial("T[1][1] + S[1]")}});
    h = homogeneity_degree(mixed, w_s);
    CHECK_FALSE(h.homogeneous);
    CHECK(h.offender == x);

    CHECK_THROWS_AS(homogeneity_degree(Derivation(alg, {}), w), ZeroDerivationError);
}

TEST_CASE("vertical/horizontal classification") {
    AlgebraPtr alg = danielewski_algebra(Rational(1), 1);

    Derivation vertical(alg, {{VarId::S(1), SparsePolynomial::variable(x)}});
    CHECK(classify_type(vertical) == DerivationType::Vertical);

    Derivation horizontal = danielewski_lnd(alg);
    CHECK(classify_type(horizontal) == DerivationType::Horizontal);

    // both classification routes agree on the trinomial base: xy generates
    // the invariant field of the Danielewski surface
    RationalFunction inv{parse_polynomial("T[1][1]*T[1][2]"), SparsePolynomial(1)};
    CHECK(classify_type(horizontal, inv).type == DerivationType::Horizontal);
    CHECK(classify_type(vertical, inv).type == DerivationType::Vertical);

    // hypersurface: horizontal with derivative 2yv/z^3 at the supplied invariant
    HypersurfaceExample ex = example_hypersurface(1, {2}, {3}, 1, {1});
    CHECK_THROWS_AS(classify_type(ex.derivation), MissingInvariantError);
    InvariantDerivative id = classify_type(ex.derivation, ex.invariant);
    CHECK(id.type == DerivationType::Horizontal);
    // cross-multiplied equality with 2yv/z^3
    SparsePolynomial expect_num =
        parse_polynomial("2*T[2][1]*T[5][1]");                 // 2*y1*v1 in the layout
    SparsePolynomial expect_den = parse_polynomial("T[3][1]^3");
    SparsePolynomial cross = id.derivative.num * expect_den - expect_num * id.derivative.den;
    CHECK(ex.algebra->normal_form(cross).is_zero());
}

TEST_CASE("exponential automorphisms") {
    AlgebraPtr alg = danielewski_algebra(Rational(1), 1);
    Derivation dS(alg, {{VarId::S(1), SparsePolynomial(1)}});
    AutomorphismMap expS = exponential(dS);
    CHECK(expS.image(VarId::S(1)) == parse_polynomial("S[1] + s"));
    CHECK(expS.image(x) == SparsePolynomial::variable(x));

    HypersurfaceExample ex = example_hypersurface(1, {2}, {3}, 1, {1});
    AutomorphismMap e = exponential(ex.derivation);
    // u -> u + 2xys + xvs^2, y -> y + sv
    CHECK(e.image(HypersurfaceExample::u()) ==
          parse_polynomial("T[4][1] + 2*T[1][1]*T[2][1]*s + T[1][1]*T[5][1]*s^2"));
    CHECK(e.image(HypersurfaceExample::y(1)) == parse_polynomial("T[2][1] + s*T[5][1]"));

    // relations map to zero, exactly as polynomials in s
    CHECK(e.apply(ex.algebra->rels.at(0).poly).is_zero());

    // s = 0 specializes to the identity
    for (const auto& [v, img] : e.at_parameter(Rational(0)))
        CHECK(img == SparsePolynomial::variable(v));

    // one-parameter composition law on every generator
    std::map<VarId, SparsePolynomial> shift{
        {VarId::param_s(), parse_polynomial("s + t")}};
    std::map<VarId, SparsePolynomial> second;  // same map at parameter t
    std::map<VarId, SparsePolynomial> to_t{{VarId::param_s(), SparsePolynomial::variable(VarId::param_t())}};
    for (const auto& [v, img] : e.images()) second[v] = substitute(img, to_t);
    for (VarId v : ex.algebra->variables) {
        SparsePolynomial composed = substitute(e.image(v), second);
        SparsePolynomial direct = substitute(e.image(v), shift);
        CHECK(ex.algebra->normal_form(composed - direct).is_zero());
    }

    // exp is a ring map modulo the ideal
    Gen gen(177);
    std::vector<VarId> vars = ex.algebra->variables;
    for (int i = 0; i < 100; ++i) {
        SparsePolynomial p = gen.polynomial(vars, 3, 4, 3);
        SparsePolynomial q = gen.polynomial(vars, 3, 4, 3);
        CHECK(e.apply(p * q) == ex.algebra->normal_form(e.apply(p) * e.apply(q)));
    }

    std::map<VarId, SparsePolynomial> eig{{VarId::S(1), SparsePolynomial::variable(VarId::S(1))}};
    CHECK_THROWS_AS(exponential(Derivation(alg, eig), 5), NotLndError);
}

TEST_CASE("auxiliary degree-zero check") {
    TrinomialData data = wbtest::danielewski(Rational(-1));
    AlgebraPtr alg = relations(data);
    Derivation d = danielewski_lnd(alg);

    std::map<VarId, Degree> trivial;
    for (VarId v : alg->variables) trivial[v] = Degree{{0}, {}};
    AuxiliaryGrading h0 = VariableGrading::custom(1, {}, trivial, *alg);
    AuxDegreeReport rep = check_aux_degree_zero(d, h0);
    CHECK(rep.degree_zero);
    CHECK(rep.moves_t_variable);

    std::map<VarId, Degree> zdeg{{x, Degree{{1}, {}}}, {y, Degree{{-1}, {}}}, {z, Degree{{0}, {}}}};
    AuxiliaryGrading h1 = VariableGrading::custom(1, {}, zdeg, *alg);
    rep = check_aux_degree_zero(d, h1);
    CHECK_FALSE(rep.degree_zero);  // degree -1, not 0

    TrinomialData with_s = wbtest::danielewski(Rational(-1));
    with_s.m = 1;
    AlgebraPtr alg_s = relations(with_s);
    Derivation dS(alg_s, {{VarId::S(1), SparsePolynomial(1)}});
    std::map<VarId, Degree> s_zero;
    for (VarId v : alg_s->variables) s_zero[v] = Degree{{0}, {}};
    rep = check_aux_degree_zero(dS, VariableGrading::custom(1, {}, s_zero, *alg_s));
    CHECK(rep.degree_zero);
    CHECK_FALSE(rep.moves_t_variable);
}

TEST_CASE("hypersurface family shape") {
    HypersurfaceExample ex = example_hypersurface(2, {2}, {3, 1}, 2, {2, 1});
    const SparsePolynomial& f = ex.algebra->rels.at(0).poly;
    CHECK(f == parse_polynomial("T[1][1]*T[1][2]*T[2][1]^2 + T[1][1]*T[1][2]*T[3][1]^3*T[3][2]"
                                " - T[4][1]*T[5][1]^2*T[5][2]"));
    CHECK(ex.derivation.image(HypersurfaceExample::u()) ==
          parse_polynomial("2*T[1][1]*T[1][2]*T[2][1]"));
    CHECK(ex.derivation.image(HypersurfaceExample::y(1)) ==
          parse_polynomial("T[5][1]^2*T[5][2]"));
    CHECK_THROWS_AS(example_hypersurface(0, {1}, {1}, 1, {1}), InvalidDataError);
    CHECK_THROWS_AS(example_hypersurface(1, {1}, {1}, 2, {1}), InvalidDataError);
}

TEST_CASE("search finds the Danielewski generator") {
    TrinomialData data = wbtest::danielewski(Rational(2));
    AlgebraPtr alg = relations(data);
    WeightAssignment w = weight_assignment(data);
    Derivation known = danielewski_lnd(alg);
    Degree g0 = homogeneity_degree(known, w).degree;

    std::vector<Derivation> found = search_homogeneous_lnds(alg, w, g0.free, 2);
    bool hit = false;
    for (const Derivation& d : found) {
        CHECK(check_preserves_ideal(d).preserved);
        CHECK(check_locally_nilpotent(d).conclusive_positive());
        CHECK(homogeneity_degree(d, w).degree.free == g0.free);
        if (d.image(x) == parse_polynomial("2*T[2][1]") && d.image(z) == parse_polynomial("T[1][2]") &&
            d.image(y).is_zero())
            hit = true;
    }
    CHECK(hit);
}

TEST_CASE("search is empty on the rigid type 2 instance") {
    TrinomialData data = wbtest::type2_diag(3, 3, 3);
    AlgebraPtr alg = relations(data);
    WeightAssignment w = weight_assignment(data);
    REQUIRE(w.free_rank() == 1);
    for (long g = -3; g <= 3; ++g) {
        std::vector<Derivation> found = search_homogeneous_lnds(alg, w, {mpz_class(g)}, 4);
        CAPTURE(g);
        CHECK(found.empty());
    }
}

TEST_CASE("search finds the S translations") {
    TrinomialData data = wbtest::danielewski();
    data.m = 1;
    AlgebraPtr alg = relations(data);
    WeightAssignment w = weight_assignment(data);
    std::vector<mpz_class> g0;
    for (const auto& c : w.degree(VarId::S(1)).free) g0.push_back(-c);

    std::vector<Derivation> found = search_homogeneous_lnds(alg, w, g0, 2);
    bool has_dS = false;
    for (const Derivation& d : found)
        if (d.image(VarId::S(1)) == SparsePolynomial(1) && d.images().size() == 1) has_dS = true;
    CHECK(has_dS);
}

TEST_CASE("search rejects bad arguments") {
    TrinomialData data = wbtest::danielewski();
    AlgebraPtr alg = relations(data);
    WeightAssignment w = weight_assignment(data);
    CHECK_THROWS_AS(search_homogeneous_lnds(alg, w, {}, 2), DegreeOutOfRangeError);
    CHECK_THROWS_AS(search_homogeneous_lnds(alg, w, {mpz_class(1)}, 0), DegreeOutOfRangeError);
}

TEST_CASE("extremal homogeneous components of an LND are LNDs") {
    // delta = (x -> 2z, z -> y) + d/dS1 mixes two degrees
    TrinomialData data = wbtest::danielewski();
    data.m = 1;
    AlgebraPtr alg = relations(data);
    WeightAssignment w = weight_assignment(data);
    std::map<VarId, SparsePolynomial> images;
    images[x] = parse_polynomial("2*T[2][1]");
    images[z] = parse_polynomial("T[1][2]");
    images[VarId::S(1)] = SparsePolynomial(1);
    Derivation d(alg, images);
    REQUIRE(check_locally_nilpotent(d).conclusive_positive());

    int splits = 0;
    for (int proj = 0; proj < w.free_rank(); ++proj) {
        // decompose by the Z-degree shift along coordinate proj
        std::map<mpz_class, std::map<VarId, SparsePolynomial>> components;
        for (const auto& [v, img] : d.images()) {
            mpz_class base = w.degree(v).free[static_cast<std::size_t>(proj)];
            for (const auto& [mono, coeff] : img.terms()) {
                mpz_class shift = w.degree_of_monomial(mono).free[static_cast<std::size_t>(proj)] - base;
                components[shift][v] += SparsePolynomial::term(mono, coeff);
            }
        }
        REQUIRE(!components.empty());
        if (components.size() > 1) ++splits;
        Derivation lo(alg, components.begin()->second);
        Derivation hi(alg, components.rbegin()->second);
        CHECK(check_locally_nilpotent(lo).conclusive_positive());
        CHECK(check_locally_nilpotent(hi).conclusive_positive());
    }
    CHECK(splits >= 1);

    // the hypersurface derivation decomposes the same way
    HypersurfaceExample ex = example_hypersurface(1, {2}, {3}, 1, {1});
    CHECK(check_locally_nilpotent(ex.derivation).conclusive_positive());
}
