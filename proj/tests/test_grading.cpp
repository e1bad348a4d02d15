#include <doctest.h>

#include "helpers.hpp"
#include "workbench/grading.hpp"
#include "workbench/parser.hpp"

using namespace workbench;
using wbtest::Gen;

namespace {

mpz_class abs_free(const Degree& d, std::size_t i) { return abs(d.free[i]); }

}  // namespace

TEST_CASE("Danielewski grading: Z + Z/2, weights (1,-1,0) up to sign") {
    TrinomialData d = wbtest::danielewski();
    GradingGroup g = grading_group(d);
    CHECK(g.free_rank() == 1);
    REQUIRE(g.torsion().size() == 1);
    CHECK(g.torsion()[0] == 2);

    WeightAssignment w = weight_assignment(d);
    Degree wx = w.degree(VarId::T(1, 1));
    Degree wy = w.degree(VarId::T(1, 2));
    Degree wz = w.degree(VarId::T(2, 1));
    CHECK(abs_free(wx, 0) == 1);
    CHECK(wy.free[0] == -wx.free[0]);
    CHECK(wz.free[0] == 0);
    CHECK(wz.torsion[0] == 1);  // z^2 has weight zero

    // degree examples
    auto h = w.degree_of(parse_polynomial("T[1][1]*T[1][2]"));
    CHECK(h.homogeneous);
    CHECK(h.degree.is_zero());
    h = w.degree_of(SparsePolynomial(1));
    CHECK(h.homogeneous);
    CHECK(h.degree.is_zero());
    h = w.degree_of(parse_polynomial("T[1][1] + T[2][1]"));
    CHECK_FALSE(h.homogeneous);
    CHECK_THROWS_AS(w.degree_of(SparsePolynomial()), ZeroPolynomialError);
}

TEST_CASE("type 2 gradings") {
    GradingGroup g = grading_group(wbtest::type2_diag(2, 2, 2));
    CHECK(g.free_rank() == 1);
    REQUIRE(g.torsion().size() == 2);
    CHECK(g.torsion()[0] == 2);
    CHECK(g.torsion()[1] == 2);
    WeightAssignment w = weight_assignment(wbtest::type2_diag(2, 2, 2));
    mpz_class w0 = w.degree(VarId::T(0, 1)).free[0];
    CHECK(abs(w0) == 1);
    CHECK(w.degree(VarId::T(1, 1)).free[0] == w0);
    CHECK(w.degree(VarId::T(2, 1)).free[0] == w0);

    GradingGroup g1 = grading_group(wbtest::type2_diag(1, 1, 1));
    CHECK(g1.free_rank() == 1);
    CHECK(g1.torsion().empty());
}

TEST_CASE("free rank equals n + m - r on random instances") {
    Gen gen(101);
    for (int i = 0; i < 100; ++i) {
        TrinomialData d = gen.trinomial_data();
        CAPTURE(d.type);
        GradingGroup g = grading_group(d);
        CHECK(g.free_rank() == d.n() + d.m - d.r());

        WeightAssignment w = weight_assignment(d);
        AlgebraPtr alg = relations(d);
        for (const auto& rel : alg->rels.relations()) {
            auto h = w.degree_of(rel.poly);
            CHECK(h.homogeneous);
            if (d.type == 1) {
                // every monomial of g_i sits in degree zero
                for (const auto& [mono, coeff] : rel.poly.terms())
                    CHECK(w.degree_of_monomial(mono).is_zero());
            }
        }
    }
}

TEST_CASE("S weights are standard free generators") {
    Gen gen(113);
    for (int i = 0; i < 40; ++i) {
        TrinomialData d = gen.trinomial_data();
        if (d.m == 0) continue;
        GradingGroup g = grading_group(d);
        // the free projection restricted to the S columns has full rank m
        IntMatrix sub(g.free_rank(), d.m);
        for (int k = 1; k <= d.m; ++k) {
            Degree deg = g.degree_of_variable(VarId::S(k));
            CHECK(deg.torsion == std::vector<mpz_class>(g.torsion().size(), 0));
            for (int rrow = 0; rrow < g.free_rank(); ++rrow)
                sub.at(rrow, k - 1) = deg.free[static_cast<std::size_t>(rrow)];
        }
        CHECK(sub.rank() == d.m);
    }
}

TEST_CASE("auxiliary gradings validate relation homogeneity") {
    TrinomialData d = wbtest::danielewski(Rational(-1));
    AlgebraPtr alg = relations(d);

    // trivial grading: all degrees zero
    std::map<VarId, Degree> zero_degrees;
    for (VarId v : alg->variables) zero_degrees[v] = Degree{{0}, {}};
    CHECK_NOTHROW(VariableGrading::custom(1, {}, zero_degrees, *alg));

    // deg(x,y,z) = (1,-1,0) is fine; (1,0,0) breaks homogeneity of g
    std::map<VarId, Degree> good{{VarId::T(1, 1), Degree{{1}, {}}},
                                 {VarId::T(1, 2), Degree{{-1}, {}}},
                                 {VarId::T(2, 1), Degree{{0}, {}}}};
    CHECK_NOTHROW(VariableGrading::custom(1, {}, good, *alg));
    std::map<VarId, Degree> bad{{VarId::T(1, 1), Degree{{1}, {}}},
                                {VarId::T(1, 2), Degree{{0}, {}}},
                                {VarId::T(2, 1), Degree{{0}, {}}}};
    CHECK_THROWS_AS(VariableGrading::custom(1, {}, bad, *alg), InvalidDataError);
}
