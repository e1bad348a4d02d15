#include <doctest.h>

#include "helpers.hpp"
#include "workbench/rigidity.hpp"

using namespace workbench;
using wbtest::Gen;

namespace {

TrinomialData type1(std::vector<std::vector<int>> l, int m = 0) {
    TrinomialData d;
    d.type = 1;
    d.m = m;
    d.exponents = std::move(l);
    for (std::size_t i = 0; i < d.exponents.size(); ++i) d.constants1.push_back(Rational(static_cast<long>(i)));
    return d;
}

TrinomialData type2(std::vector<std::vector<int>> l, int m = 0) {
    TrinomialData d;
    d.type = 2;
    d.m = m;
    d.exponents = std::move(l);
    // columns (1, i) are pairwise independent
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
        d.constants2[0].push_back(Rational(1));
        d.constants2[1].push_back(Rational(static_cast<long>(i)));
    }
    return d;
}

}  // namespace

TEST_CASE("worked examples") {
    // clause 1: m != 0, target X only
    TrinomialData a = type1({{2}, {2}}, 1);
    RigidityVerdict v = rigidity_verdict(a, RigidityTarget::X);
    CHECK_FALSE(v.rigid);
    CHECK(v.clause == RigidityClause::MNonzero);
    CHECK(rigidity_verdict(a, RigidityTarget::Y).rigid);  // Y skips clause 1

    // clause 2
    TrinomialData b = type1({{1, 2}, {3}});
    v = rigidity_verdict(b, RigidityTarget::X);
    CHECK_FALSE(v.rigid);
    CHECK(v.clause == RigidityClause::Type1Clause2);
    CHECK(v.a == 2);
    CHECK(v.j.at(1) == 1);

    // rigid type 2
    v = rigidity_verdict(type2({{3}, {3}, {3}}), RigidityTarget::X);
    CHECK(v.rigid);
    CHECK(v.clause == RigidityClause::None);

    // clause 3b
    v = rigidity_verdict(type2({{2}, {2, 4}, {5}}), RigidityTarget::X);
    CHECK_FALSE(v.rigid);
    CHECK(v.clause == RigidityClause::Type2Clause3b);
    CHECK(v.a == 0);
    CHECK(v.b == 1);
    CHECK(v.c == 2);
    CHECK(v.v.at(0) == 1);
    CHECK(v.v.at(1) == 1);
}

TEST_CASE("clause order and witness minimality") {
    // 3a fires before 3b when both would apply
    TrinomialData d = type2({{2, 1}, {2}, {2}});
    RigidityVerdict v = rigidity_verdict(d, RigidityTarget::X);
    CHECK(v.clause == RigidityClause::Type2Clause3a);
    CHECK(v.a == 1);
    CHECK(v.b == 2);
    CHECK(v.j.at(0) == 2);

    // smallest a wins for clause 2
    v = rigidity_verdict(type1({{1}, {1}, {1}}), RigidityTarget::X);
    CHECK(v.clause == RigidityClause::Type1Clause2);
    CHECK(v.a == 1);
}

TEST_CASE("hand-evaluated table") {
    struct Row {
        TrinomialData data;
        RigidityTarget target;
        bool rigid;
        RigidityClause clause;
        int a;
    };
    std::vector<Row> rows;
    rows.push_back({type1({{1, 1}, {2}}), RigidityTarget::X, false, RigidityClause::Type1Clause2, 2});
    rows.push_back({type1({{1, 1}, {2}}, 3), RigidityTarget::X, false, RigidityClause::MNonzero, -1});
    rows.push_back({type1({{1, 1}, {2}}, 3), RigidityTarget::Y, false, RigidityClause::Type1Clause2, 2});
    rows.push_back({type1({{2}, {2}}), RigidityTarget::X, true, RigidityClause::None, -1});
    rows.push_back({type1({{2}, {2}}, 1), RigidityTarget::Y, true, RigidityClause::None, -1});
    rows.push_back({type1({{2}, {1, 3}, {4}}), RigidityTarget::X, true, RigidityClause::None, -1});
    rows.push_back({type1({{1, 2}, {1}, {5}}), RigidityTarget::X, false, RigidityClause::Type1Clause2, 3});
    rows.push_back({type1({{1, 1}, {1}, {1, 1, 1}}), RigidityTarget::X, false, RigidityClause::Type1Clause2, 1});
    rows.push_back({type1({{1}, {1}, {1}, {3}}), RigidityTarget::X, false, RigidityClause::Type1Clause2, 4});
    rows.push_back({type1({{3, 1}, {2, 2}}), RigidityTarget::X, false, RigidityClause::Type1Clause2, 2});
    rows.push_back({type2({{1}, {1}, {1}}), RigidityTarget::X, false, RigidityClause::Type2Clause3a, 0});
    rows.push_back({type2({{2}, {2}, {2}}), RigidityTarget::X, false, RigidityClause::Type2Clause3b, 0});
    rows.push_back({type2({{3}, {3}, {3}}), RigidityTarget::Y, true, RigidityClause::None, -1});
    rows.push_back({type2({{2}, {3}, {2}}), RigidityTarget::X, false, RigidityClause::Type2Clause3b, 0});
    rows.push_back({type2({{2, 2}, {4, 6}, {1}}), RigidityTarget::X, false, RigidityClause::Type2Clause3a, 0});
    rows.push_back({type2({{2}, {2}, {2}, {2}}), RigidityTarget::X, true, RigidityClause::None, -1});
    rows.push_back({type2({{2}, {2}, {2}, {1}}), RigidityTarget::X, false, RigidityClause::Type2Clause3b, 0});
    rows.push_back({type2({{1, 2}, {2}, {4}}), RigidityTarget::X, false, RigidityClause::Type2Clause3a, 1});
    rows.push_back({type2({{2, 4}, {2, 6}, {3}}), RigidityTarget::X, false, RigidityClause::Type2Clause3b, 0});
    rows.push_back({type2({{2, 4}, {2, 3}, {5}}), RigidityTarget::X, true, RigidityClause::None, -1});
    rows.push_back({type2({{2}, {2, 4}, {5}}, 4), RigidityTarget::X, false, RigidityClause::MNonzero, -1});
    rows.push_back({type2({{2}, {2, 4}, {5}}, 4), RigidityTarget::Y, false, RigidityClause::Type2Clause3b, 0});

    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        const Row& row = rows[i];
        RigidityVerdict v = rigidity_verdict(row.data, row.target);
        CHECK(v.rigid == row.rigid);
        CHECK(v.clause == row.clause);
        if (row.a >= 0) CHECK(v.a == row.a);
        CHECK(recheck_witness(row.data, row.target, v));
    }
}

TEST_CASE("Y nonrigid implies X nonrigid; exponent-1 monotonicity") {
    Gen gen(131);
    for (int i = 0; i < 200; ++i) {
        TrinomialData d = gen.trinomial_data();
        RigidityVerdict vx = rigidity_verdict(d, RigidityTarget::X);
        RigidityVerdict vy = rigidity_verdict(d, RigidityTarget::Y);
        if (!vy.rigid) CHECK_FALSE(vx.rigid);
        CHECK(recheck_witness(d, RigidityTarget::X, vx));
        CHECK(recheck_witness(d, RigidityTarget::Y, vy));

        if (!vx.rigid) {
            // dropping any exponent to 1 keeps the verdict nonrigid
            TrinomialData e = d;
            int bi = gen.uniform(0, e.block_count() - 1);
            auto& l = e.exponents[static_cast<std::size_t>(bi)];
            l[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(l.size()) - 1))] = 1;
            CHECK_FALSE(rigidity_verdict(e, RigidityTarget::X).rigid);
        }
    }
}
