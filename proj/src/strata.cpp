#include "workbench/strata.hpp"

#include <algorithm>
#include <sstream>

#include "workbench/errors.hpp"

namespace workbench {

std::string SupportPattern::str() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (VarId v : vars) {
        if (!first) out << ",";
        first = false;
        out << v.name();
    }
    out << "}";
    return out.str();
}

namespace {

// All nonempty subsets of one block, as patterns.
std::vector<std::set<VarId>> block_subsets(const TrinomialData& data, int block) {
    std::vector<VarId> vars;
    for (int j = 1; j <= data.block_size(block); ++j) vars.push_back(VarId::T(block, j));
    std::vector<std::set<VarId>> out;
    const unsigned count = 1u << vars.size();
    for (unsigned mask = 1; mask < count; ++mask) {
        std::set<VarId> s;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (mask & (1u << j)) s.insert(vars[j]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<Stratum> admissible_supports(const TrinomialData& data) {
    ValidationReport report = validate(data);
    if (!report.ok)
        throw InvalidDataError("invalid trinomial data: " + report.violations.front().message);

    const int dim = dimension(data);
    std::vector<Stratum> strata;
    strata.push_back({SupportPattern{}, dim, true});

    for (int b = data.first_block(); b <= data.last_block(); ++b)
        for (auto& s : block_subsets(data, b)) {
            int size = static_cast<int>(s.size());
            strata.push_back({SupportPattern{std::move(s)}, dim - size, true});
        }

    // type 2: patterns touching every block kill all monomials at once
    if (data.type == 2) {
        std::vector<std::set<VarId>> acc{{}};
        for (int b = data.first_block(); b <= data.last_block(); ++b) {
            std::vector<std::set<VarId>> next;
            for (const auto& partial : acc)
                for (const auto& piece : block_subsets(data, b)) {
                    std::set<VarId> merged = partial;
                    merged.insert(piece.begin(), piece.end());
                    next.push_back(std::move(merged));
                }
            acc = std::move(next);
        }
        for (auto& s : acc) {
            int size = static_cast<int>(s.size());
            strata.push_back({SupportPattern{std::move(s)}, data.n() - size + data.m, true});
        }
    }

    std::sort(strata.begin(), strata.end(),
              [](const Stratum& a, const Stratum& b) { return a.pattern < b.pattern; });
    return strata;
}

SupportPattern stratum_of_point(const Point& point, const TrinomialData& data, double eps) {
    AlgebraPtr alg = relations(data);
    for (VarId v : alg->variables)
        if (point.find(v) == point.end())
            throw NotOnVarietyError("point does not assign a value to " + v.name());
    for (const auto& rel : alg->rels.relations()) {
        double value = std::abs(evaluate_numeric(rel.poly, point));
        double scale = term_magnitude_sum(rel.poly, point);
        if (value > eps * std::max(1.0, scale))
            throw NotOnVarietyError("relation " + rel.poly.str() + " violated: |g| = " +
                                    std::to_string(value));
    }
    SupportPattern J;
    for (VarId v : data.t_variables())
        if (std::abs(point.at(v)) < eps) J.vars.insert(v);
    return J;
}

OneParamSubgroup lambda_subtorus(const TrinomialData& data, int block, int u, int v) {
    if (block < data.first_block() || block > data.last_block())
        throw PositionOutOfBlockError("block " + std::to_string(block) + " out of range");
    const auto& l = data.block_exponents(block);
    if (u < 1 || u > static_cast<int>(l.size()) || v < 1 || v > static_cast<int>(l.size()))
        throw PositionOutOfBlockError("positions must lie inside block " + std::to_string(block));
    if (u == v) throw SamePositionError("lambda subtorus needs two distinct positions");

    OneParamSubgroup sub;
    sub.exponents[VarId::T(block, u)] = l[static_cast<std::size_t>(v - 1)];
    sub.exponents[VarId::T(block, v)] = -l[static_cast<std::size_t>(u - 1)];
    sub.label = "Lambda(" + std::to_string(block) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
    return sub;
}

OneParamSubgroup omega_subtorus(const TrinomialData& data) {
    if (data.type != 2) throw WrongTypeError("Omega exists only for type 2 varieties");
    OneParamSubgroup sub;
    sub.label = "Omega";
    for (int i = data.first_block(); i <= data.last_block(); ++i) {
        long e = 1;
        for (int j = data.first_block(); j <= data.last_block(); ++j) {
            if (j == i) continue;
            e *= data.block_exponents(j)[0];
        }
        sub.exponents[VarId::T(i, 1)] = e;
    }
    return sub;
}

SubgroupCheck verify_one_param_subgroup(const OneParamSubgroup& sub, const PresentedAlgebra& alg) {
    SubgroupCheck check;
    check.acts = true;
    const VarId t = VarId::param_t();
    for (const auto& rel : alg.rels.relations()) {
        // t-weight per term of g under the substitution T -> t^e T
        mpz_class min_w;
        bool first = true;
        std::vector<std::pair<Monomial, mpz_class>> weights;
        for (const auto& [mono, coeff] : rel.poly.terms()) {
            mpz_class w = 0;
            for (const auto& [v, e] : mono.exponents()) w += mpz_class(sub.exponent(v)) * e;
            if (first || w < min_w) min_w = w;
            first = false;
            weights.emplace_back(mono, w);
        }
        if (min_w > 0) min_w = 0;  // clear only negative powers

        SparsePolynomial image;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            mpz_class shifted = weights[i].second - min_w;
            Monomial m = weights[i].first;
            m.multiply_by(t, static_cast<int>(shifted.get_si()));
            image.add_term(m, rel.poly.coefficient(weights[i].first));
        }
        // the image must be t^d * g for a single non-negative d
        mpz_class d = weights.front().second - min_w;
        SparsePolynomial expected;
        for (const auto& [mono, coeff] : rel.poly.terms()) {
            Monomial m = mono;
            m.multiply_by(t, static_cast<int>(d.get_si()));
            expected.add_term(m, coeff);
        }
        if (image == expected) {
            check.t_degrees.push_back(d);
        } else {
            check.acts = false;
            check.t_degrees.push_back(0);
        }
    }
    return check;
}

}  // namespace workbench
