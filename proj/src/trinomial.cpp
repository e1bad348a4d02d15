#include "workbench/trinomial.hpp"

#include <algorithm>

#include "workbench/errors.hpp"

namespace workbench {

Monomial TrinomialData::block_monomial(int block) const {
    Monomial m;
    const auto& l = block_exponents(block);
    for (int j = 1; j <= static_cast<int>(l.size()); ++j)
        m.multiply_by(VarId::T(block, j), l[static_cast<std::size_t>(j - 1)]);
    return m;
}

std::vector<VarId> TrinomialData::t_variables() const {
    std::vector<VarId> vars;
    for (int b = first_block(); b <= last_block(); ++b)
        for (int j = 1; j <= block_size(b); ++j) vars.push_back(VarId::T(b, j));
    return vars;
}

std::vector<VarId> TrinomialData::s_variables() const {
    std::vector<VarId> vars;
    for (int k = 1; k <= m; ++k) vars.push_back(VarId::S(k));
    return vars;
}

std::vector<VarId> TrinomialData::all_variables() const {
    std::vector<VarId> vars = t_variables();
    for (auto v : s_variables()) vars.push_back(v);
    return vars;
}

VariableBounds TrinomialData::bounds() const {
    VariableBounds b;
    b.first_block = first_block();
    for (const auto& l : exponents) b.block_sizes.push_back(static_cast<int>(l.size()));
    b.s_count = m;
    return b;
}

ValidationReport validate(const TrinomialData& data) {
    ValidationReport report;
    auto flag = [&](std::string path, std::string code, std::string message) {
        report.ok = false;
        report.violations.push_back({std::move(path), std::move(code), std::move(message)});
    };

    if (data.type != 1 && data.type != 2) flag("/type", "BadType", "type must be 1 or 2");
    if (data.m < 0) flag("/m", "NegativeFreePart", "m must be non-negative");
    if (data.exponents.empty()) {
        flag("/blocks", "NoBlocks", "at least one block is required");
        return report;
    }
    for (std::size_t i = 0; i < data.exponents.size(); ++i) {
        const auto& l = data.exponents[i];
        if (l.empty())
            flag("/blocks/" + std::to_string(i), "EmptyBlock", "block sizes must be positive");
        for (std::size_t j = 0; j < l.size(); ++j)
            if (l[j] <= 0)
                flag("/blocks/" + std::to_string(i) + "/l/" + std::to_string(j),
                     "NonPositiveExponent", "exponents must be positive integers");
    }
    if (data.type == 1) {
        int r = data.block_count();
        if (r < 2) flag("/blocks", "TooFewBlocks", "type 1 requires r >= 2 blocks");
        if (static_cast<int>(data.constants1.size()) != r) {
            flag("/A", "ConstantCountMismatch",
                 "type 1 expects exactly r = " + std::to_string(r) + " constants");
        } else {
            for (std::size_t i = 0; i < data.constants1.size(); ++i)
                for (std::size_t j = i + 1; j < data.constants1.size(); ++j)
                    if (data.constants1[i] == data.constants1[j])
                        flag("/A/" + std::to_string(j), "DuplicateConstant",
                             "a_" + std::to_string(i + 1) + " = a_" + std::to_string(j + 1));
        }
    } else if (data.type == 2) {
        int cols = data.block_count();  // r + 1
        if (cols < 3) flag("/blocks", "TooFewBlocks", "type 2 requires r >= 2, i.e. at least 3 blocks");
        if (static_cast<int>(data.constants2[0].size()) != cols ||
            static_cast<int>(data.constants2[1].size()) != cols) {
            flag("/A", "ConstantCountMismatch",
                 "type 2 expects a 2 x " + std::to_string(cols) + " constant matrix");
        } else {
            for (int i = 0; i < cols; ++i) {
                for (int j = i + 1; j < cols; ++j) {
                    Rational minor = data.constants2[0][static_cast<std::size_t>(i)] *
                                         data.constants2[1][static_cast<std::size_t>(j)] -
                                     data.constants2[0][static_cast<std::size_t>(j)] *
                                         data.constants2[1][static_cast<std::size_t>(i)];
                    if (minor.is_zero())
                        flag("/A", "DependentColumns",
                             "columns " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are linearly dependent");
                }
            }
        }
    }
    return report;
}

int dimension(const TrinomialData& data) { return data.m + data.n() - data.r() + 1; }

TrinomialData strip_free_part(TrinomialData data) {
    data.m = 0;
    return data;
}

bool PresentedAlgebra::contains_variable(VarId v) const {
    return std::find(variables.begin(), variables.end(), v) != variables.end();
}

SparsePolynomial PresentedAlgebra::normal_form(const SparsePolynomial& p) const {
    for (VarId v : p.variables())
        if (!v.is_param() && !contains_variable(v))
            throw VariableMismatchError("variable " + v.name() + " is not a generator of the algebra");
    return workbench::normal_form(p, rels);
}

namespace {

// 2x2 minor of columns (i, j) of the type-2 constant matrix.
Rational minor2(const TrinomialData& d, int i, int j) {
    return d.constants2[0][static_cast<std::size_t>(i)] * d.constants2[1][static_cast<std::size_t>(j)] -
           d.constants2[0][static_cast<std::size_t>(j)] * d.constants2[1][static_cast<std::size_t>(i)];
}

}  // namespace

AlgebraPtr relations(const TrinomialData& data) {
    ValidationReport report = validate(data);
    if (!report.ok)
        throw InvalidDataError("invalid trinomial data: " + report.violations.front().message);

    std::vector<SparsePolynomial> polys;
    if (data.type == 1) {
        for (int i = 1; i <= data.r() - 1; ++i) {
            SparsePolynomial g = SparsePolynomial::term(data.block_monomial(i), Rational(1));
            g -= SparsePolynomial::term(data.block_monomial(i + 1), Rational(1));
            g -= SparsePolynomial(data.constants1[static_cast<std::size_t>(i)] -
                                  data.constants1[static_cast<std::size_t>(i - 1)]);
            polys.push_back(g);
        }
    } else {
        // Cofactor expansion along the monomial row.
        for (int i = 0; i <= data.r() - 2; ++i) {
            SparsePolynomial g =
                SparsePolynomial::term(data.block_monomial(i), minor2(data, i + 1, i + 2));
            g -= SparsePolynomial::term(data.block_monomial(i + 1), minor2(data, i, i + 2));
            g += SparsePolynomial::term(data.block_monomial(i + 2), minor2(data, i, i + 1));
            polys.push_back(g);
        }
    }

    auto alg = std::make_shared<PresentedAlgebra>();
    alg->variables = data.all_variables();
    alg->rels = RelationSet::from_polynomials(polys);
    alg->origin = PresentedAlgebra::Origin::Trinomial;
    alg->data = data;
    return alg;
}

AlgebraPtr custom_algebra(std::vector<VarId> variables, const SparsePolynomial& relation) {
    auto alg = std::make_shared<PresentedAlgebra>();
    alg->variables = std::move(variables);
    alg->rels = RelationSet::from_polynomials({relation});
    alg->origin = PresentedAlgebra::Origin::Custom;
    return alg;
}

}  // namespace workbench
