#include "workbench/lnd_search.hpp"

#include <algorithm>

#include "workbench/errors.hpp"

namespace workbench {

namespace {

// Monomials over vars with total degree <= max_degree.
void enumerate_monomials(const std::vector<VarId>& vars, std::size_t idx, int budget,
                         Monomial& current, std::vector<Monomial>& out) {
    if (idx == vars.size()) {
        out.push_back(current);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        if (e > 0) current.multiply_by(vars[idx], 1);
        enumerate_monomials(vars, idx + 1, budget - e, current, out);
    }
    current.multiply_by(vars[idx], -budget);
}

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Primitive integer scaling with the first nonzero entry positive.
void canonicalize(std::vector<Rational>& v) {
    mpz_class lcm_den = 1;
    for (const auto& r : v)
        if (!r.is_zero()) lcm_den = lcm(lcm_den, r.den());
    mpz_class gcd_num = 0;
    for (const auto& r : v)
        if (!r.is_zero()) gcd_num = gcd(gcd_num, mpz_class(r.num() * (lcm_den / r.den())));
    if (gcd_num == 0) return;
    Rational scale(lcm_den, gcd_num);
    for (const auto& r : v) {
        if (r.is_zero()) continue;
        if ((r * scale).sign() < 0) scale = -scale;
        break;
    }
    for (auto& r : v) r *= scale;
}

}  // namespace

std::vector<Derivation> search_homogeneous_lnds(const AlgebraPtr& alg, const VariableGrading& w,
                                                const std::vector<mpz_class>& g0_free,
                                                int max_image_degree, int cap) {
    if (static_cast<int>(g0_free.size()) != w.free_rank())
        throw DegreeOutOfRangeError("g0 must live in the free weight lattice of rank " +
                                    std::to_string(w.free_rank()));
    if (max_image_degree < 1) throw DegreeOutOfRangeError("max image degree must be >= 1");

    std::vector<Monomial> pool;
    {
        Monomial scratch;
        enumerate_monomials(alg->variables, 0, max_image_degree, scratch, pool);
    }
    // keep normal-form monomials only (not divisible by any leading monomial)
    std::erase_if(pool, [&](const Monomial& m) {
        for (const auto& rel : alg->rels.relations())
            if (rel.leading.divides(m)) return true;
        return false;
    });
    std::sort(pool.begin(), pool.end(), MonomialGreater{});

    // unknown j <-> (variable, candidate monomial of weight deg(x) + g0)
    std::vector<std::pair<VarId, Monomial>> unknowns;
    for (VarId x : alg->variables) {
        std::vector<mpz_class> target = w.degree(x).free;
        for (std::size_t i = 0; i < target.size(); ++i) target[i] += g0_free[i];
        for (const Monomial& m : pool) {
            if (w.degree_of_monomial(m).free == target) unknowns.emplace_back(x, m);
        }
    }
    if (unknowns.empty()) return {};

    // rows of the linear system NF(delta(g)) = 0, one per (relation, monomial)
    std::map<std::pair<std::size_t, Monomial>, std::vector<Rational>> rows;
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        std::map<VarId, SparsePolynomial> single{
            {unknowns[j].first, SparsePolynomial::term(unknowns[j].second, Rational(1))}};
        for (std::size_t gi = 0; gi < alg->rels.size(); ++gi) {
            SparsePolynomial e =
                normal_form(apply_derivation(single, alg->rels.at(gi).poly), alg->rels);
            for (const auto& [mono, coeff] : e.terms()) {
                auto& row = rows[{gi, mono}];
                row.resize(unknowns.size());
                row[j] = coeff;
            }
        }
    }
    std::vector<std::vector<Rational>> matrix;
    matrix.reserve(rows.size());
    for (auto& [key, row] : rows) {
        row.resize(unknowns.size());
        matrix.push_back(std::move(row));
    }

    std::vector<int> pivots = rref(matrix);
    std::vector<bool> is_pivot(unknowns.size(), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Derivation> found;
    for (std::size_t free_col = 0; free_col < unknowns.size(); ++free_col) {
        if (is_pivot[free_col]) continue;
        // nullspace vector: 1 at the free column, back-substituted pivots
        std::vector<Rational> sol(unknowns.size());
        sol[free_col] = Rational(1);
        for (std::size_t r = 0; r < matrix.size(); ++r)
            sol[static_cast<std::size_t>(pivots[r])] = -matrix[r][free_col];
        canonicalize(sol);

        std::map<VarId, SparsePolynomial> images;
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            if (sol[j].is_zero()) continue;
            images[unknowns[j].first] += SparsePolynomial::term(unknowns[j].second, sol[j]);
        }
        Derivation candidate(alg, std::move(images));
        if (candidate.is_zero()) continue;
        NilpotencyReport rep = check_locally_nilpotent(candidate, cap);
        if (rep.conclusive_positive()) found.push_back(std::move(candidate));
    }
    std::sort(found.begin(), found.end(),
              [](const Derivation& a, const Derivation& b) { return a.str() < b.str(); });
    return found;
}

}  // namespace workbench
