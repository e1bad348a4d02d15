// Shared generators for the property-style tests: random rationals,
// monomials, polynomials, matrices and valid trinomial data, all driven by a
// seeded mt19937_64 so every run is reproducible.
#pragma once

#include <random>
#include <vector>

#include "workbench/grading.hpp"
#include "workbench/int_matrix.hpp"
#include "workbench/polynomial.hpp"
#include "workbench/trinomial.hpp"

namespace wbtest {

using namespace workbench;

inline std::vector<VarId> danielewski_vars() {
    return {VarId::T(1, 1), VarId::T(1, 2), VarId::T(2, 1)};
}

inline TrinomialData danielewski(const Rational& c0 = Rational(1)) {
    TrinomialData d;
    d.type = 1;
    d.m = 0;
    d.exponents = {{1, 1}, {2}};
    d.constants1 = {Rational(0), c0};
    return d;
}

inline TrinomialData type2_diag(int l0, int l1, int l2) {
    TrinomialData d;
    d.type = 2;
    d.m = 0;
    d.exponents = {{l0}, {l1}, {l2}};
    d.constants2[0] = {Rational(1), Rational(0), Rational(1)};
    d.constants2[1] = {Rational(0), Rational(1), Rational(1)};
    return d;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Rational rational(int bound) {
        int num = uniform(-bound, bound);
        int den = uniform(1, 4);
        return Rational(num, den);
    }

    Rational nonzero_rational(int bound) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }

    Monomial monomial(const std::vector<VarId>& vars, int max_degree) {
        Monomial m;
        int budget = uniform(0, max_degree);
        for (int i = 0; i < budget; ++i)
            m.multiply_by(vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))], 1);
        return m;
    }

    SparsePolynomial polynomial(const std::vector<VarId>& vars, int max_degree, int coeff_bound,
                                int max_terms = 6) {
        SparsePolynomial p;
        int terms = uniform(0, max_terms);
        for (int i = 0; i < terms; ++i) p.add_term(monomial(vars, max_degree), rational(coeff_bound));
        return p;
    }

    IntMatrix int_matrix(int max_dim, int entry_bound) {
        IntMatrix m(uniform(1, max_dim), uniform(1, max_dim));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = uniform(-entry_bound, entry_bound);
        return m;
    }

    // Random valid instance within the documented bounds (r <= 4, n_i <= 3,
    // l_ij <= 5, m <= 2); retries until validation passes.
    TrinomialData trinomial_data() {
        for (;;) {
            TrinomialData d;
            d.type = uniform(1, 2);
            d.m = uniform(0, 2);
            int r = uniform(2, 4);
            int blocks = d.type == 1 ? r : r + 1;
            d.exponents.clear();
            for (int b = 0; b < blocks; ++b) {
                std::vector<int> l(static_cast<std::size_t>(uniform(1, 3)));
                for (auto& e : l) e = uniform(1, 5);
                d.exponents.push_back(std::move(l));
            }
            if (d.type == 1) {
                d.constants1.clear();
                for (int i = 0; i < r; ++i) d.constants1.push_back(rational(6));
            } else {
                d.constants2[0].clear();
                d.constants2[1].clear();
                for (int i = 0; i <= r; ++i) {
                    d.constants2[0].push_back(rational(4));
                    d.constants2[1].push_back(rational(4));
                }
            }
            if (validate(d).ok) return d;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace wbtest
