// Sparse multivariate polynomials over the rationals. Terms are kept in a
// leading-term-first map; no zero coefficient is ever stored, equality is
// structural, and printing follows the canonical block order.
#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>

#include "workbench/monomial.hpp"
#include "workbench/rational.hpp"

namespace workbench {

class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    SparsePolynomial() = default;
    SparsePolynomial(const Rational& c) {  // NOLINT: implicit constants read naturally
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    SparsePolynomial(long c) : SparsePolynomial(Rational(c)) {}  // NOLINT

    static SparsePolynomial variable(VarId v, int exponent = 1) {
        return term(Monomial::variable(v, exponent), Rational(1));
    }
    static SparsePolynomial term(const Monomial& m, const Rational& c) {
        SparsePolynomial p;
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {  // 0 for the zero polynomial
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    // Leading term under the block order; requires a nonzero polynomial.
    const std::pair<const Monomial, Rational>& leading_term() const;

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparsePolynomial operator-() const {
        SparsePolynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    SparsePolynomial scaled(const Rational& c) const {
        SparsePolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    // this * c * m
    SparsePolynomial times_term(const Monomial& m, const Rational& c) const {
        SparsePolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
        return r;
    }

    SparsePolynomial pow(int k) const;

    void collect_variables(std::set<VarId>& out) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exponents()) out.insert(v);
    }
    std::set<VarId> variables() const {
        std::set<VarId> out;
        collect_variables(out);
        return out;
    }
    bool has_param() const {
        for (const auto& [m, c] : terms_)
            if (m.has_param()) return true;
        return false;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    TermMap terms_;
};

// Unique Leibniz extension of the variable images; variables without an image
// are sent to zero. Linear in p, and delta(pq) = p delta(q) + q delta(p).
SparsePolynomial apply_derivation(const std::map<VarId, SparsePolynomial>& images,
                                  const SparsePolynomial& p);

// Ring-homomorphic substitution; variables without an entry map to themselves.
SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<VarId, SparsePolynomial>& assignment);

// Term-wise evaluation; every variable of p must have a value.
std::complex<double> evaluate_numeric(const SparsePolynomial& p,
                                      const std::map<VarId, std::complex<double>>& point);

// Sum over terms of |coefficient| * prod |value|^e, the scale used for
// relative on-variety tests.
double term_magnitude_sum(const SparsePolynomial& p,
                          const std::map<VarId, std::complex<double>>& point);

}  // namespace workbench
