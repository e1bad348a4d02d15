#include "workbench/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "workbench/errors.hpp"

namespace workbench {

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) out << "*";
        first = false;
        out << v.name();
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

const std::pair<const Monomial, Rational>& SparsePolynomial::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    return *terms_.begin();
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

SparsePolynomial SparsePolynomial::pow(int k) const {
    SparsePolynomial r(1);
    SparsePolynomial base = *this;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_unit()) {
            out << a.str();
        } else if (a.is_one()) {
            out << m.str();
        } else {
            out << a.str() << "*" << m.str();
        }
    }
    return out.str();
}

SparsePolynomial apply_derivation(const std::map<VarId, SparsePolynomial>& images,
                                  const SparsePolynomial& p) {
    SparsePolynomial out;
    for (const auto& [mono, coeff] : p.terms()) {
        for (const auto& [v, e] : mono.exponents()) {
            auto img = images.find(v);
            if (img == images.end() || img->second.is_zero()) continue;
            Monomial rest = mono;
            rest.multiply_by(v, -1);
            out += img->second.times_term(rest, coeff * Rational(e));
        }
    }
    return out;
}

SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<VarId, SparsePolynomial>& assignment) {
    SparsePolynomial out;
    for (const auto& [mono, coeff] : p.terms()) {
        SparsePolynomial term(coeff);
        for (const auto& [v, e] : mono.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                term = term * SparsePolynomial::term(Monomial::variable(v, e), Rational(1));
            } else {
                term = term * it->second.pow(e);
            }
        }
        out += term;
    }
    return out;
}

namespace {

std::complex<double> ipow(std::complex<double> base, int e) {
    std::complex<double> r(1.0, 0.0);
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        if (e > 1) base *= base;
    }
    return r;
}

}  // namespace

std::complex<double> evaluate_numeric(const SparsePolynomial& p,
                                      const std::map<VarId, std::complex<double>>& point) {
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [mono, coeff] : p.terms()) {
        std::complex<double> term(coeff.to_double(), 0.0);
        for (const auto& [v, e] : mono.exponents()) {
            auto it = point.find(v);
            if (it == point.end())
                throw VariableMismatchError("no value for variable " + v.name());
            term *= ipow(it->second, e);
        }
        sum += term;
    }
    return sum;
}

double term_magnitude_sum(const SparsePolynomial& p,
                          const std::map<VarId, std::complex<double>>& point) {
    double sum = 0.0;
    for (const auto& [mono, coeff] : p.terms()) {
        double term = std::abs(coeff.to_double());
        for (const auto& [v, e] : mono.exponents()) {
            auto it = point.find(v);
            if (it == point.end())
                throw VariableMismatchError("no value for variable " + v.name());
            term *= std::pow(std::abs(it->second), e);
        }
        sum += term;
    }
    return sum;
}

}  // namespace workbench
