// Monomials as finite exponent maps, compared lexicographically over the
// block-ordered variable sequence. Zero exponents are never stored.
#pragma once

#include <compare>
#include <map>
#include <string>

#include "workbench/varid.hpp"

namespace workbench {

class Monomial {
public:
    Monomial() = default;

    static Monomial variable(VarId v, int exponent = 1) {
        Monomial m;
        m.multiply_by(v, exponent);
        return m;
    }

    bool is_unit() const { return exps_.empty(); }
    int exponent(VarId v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }
    const std::map<VarId, int>& exponents() const { return exps_; }

    bool has_param() const {
        for (const auto& [v, e] : exps_)
            if (v.is_param()) return true;
        return false;
    }

    // exponent += e; erases the entry when it cancels to zero.
    void multiply_by(VarId v, int e) {
        if (e == 0) return;
        int& slot = exps_[v];
        slot += e;
        if (slot == 0) exps_.erase(v);
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps_) r.multiply_by(v, e);
        return r;
    }

    bool divides(const Monomial& m) const {
        for (const auto& [v, e] : exps_)
            if (m.exponent(v) < e) return false;
        return true;
    }

    // Requires this | m.
    Monomial quotient_of(const Monomial& m) const {
        Monomial r = m;
        for (const auto& [v, e] : exps_) r.multiply_by(v, -e);
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (const auto& [v, e] : exps_)
            if (o.exponent(v) != 0) return false;
        return true;
    }

    Monomial pow(int k) const {
        Monomial r;
        for (const auto& [v, e] : exps_) r.multiply_by(v, e * k);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    // Lexicographic over ascending VarId: at the most significant variable
    // where the exponents differ, the larger exponent wins. The unit monomial
    // is minimal, so division terminates.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() || ib != b.exps_.end()) {
            if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
                return std::strong_ordering::greater;  // a has the significant variable, b lacks it
            }
            if (ia == a.exps_.end() || ib->first < ia->first) {
                return std::strong_ordering::less;
            }
            if (ia->second != ib->second) {
                return ia->second > ib->second ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
            }
            ++ia;
            ++ib;
        }
        return std::strong_ordering::equal;
    }

    std::string str() const;  // "T[1][1]^2*S[1]"; "1" for the unit

private:
    std::map<VarId, int> exps_;
};

// Leading-term-first ordering for polynomial term maps.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

}  // namespace workbench
