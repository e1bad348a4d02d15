#include "workbench/hypersurface.hpp"

#include "workbench/errors.hpp"

namespace workbench {

HypersurfaceExample example_hypersurface(int k, const std::vector<int>& b,
                                         const std::vector<int>& c, int p,
                                         const std::vector<int>& r) {
    if (k < 1 || p < 1 || b.empty() || c.empty())
        throw InvalidDataError("hypersurface family needs k, p >= 1 and nonempty exponent lists");
    if (static_cast<int>(r.size()) != p)
        throw InvalidDataError("r must list exactly p exponents");
    for (const auto& list : {b, c, r})
        for (int e : list)
            if (e < 1) throw InvalidDataError("hypersurface exponents must be positive");

    using H = HypersurfaceExample;
    std::vector<VarId> vars;
    Monomial X, Y, Z, V;
    for (int i = 1; i <= k; ++i) {
        vars.push_back(H::x(i));
        X.multiply_by(H::x(i), 1);
    }
    for (int j = 1; j <= static_cast<int>(b.size()); ++j) {
        vars.push_back(H::y(j));
        Y.multiply_by(H::y(j), b[static_cast<std::size_t>(j - 1)]);
    }
    for (int j = 1; j <= static_cast<int>(c.size()); ++j) {
        vars.push_back(H::z(j));
        Z.multiply_by(H::z(j), c[static_cast<std::size_t>(j - 1)]);
    }
    vars.push_back(H::u());
    for (int j = 1; j <= p; ++j) {
        vars.push_back(H::v(j));
        V.multiply_by(H::v(j), r[static_cast<std::size_t>(j - 1)]);
    }

    SparsePolynomial f = SparsePolynomial::term(X * Y, Rational(1));
    f += SparsePolynomial::term(X * Z, Rational(1));
    f -= SparsePolynomial::term(Monomial::variable(H::u()) * V, Rational(1));
    AlgebraPtr alg = custom_algebra(vars, f);

    // delta(u) = b1 * x * y1^{b1-1} * y2^{b2} ... ; delta(y1) = v^r
    Monomial du = X * Y;
    du.multiply_by(H::y(1), -1);
    std::map<VarId, SparsePolynomial> images;
    images[H::u()] = SparsePolynomial::term(du, Rational(b[0]));
    images[H::y(1)] = SparsePolynomial::term(V, Rational(1));

    HypersurfaceExample out{alg, Derivation(alg, std::move(images)),
                            RationalFunction{
                                SparsePolynomial::term(Monomial::variable(H::u()) * V, Rational(1)),
                                SparsePolynomial::term(X * Z, Rational(1))}};
    return out;
}

}  // namespace workbench
