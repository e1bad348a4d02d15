#include "workbench/transport.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "workbench/errors.hpp"

namespace workbench {

namespace {

constexpr double kSnapTolerance = 1e-6;

std::complex<double> root_of_unity(long k, long order) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
    return {std::cos(angle), std::sin(angle)};
}

// Block monomial value at a point.
std::complex<double> monomial_value(const TrinomialData& data, int block, const Point& p) {
    std::complex<double> v(1.0, 0.0);
    const auto& l = data.block_exponents(block);
    for (int j = 1; j <= static_cast<int>(l.size()); ++j) {
        std::complex<double> base = p.at(VarId::T(block, j));
        for (int e = 0; e < l[static_cast<std::size_t>(j - 1)]; ++e) v *= base;
    }
    return v;
}

// Nearest l-th root of unity to a unit-modulus ratio; index in [0, l).
long snap_root_index(std::complex<double> ratio, long order) {
    if (std::abs(std::abs(ratio) - 1.0) > kSnapTolerance)
        throw NumericFailureError("expected a unit-modulus ratio, got modulus " +
                                  std::to_string(std::abs(ratio)));
    double turns = std::arg(ratio) / (2.0 * std::numbers::pi) * static_cast<double>(order);
    long k = std::lround(turns);
    k %= order;
    if (k < 0) k += order;
    if (std::abs(ratio - root_of_unity(k, order)) > kSnapTolerance)
        throw NumericFailureError("ratio is not close to any root of unity of order " +
                                  std::to_string(order));
    return k;
}

}  // namespace

Point apply_certificate(const TransportCertificate& cert, Point point) {
    for (const auto& step : cert.steps) {
        for (const auto& [v, f] : step.diagonal) point.at(v) *= f;
        for (const auto& [v, off] : step.translation) point.at(v) += off;
    }
    return point;
}

TransportCertificate transport(const Point& alpha, const Point& beta, const TrinomialData& data,
                               double eps) {
    SupportPattern ja = stratum_of_point(alpha, data, eps);
    SupportPattern jb = stratum_of_point(beta, data, eps);
    if (ja.empty()) throw EmptySupportError("transport requires a nonempty vanishing pattern");
    if (!(ja == jb))
        throw DifferentStrataError("points lie on strata " + ja.str() + " and " + jb.str());

    TransportCertificate cert;
    Point cur = alpha;
    const int first = data.first_block(), last = data.last_block();
    std::set<int> touched = ja.blocks();
    std::vector<int> untouched;
    for (int b = first; b <= last; ++b)
        if (!touched.count(b)) untouched.push_back(b);

    auto push = [&](TransportStep step) {
        for (const auto& [v, f] : step.diagonal) cur.at(v) *= f;
        for (const auto& [v, off] : step.translation) cur.at(v) += off;
        cert.steps.push_back(std::move(step));
    };

    // Type 2: one Omega step matches every untouched block monomial at once
    // (the values of both points are proportional along the kernel line).
    if (data.type == 2 && !untouched.empty()) {
        int j0 = untouched.front();
        std::complex<double> mu = monomial_value(data, j0, beta) / monomial_value(data, j0, cur);
        if (mu != std::complex<double>(1.0, 0.0)) {
            long P = 1;
            for (int b = first; b <= last; ++b) P *= data.block_exponents(b)[0];
            std::complex<double> t = std::pow(mu, 1.0 / static_cast<double>(P));
            TransportStep step;
            step.kind = TransportStep::Kind::Omega;
            step.label = "Omega";
            for (int b = first; b <= last; ++b) {
                long e = P / data.block_exponents(b)[0];
                step.diagonal[VarId::T(b, 1)] = std::pow(t, static_cast<double>(e));
            }
            push(std::move(step));
        }
    }

    // Untouched blocks: Lambda steps on positions >= 2, then close the block
    // monomial on position 1 with a branch adjustment and, if the defect lies
    // outside the connected torus, a flagged root-of-unity correction.
    for (int b : untouched) {
        const auto& l = data.block_exponents(b);
        const long l1 = l[0];
        for (int v = 2; v <= static_cast<int>(l.size()); ++v) {
            VarId var = VarId::T(b, v);
            std::complex<double> ratio = beta.at(var) / cur.at(var);
            if (ratio == std::complex<double>(1.0, 0.0)) continue;
            std::complex<double> t = std::pow(ratio, -1.0 / static_cast<double>(l1));
            TransportStep step;
            step.kind = TransportStep::Kind::Lambda;
            step.label = "Lambda(" + std::to_string(b) + ",1," + std::to_string(v) + ")";
            step.diagonal[VarId::T(b, 1)] =
                std::pow(t, static_cast<double>(l[static_cast<std::size_t>(v - 1)]));
            step.diagonal[var] = ratio;  // = t^{-l1} exactly
            push(std::move(step));
        }
        std::complex<double> rho = beta.at(VarId::T(b, 1)) / cur.at(VarId::T(b, 1));
        long k = snap_root_index(rho, l1);
        if (k != 0) {
            // defect class in Z/g, g = gcd of the block exponents
            long g = l1;
            for (int e : l) g = std::gcd(g, static_cast<long>(e));
            long k_res = k % g;
            long k_conn = k - k_res;  // reachable by Lambda branch shifts
            if (k_conn != 0) {
                TransportStep step;
                step.kind = TransportStep::Kind::Lambda;
                step.label = "Lambda branch adjustment, block " + std::to_string(b);
                step.diagonal[VarId::T(b, 1)] = root_of_unity(k_conn, l1);
                push(std::move(step));
            }
            if (k_res != 0) {
                TransportStep step;
                step.kind = TransportStep::Kind::RootOfUnity;
                step.label = "root of unity exp(2*pi*i*" + std::to_string(k_res) + "/" +
                             std::to_string(l1) + "), block " + std::to_string(b);
                step.diagonal[VarId::T(b, 1)] = root_of_unity(k_res, l1);
                step.root_of_unity = true;
                push(std::move(step));
            }
        }
    }

    // Touched blocks: anchor at the smallest vanishing position; every
    // non-vanishing coordinate gets its own Lambda scaling.
    for (int b : touched) {
        const auto& l = data.block_exponents(b);
        int anchor = 0;
        for (int j = 1; j <= static_cast<int>(l.size()) && anchor == 0; ++j)
            if (ja.contains(VarId::T(b, j))) anchor = j;
        const long la = l[static_cast<std::size_t>(anchor - 1)];
        for (int v = 1; v <= static_cast<int>(l.size()); ++v) {
            VarId var = VarId::T(b, v);
            if (ja.contains(var)) continue;
            std::complex<double> ratio = beta.at(var) / cur.at(var);
            if (ratio == std::complex<double>(1.0, 0.0)) continue;
            std::complex<double> t = std::pow(ratio, -1.0 / static_cast<double>(la));
            TransportStep step;
            step.kind = TransportStep::Kind::Lambda;
            step.label = "Lambda(" + std::to_string(b) + "," + std::to_string(anchor) + "," +
                         std::to_string(v) + ")";
            step.diagonal[VarId::T(b, anchor)] =
                std::pow(t, static_cast<double>(l[static_cast<std::size_t>(v - 1)]));
            step.diagonal[var] = ratio;  // = t^{-l_anchor} exactly
            push(std::move(step));
        }
    }

    if (data.m > 0) {
        TransportStep step;
        step.kind = TransportStep::Kind::STranslation;
        step.label = "S translation";
        bool any = false;
        for (int kk = 1; kk <= data.m; ++kk) {
            VarId v = VarId::S(kk);
            step.translation[v] = beta.at(v) - cur.at(v);
            if (step.translation[v] != std::complex<double>(0.0, 0.0)) any = true;
        }
        if (any) push(std::move(step));
    }

    double residual = 0.0;
    for (const auto& [v, target] : beta) {
        double err = std::abs(cur.at(v) - target) / std::max(1.0, std::abs(target));
        residual = std::max(residual, err);
    }
    cert.residual = residual;
    if (residual > eps)
        throw NumericFailureError("transport residual " + std::to_string(residual) +
                                  " exceeds tolerance");
    return cert;
}

}  // namespace workbench
