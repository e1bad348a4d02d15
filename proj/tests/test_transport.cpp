#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "workbench/sampling.hpp"
#include "workbench/transport.hpp"

using namespace workbench;
using wbtest::Gen;

namespace {

const VarId x = VarId::T(1, 1);
const VarId y = VarId::T(1, 2);
const VarId z = VarId::T(2, 1);

// every diagonal step must satisfy the stabilizer constraints: block products
// equal 1 (type 1) or equal across blocks (type 2)
void check_stabilizer(const TransportCertificate& cert, const TrinomialData& data) {
    for (const auto& step : cert.steps) {
        if (step.kind == TransportStep::Kind::STranslation) continue;
        std::complex<double> common(0.0, 0.0);
        bool first = true;
        for (int b = data.first_block(); b <= data.last_block(); ++b) {
            std::complex<double> prod(1.0, 0.0);
            const auto& l = data.block_exponents(b);
            for (int j = 1; j <= static_cast<int>(l.size()); ++j) {
                auto it = step.diagonal.find(VarId::T(b, j));
                std::complex<double> f = it == step.diagonal.end() ? 1.0 : it->second;
                for (int e = 0; e < l[static_cast<std::size_t>(j - 1)]; ++e) prod *= f;
            }
            if (data.type == 1) {
                CHECK(std::abs(prod - 1.0) < 1e-9);
            } else if (first) {
                common = prod;
                first = false;
            } else {
                CHECK(std::abs(prod - common) < 1e-9);
            }
        }
    }
}

bool block_gcd_exceeds_one(const TrinomialData& data) {
    for (int b = data.first_block(); b <= data.last_block(); ++b) {
        long g = 0;
        for (int e : data.block_exponents(b)) g = std::gcd(g, static_cast<long>(e));
        if (g > 1) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("hand-worked Danielewski transports") {
    TrinomialData d = wbtest::danielewski(Rational(-1));  // xy - z^2 + 1 = 0

    // alpha = (0, 2, z0) -> beta = (0, 5, z0): single Lambda step with t = 2/5
    Point alpha{{x, 0.0}, {y, 2.0}, {z, 1.0}};
    Point beta{{x, 0.0}, {y, 5.0}, {z, 1.0}};
    TransportCertificate cert = transport(alpha, beta, d, 1e-9);
    REQUIRE(cert.steps.size() == 1);
    CHECK(cert.steps[0].kind == TransportStep::Kind::Lambda);
    CHECK(std::abs(cert.steps[0].diagonal.at(y) - std::complex<double>(2.5, 0.0)) < 1e-12);
    CHECK(cert.residual <= 1e-12);
    CHECK_FALSE(cert.used_root_of_unity());

    // identity certificate
    TransportCertificate id = transport(alpha, alpha, d, 1e-9);
    CHECK(id.steps.empty());
    CHECK(id.residual == 0.0);

    // sign flip in the z coordinate needs the non-connected stabilizer
    Point gamma{{x, 0.0}, {y, 2.0}, {z, -1.0}};
    TransportCertificate flip = transport(alpha, gamma, d, 1e-9);
    CHECK(flip.used_root_of_unity());
    bool found = false;
    for (const auto& s : flip.steps)
        if (s.root_of_unity) {
            REQUIRE(s.diagonal.count(z));
            CHECK(std::abs(s.diagonal.at(z) + 1.0) < 1e-12);  // t_z = -1 with t_z^2 = 1
            found = true;
        }
    CHECK(found);
    check_stabilizer(flip, d);

    // errors
    Point other{{x, 3.0}, {y, 1.0}, {z, 2.0}};
    CHECK_THROWS_AS(transport(alpha, other, d, 1e-9), DifferentStrataError);
    CHECK_THROWS_AS(transport(other, other, d, 1e-9), EmptySupportError);
}

TEST_CASE("random same-stratum transports reach 1e-9") {
    std::vector<TrinomialData> instances;
    instances.push_back(wbtest::danielewski(Rational(-1)));
    instances.push_back(wbtest::type2_diag(2, 2, 2));
    instances.push_back(wbtest::type2_diag(1, 1, 1));
    {
        TrinomialData d;  // type 1 with a bigger touched block and S part
        d.type = 1;
        d.m = 2;
        d.exponents = {{1, 2, 2}, {3}};
        d.constants1 = {Rational(0), Rational(2)};
        instances.push_back(d);
    }
    {
        TrinomialData d;  // type 2 with mixed block sizes
        d.type = 2;
        d.m = 1;
        d.exponents = {{2, 1}, {2}, {3}};
        d.constants2[0] = {Rational(1), Rational(0), Rational(1)};
        d.constants2[1] = {Rational(0), Rational(1), Rational(1)};
        instances.push_back(d);
    }

    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        const TrinomialData& data = instances[idx];
        CAPTURE(idx);
        StratumSampler sampler(data, 97531 + idx);
        std::vector<Stratum> strata = admissible_supports(data);
        bool any_flag = false;
        int pairs = 0;
        for (std::size_t si = 0; pairs < 100; si = (si + 1) % strata.size()) {
            const Stratum& s = strata[si];
            if (s.pattern.empty()) continue;
            Point a = sampler.sample_point(s.pattern);
            Point b = sampler.sample_point(s.pattern);
            TransportCertificate cert = transport(a, b, data, 1e-9);
            CHECK(cert.residual <= 1e-9);
            Point replay = apply_certificate(cert, a);
            for (const auto& [v, val] : b)
                CHECK(std::abs(replay.at(v) - val) <= 1e-9 * std::max(1.0, std::abs(val)));
            check_stabilizer(cert, data);
            any_flag = any_flag || cert.used_root_of_unity();
            ++pairs;
        }
        // flagged steps appear iff some block has exponent gcd > 1
        if (block_gcd_exceeds_one(data)) CHECK(any_flag);
        else CHECK_FALSE(any_flag);
    }
}
