#include "workbench/sampling.hpp"

#include <cmath>
#include <numbers>

#include "workbench/errors.hpp"

namespace workbench {

StratumSampler::StratumSampler(const TrinomialData& data, std::uint64_t seed)
    : data_(data), rng_(seed) {
    ValidationReport report = validate(data);
    if (!report.ok)
        throw InvalidDataError("invalid trinomial data: " + report.violations.front().message);
}

std::complex<double> StratumSampler::random_nonzero() {
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double a = angle(rng_);
    return std::polar(mag(rng_), a);
}

StratumSampler::Result StratumSampler::sample(const SupportPattern& pattern) {
    Result res;
    for (VarId v : pattern.vars)
        if (!v.is_T()) throw InvalidDataError("support patterns contain T variables only");

    const int first = data_.first_block(), last = data_.last_block();
    std::set<int> touched = pattern.blocks();
    std::vector<int> untouched;
    for (int b = first; b <= last; ++b)
        if (!touched.count(b)) untouched.push_back(b);

    // Block monomial values consistent with the relations and with
    // v_b = 0 exactly on the touched blocks.
    std::map<int, std::complex<double>> value;
    if (data_.type == 1) {
        // v_b = v_first + (a_first - a_b); at most one block may vanish.
        if (touched.size() > 1) return res;
        auto a = [&](int b) {
            return data_.constants1[static_cast<std::size_t>(b - first)].to_double();
        };
        if (touched.size() == 1) {
            int b0 = *touched.begin();
            for (int b = first; b <= last; ++b) value[b] = std::complex<double>(a(b0) - a(b), 0.0);
        } else {
            for (;;) {
                std::complex<double> v1 = random_nonzero();
                bool ok = true;
                for (int b = first; b <= last; ++b) {
                    value[b] = v1 + std::complex<double>(a(first) - a(b), 0.0);
                    if (std::abs(value[b]) < 0.05) ok = false;
                }
                if (ok) break;
            }
            res.free_parameters += 1;
        }
    } else {
        // v_b = lambda*a_1b + mu*a_2b; two touched blocks force lambda = mu = 0.
        auto a1 = [&](int b) { return data_.constants2[0][static_cast<std::size_t>(b - first)]; };
        auto a2 = [&](int b) { return data_.constants2[1][static_cast<std::size_t>(b - first)]; };
        if (touched.size() >= 2) {
            if (static_cast<int>(touched.size()) != data_.block_count()) return res;
            for (int b = first; b <= last; ++b) value[b] = 0.0;
        } else if (touched.size() == 1) {
            int b0 = *touched.begin();
            // (lambda, mu) proportional to (-a2(b0), a1(b0)); v_b = t * minor(b0, b)
            std::complex<double> t = random_nonzero();
            for (int b = first; b <= last; ++b) {
                Rational minor = a1(b0) * a2(b) - a1(b) * a2(b0);
                value[b] = t * minor.to_double();
            }
            res.free_parameters += 1;
        } else {
            for (;;) {
                std::complex<double> lambda = random_nonzero(), mu = random_nonzero();
                bool ok = true;
                for (int b = first; b <= last; ++b) {
                    value[b] = lambda * a1(b).to_double() + mu * a2(b).to_double();
                    if (std::abs(value[b]) < 0.05) ok = false;
                }
                if (ok) break;
            }
            res.free_parameters += 2;
        }
    }

    // Coordinates. Touched blocks: zeros on the pattern, free elsewhere.
    for (int b : touched) {
        for (int j = 1; j <= data_.block_size(b); ++j) {
            VarId v = VarId::T(b, j);
            if (pattern.contains(v)) {
                res.point[v] = 0.0;
            } else {
                res.point[v] = random_nonzero();
                res.free_parameters += 1;
            }
        }
    }
    // Untouched blocks: positions >= 2 free, position 1 solves the monomial.
    for (int b : untouched) {
        const auto& l = data_.block_exponents(b);
        std::complex<double> rest(1.0, 0.0);
        for (int j = 2; j <= static_cast<int>(l.size()); ++j) {
            VarId v = VarId::T(b, j);
            res.point[v] = random_nonzero();
            res.free_parameters += 1;
            rest *= std::pow(res.point[v], l[static_cast<std::size_t>(j - 1)]);
        }
        // random root branch, so every connected component of the stratum is hit
        std::complex<double> root = std::pow(value[b] / rest, 1.0 / l[0]);
        long branch = std::uniform_int_distribution<long>(0, l[0] - 1)(rng_);
        double angle = 2.0 * std::numbers::pi * static_cast<double>(branch) / l[0];
        res.point[VarId::T(b, 1)] = root * std::polar(1.0, angle);
    }
    for (int k = 1; k <= data_.m; ++k) {
        res.point[VarId::S(k)] = random_nonzero();
        res.free_parameters += 1;
    }
    res.realizable = true;
    return res;
}

Point StratumSampler::sample_point(const SupportPattern& pattern) {
    Result res = sample(pattern);
    if (!res.realizable)
        throw InvalidDataError("pattern " + pattern.str() + " is not realizable on the variety");
    return std::move(res.point);
}

}  // namespace workbench
