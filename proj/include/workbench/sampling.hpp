// Numeric point sampler per vanishing pattern. Free coordinates are drawn
// from an annulus, block monomial values are solved exactly from the linear
// structure of the relations (affine chain for type 1, the rank-2 column
// space for type 2), and the remaining coordinate of each untouched block is
// recovered by a principal complex root. Inconsistent patterns are detected
// exactly and reported as unrealizable.
#pragma once

#include <cstdint>
#include <random>

#include "workbench/strata.hpp"

namespace workbench {

class StratumSampler {
public:
    StratumSampler(const TrinomialData& data, std::uint64_t seed);

    struct Result {
        bool realizable = false;
        Point point;
        int free_parameters = 0;  // complex dimensions chosen freely
    };

    // Attempts to realize the pattern exactly; Result.realizable = false when
    // the pattern is inconsistent with the relations.
    Result sample(const SupportPattern& pattern);

    // Convenience: sample until success; throws InvalidData if unrealizable.
    Point sample_point(const SupportPattern& pattern);

    std::complex<double> random_nonzero();  // modulus in [0.5, 2]

private:
    TrinomialData data_;
    std::mt19937_64 rng_;
};

}  // namespace workbench
