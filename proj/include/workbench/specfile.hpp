// Batch input files. The trinomial data lives at the top level of the JSON
// document ("type", "m", "blocks", "A"), with optional "derivations",
// "invariant" and "options" beside it. All polynomial strings are parsed
// eagerly against the variety's variable bounds.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "workbench/derivation.hpp"

namespace workbench {

struct SpecOptions {
    double epsilon = 1e-9;
    int cap = 0;                    // 0 = per-derivation default
    int max_image_degree = 2;
    std::optional<std::vector<mpz_class>> degree;  // g0 for lnd-search
    int spot_pairs = 3;             // sampled pairs per stratum in census/transport
    int sample_count = 25;          // sampled points per pattern in census spot checks
    // example-hypersurface parameters
    int hk = 1;
    std::vector<int> hb{2}, hc{3}, hr{1};
};

struct SpecFile {
    TrinomialData variety;
    std::map<std::string, std::map<VarId, SparsePolynomial>> derivations;
    std::optional<RationalFunction> invariant;
    SpecOptions options;
    std::string digest;  // fnv1a-64 of the raw document bytes
};

SpecFile parse_spec_text(const std::string& text);
SpecFile parse_spec_file(const std::string& path);

std::string fnv1a64(const std::string& bytes);

}  // namespace workbench
