#include "workbench/census.hpp"

#include "workbench/errors.hpp"
#include "workbench/int_matrix.hpp"

namespace workbench {

mpz_class torus_orbit_count(const TrinomialData& data, const SupportPattern& pattern) {
    if (pattern.empty())
        throw InvalidDataError("component count is defined for nonempty patterns only");

    std::set<int> touched = pattern.blocks();
    std::vector<int> untouched;
    for (int b = data.first_block(); b <= data.last_block(); ++b)
        if (!touched.count(b)) untouched.push_back(b);
    if (untouched.empty()) return 1;

    // Columns: coordinates of the untouched blocks, plus the shared scaling
    // parameter for type 2 (block values live on a line through the origin).
    int cols = 0;
    for (int b : untouched) cols += data.block_size(b);
    const bool scaling = data.type == 2;
    IntMatrix m(static_cast<int>(untouched.size()), cols + (scaling ? 1 : 0));
    int col = 0;
    for (std::size_t row = 0; row < untouched.size(); ++row) {
        const auto& l = data.block_exponents(untouched[row]);
        for (int e : l) m.at(static_cast<int>(row), col++) = e;
        if (scaling) m.at(static_cast<int>(row), cols) = -1;
    }

    SmithDecomposition snf = smith_normal_form(m);
    mpz_class count = 1;
    int diag = std::min(snf.D.rows(), snf.D.cols());
    for (int i = 0; i < diag; ++i)
        if (snf.D.at(i, i) != 0) count *= snf.D.at(i, i);
    return count;
}

StratumCensus census(const TrinomialData& data) {
    ValidationReport report = validate(data);
    if (!report.ok)
        throw InvalidDataError("invalid trinomial data: " + report.violations.front().message);

    StratumCensus out;
    for (const Stratum& s : admissible_supports(data)) {
        StratumEntry entry;
        entry.pattern = s.pattern;
        entry.dimension = s.dimension;
        entry.nonempty = s.nonempty;
        if (!s.pattern.empty()) {
            entry.stabilizer_orbits = 1;
            entry.torus_orbits = torus_orbit_count(data, s.pattern);
        }
        out.strata.push_back(std::move(entry));
    }

    out.rigidity = rigidity_verdict(strip_free_part(data), RigidityTarget::Y);
    if (!out.rigidity.rigid) {
        out.verdict = StratumCensus::Verdict::FinitelyManyGOrbits;
        out.note = "Y(A) is not rigid (clause " + to_string(out.rigidity.clause) +
                   "); the open stratum is covered by finitely many orbits of the group "
                   "generated by the torus and a nontrivial Ga-subgroup.";
    } else {
        out.verdict = StratumCensus::Verdict::HypothesisFails;
        out.note = "Y(A) is rigid, so the finiteness hypothesis fails; for rigid trinomial "
                   "hypersurfaces the automorphism group is known to have infinitely many "
                   "orbits (reported, not enumerated here).";
    }
    return out;
}

}  // namespace workbench
