// Certified census of the orbit strata. Each nonempty admissible pattern is
// one orbit of the full diagonal stabilizer (transport realizes it); its
// count of connected-torus orbits equals the number of connected components
// of the stratum, computed as the torsion size of a small exponent-matrix
// cokernel. The open part carries the finiteness verdict of the rigidity
// criterion.
#pragma once

#include "workbench/rigidity.hpp"
#include "workbench/strata.hpp"

namespace workbench {

struct StratumEntry {
    SupportPattern pattern;
    int dimension = 0;
    bool nonempty = true;
    // J != 0 only: L(J) is one orbit of the full diagonal stabilizer and
    // splits into torus_orbits many orbits of the connected torus.
    mpz_class torus_orbits = 0;
    int stabilizer_orbits = 0;
};

struct StratumCensus {
    enum class Verdict { FinitelyManyGOrbits, HypothesisFails };

    std::vector<StratumEntry> strata;
    Verdict verdict = Verdict::HypothesisFails;
    RigidityVerdict rigidity;  // verdict for Y(A)
    std::string note;
};

// Connected components of the nonempty stratum L(J): torsion of the cokernel
// of one exponent row per untouched block (plus a shared scaling column for
// type 2).
mpz_class torus_orbit_count(const TrinomialData& data, const SupportPattern& pattern);

StratumCensus census(const TrinomialData& data);

}  // namespace workbench
