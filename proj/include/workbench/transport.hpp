// Transport of same-stratum points by the full diagonal stabilizer: Lambda
// scalings anchored at a vanishing coordinate inside touched blocks, one
// Omega step matching monomial values in type 2, Lambda scalings plus branch
// adjustment in untouched blocks, a flagged root-of-unity correction where
// the required diagonal element leaves the connected torus, and a final
// S-translation.
#pragma once

#include <vector>

#include "workbench/strata.hpp"

namespace workbench {

struct TransportStep {
    enum class Kind { Lambda, Omega, RootOfUnity, STranslation };
    Kind kind = Kind::Lambda;
    std::string label;
    std::map<VarId, std::complex<double>> diagonal;     // T multipliers (absent = 1)
    std::map<VarId, std::complex<double>> translation;  // S offsets
    bool root_of_unity = false;                         // non-connected step flag
};

struct TransportCertificate {
    std::vector<TransportStep> steps;
    double residual = 0.0;  // max relative coordinate error after all steps

    bool used_root_of_unity() const {
        for (const auto& s : steps)
            if (s.root_of_unity) return true;
        return false;
    }
};

// Moves alpha to beta inside their common stratum; throws DifferentStrata,
// EmptySupport (J must be nonempty), NotOnVariety or NumericFailure.
TransportCertificate transport(const Point& alpha, const Point& beta, const TrinomialData& data,
                               double eps);

// Replays the certificate steps on a point.
Point apply_certificate(const TransportCertificate& cert, Point point);

}  // namespace workbench
