#pragma once

#include <vector>

#include "wigfluct/annular.hpp"
#include "wigfluct/combinat.hpp"

namespace wigfluct {

// gamma^par on [2n]: (1,2)(3,4)...(2n-1,2n).
Permutation parityGamma(int n);

// Every block holds as many odd as even labels.
bool isParityRespecting(const SetPartition& tau);

// Whether some pairing sigma <= tau, each pair one odd and one even label, makes
// Gamma(tau, sigma, gamma^par) a tree. Throws std::domain_error unless tau is
// parity respecting with tau v gamma^par = 1.
bool admitsNCPP(const SetPartition& tau);

// All parity-respecting tau of [2n] with tau v gamma^par = 1 that do not admit
// such a pairing. Computed once per n (thread safe); n <= 5.
const std::vector<SetPartition>& obstructionSet(int n);

struct LimitCheck {
    bool L1 = false;
    bool L2 = false;
    bool L3 = false;
    bool L4 = false;
    bool L4prime = false;
    // #(pi) - m/2 + r - 2; negative values never reach the large-N limit.
    int excess = 0;
};

// Evaluates the four limit conditions (and the stronger tree condition) for the
// triple. Requires sigma <= tau <= the edge classes of T quotiented by pi.
LimitCheck limitTripleCheck(const AnnulusShape& shape, const Permutation& sigma, const SetPartition& tau,
                            const SetPartition& pi);

}  // namespace wigfluct
