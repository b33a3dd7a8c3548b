#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wigfluct/annular.hpp"
#include "wigfluct/beta_poly.hpp"
#include "wigfluct/partitioned_perm.hpp"

namespace wigfluct {

// Circle sizes (m_1,...,m_r) of a fluctuation moment; order matters.
using MomentIndex = std::vector<int>;

// Free cumulants keyed by the sorted index tuple.
struct CumulantTable {
    std::map<std::vector<int>, BetaPoly> entries;

    // Sorts idx before lookup. Throws std::out_of_range if absent.
    const BetaPoly& at(std::vector<int> idx) const;
};

// Product over blocks B of pp.part of
//   2^{r_B-1} (b_{2 r_B} + [D_B empty] * sum over tau in A_{r_B} of prod_{D in tau} b_{|D|}),
// r_B being the number of 2-cycles in B. pp must be a loop-free pairing element.
BetaPoly pseudoCumulant(const PartitionedPermutation& pp);

// Sum of pseudoCumulant over the loop-free non-crossing pairing elements of the shape.
BetaPoly momentTheorem1(const MomentIndex& idx, unsigned threads = 1);

// Joint cumulant of the entries x_{i(gamma(j)), i(j)} grouped by the blocks of tau,
// with i constant exactly on the blocks of pi.
BetaPoly kTauPi(const AnnulusShape& shape, const SetPartition& tau, const SetPartition& pi);

constexpr int kDefaultOracleBound = 8;

// Large-N limit from the exhaustive double sum over vertex partitions pi with
// #(pi) = m/2 - r + 2 and edge partitions tau with tau v gamma = 1.
// Throws CapabilityError when m exceeds bound.
BetaPoly momentOracle(const MomentIndex& idx, int bound = kDefaultOracleBound, unsigned threads = 1);

// Exact finite-N value of N^{r-2} k_r(Tr X^{m_1}, ..., Tr X^{m_r}) for N >= 1.
BetaPoly finiteNExpansion(const MomentIndex& idx, std::uint64_t N, int bound = kDefaultOracleBound);

// Cumulants for every sorted index with at most maxR entries and total at most
// maxOrder, obtained by inverting the moment-cumulant relation over PS_NC.
// maxR above 4 throws CapabilityError.
CumulantTable freeCumulants(int maxR, int maxOrder);

}  // namespace wigfluct
