#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wigfluct/annular.hpp"
#include "wigfluct/combinat.hpp"
#include "wigfluct/graph.hpp"

namespace wigfluct {

// A pair (U, pi) with every cycle of pi inside a block of U, read against gammaOf(shape).
struct PartitionedPermutation {
    SetPartition part;
    Permutation perm;
    AnnulusShape shape;

    PartitionedPermutation() = default;
    PartitionedPermutation(SetPartition part, Permutation perm, AnnulusShape shape);

    friend bool operator==(const PartitionedPermutation& a, const PartitionedPermutation& b) {
        return a.part == b.part && a.perm == b.perm && a.shape == b.shape;
    }
};

int ppLength(const PartitionedPermutation& pp);

// (V v W, pi sigma) when the lengths add up, std::nullopt (the zero element) otherwise.
std::optional<PartitionedPermutation> ppProduct(const PartitionedPermutation& a, const PartitionedPermutation& b);

// Bipartite graph with white vertices 0..W-1 (blocks of pi v gamma), black vertices
// W..W+B-1 (blocks of part) and one edge per cycle of perm, labelled by cycle index.
// Throws std::domain_error unless perm is NC or non-connecting NC relative to gamma.
LabeledDigraph gammaGraph(const PartitionedPermutation& pp);

bool isNCPartitionedPerm(const PartitionedPermutation& pp);

std::vector<PartitionedPermutation> enumeratePS_NC(const AnnulusShape& shape);
std::vector<PartitionedPermutation> enumeratePS_NC2(const AnnulusShape& shape);
std::vector<PartitionedPermutation> enumeratePS_NC21(const AnnulusShape& shape);
std::vector<PartitionedPermutation> enumeratePS_NC2LoopFree(const AnnulusShape& shape);

// All U >= cycles(perm) for which (U, perm) is a non-crossing partitioned permutation.
// perm must be NC or non-connecting NC relative to gammaOf(shape).
std::vector<SetPartition> ncPartsOver(const Permutation& perm, const AnnulusShape& shape);

bool isLoopFree(const PartitionedPermutation& pp);

// For each block index of pp.part, the indices of the other blocks related to it.
std::map<int, std::vector<int>> relatedBlocks(const PartitionedPermutation& pp);
bool isMaximal(const PartitionedPermutation& pp);

}  // namespace wigfluct
