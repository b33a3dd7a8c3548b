#pragma once

// Permutations and set partitions of a finite ground set.
//
// Elements are 0-based in every C++ interface. The textual forms produced by
// toString()/parse() use the customary 1-based labels, e.g. "(1,3)(2,4)" and
// "{1,2}{3,4}".

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wigfluct {

class Permutation {
public:
    Permutation() = default;
    // One-line form, 0-based: image[i] is where i is sent. Throws on non-bijections.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    // Cycles given with 1-based labels; unlisted points are fixed.
    static Permutation fromCycles(int n, const std::vector<std::vector<int>>& cycles);
    // Parses "(1,3)(2,4)" or "()" over a ground set of size n.
    static Permutation parse(std::string_view text, int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& oneLine() const noexcept { return image_; }

    // Cycles with their minimum first, ordered by minimum; fixed points included.
    std::vector<std::vector<int>> cycleList() const;
    int cycleCount() const;
    Permutation inverse() const;
    bool isInvolution() const;

    // 1-based cycle notation without fixed points; "()" for the identity.
    std::string toString() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

class SetPartition {
public:
    SetPartition() = default;

    // Any labelling (equal labels = same block); stored as a restricted growth string.
    static SetPartition fromLabels(const std::vector<int>& labels);
    // Blocks given 0-based. Throws unless they partition {0..n-1}.
    static SetPartition fromBlocks(int n, const std::vector<std::vector<int>>& blocks);
    // Parses "{1,2}{3,4}" (1-based). n defaults to the largest label seen.
    static SetPartition parse(std::string_view text, int n = -1);
    static SetPartition singletons(int n);
    static SetPartition full(int n);

    int size() const noexcept { return static_cast<int>(rgs_.size()); }
    int blockCount() const noexcept { return blocks_; }
    int blockOf(int x) const { return rgs_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& labels() const noexcept { return rgs_; }
    std::vector<std::vector<int>> blocks() const;
    std::vector<int> blockSizes() const;

    // True when every block of *this sits inside a block of other.
    bool refines(const SetPartition& other) const;

    std::string toString() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.rgs_ <=> b.rgs_; }

private:
    std::vector<int> rgs_;
    int blocks_ = 0;
};

struct SetPartitionHash {
    std::size_t operator()(const SetPartition& p) const noexcept;
};

int length(const Permutation& p);
int length(const SetPartition& p);

// (p q)(x) = p(q(x))
Permutation compose(const Permutation& p, const Permutation& q);

SetPartition cycles(const Permutation& p);
SetPartition join(const SetPartition& a, const SetPartition& b);

// First-return restriction to the sorted subset M. The result acts on
// {0..|M|-1}, where k stands for the k-th smallest element of M.
Permutation restrict(const Permutation& p, const std::vector<int>& M);
// Same relabelling convention as restrict().
SetPartition restrictPartition(const SetPartition& t, const std::vector<int>& A);

// The involution whose 2-cycles are the blocks of a pairing.
Permutation pairingPermutation(const SetPartition& pairing);

class PartitionStream {
public:
    explicit PartitionStream(int n);
    std::optional<SetPartition> next();

private:
    std::vector<int> a_, mx_;
    bool started_ = false, done_ = false;
};

class PairingStream {
public:
    explicit PairingStream(int n);
    std::optional<SetPartition> next();

private:
    int n_;
    std::vector<int> choice_;
    bool started_ = false, done_ = false;
};

class PermutationStream {
public:
    explicit PermutationStream(int n);
    std::optional<Permutation> next();

private:
    std::vector<int> cur_;
    bool started_ = false, done_ = false;
};

}  // namespace wigfluct
