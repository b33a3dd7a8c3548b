#include "wigfluct/partitioned_perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wigfluct/errors.hpp"
#include "tree_util.hpp"

namespace wigfluct {

PartitionedPermutation::PartitionedPermutation(SetPartition part_, Permutation perm_, AnnulusShape shape_)
    : part(std::move(part_)), perm(std::move(perm_)), shape(std::move(shape_)) {
    if (part.size() != perm.size() || perm.size() != shape.m())
        throw SizeMismatch("partitioned permutation: ground sets differ");
    if (!cycles(perm).refines(part)) throw std::invalid_argument("a cycle of the permutation straddles two blocks");
}

int ppLength(const PartitionedPermutation& pp) { return 2 * length(pp.part) - length(pp.perm); }

std::optional<PartitionedPermutation> ppProduct(const PartitionedPermutation& a, const PartitionedPermutation& b) {
    if (a.perm.size() != b.perm.size()) throw SizeMismatch("ppProduct: ground sets differ");
    PartitionedPermutation out(join(a.part, b.part), compose(a.perm, b.perm), a.shape);
    if (ppLength(out) != ppLength(a) + ppLength(b)) return std::nullopt;
    return out;
}

LabeledDigraph gammaGraph(const PartitionedPermutation& pp) {
    const Permutation gamma = gammaOf(pp.shape);
    if (isNonCrossingRel(pp.perm, gamma) == NCClass::Neither)
        throw std::domain_error("gammaGraph: permutation is not non-crossing relative to gamma");
    const SetPartition white = join(cycles(pp.perm), cycles(gamma));
    const int W = white.blockCount();
    std::vector<int> vs(static_cast<std::size_t>(W + pp.part.blockCount()));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    int label = 0;
    for (const auto& c : pp.perm.cycleList()) es.push_back({label++, W + pp.part.blockOf(c[0]), white.blockOf(c[0])});
    return LabeledDigraph(std::move(vs), std::move(es));
}

bool isNCPartitionedPerm(const PartitionedPermutation& pp) {
    if (isNonCrossingRel(pp.perm, gammaOf(pp.shape)) == NCClass::Neither) return false;
    return gammaGraph(pp).isTree();
}

std::vector<SetPartition> ncPartsOver(const Permutation& perm, const AnnulusShape& shape) {
    const Permutation gamma = gammaOf(shape);
    if (isNonCrossingRel(perm, gamma) == NCClass::Neither)
        throw std::domain_error("ncPartsOver: permutation is not non-crossing relative to gamma");
    const auto cs = perm.cycleList();
    const int k = static_cast<int>(cs.size());
    const SetPartition white = join(cycles(perm), cycles(gamma));
    const int W = white.blockCount();
    std::vector<int> whiteOf(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) whiteOf[i] = white.blockOf(cs[i][0]);

    std::vector<SetPartition> out;
    std::vector<int> assign(static_cast<std::size_t>(k), -1);
    // usedWhite[b] = bitmask of white vertices already met by block b
    std::vector<unsigned long long> usedWhite;
    std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(k));

    auto leaf = [&] {
        const int B = static_cast<int>(usedWhite.size());
        for (int i = 0; i < k; ++i) edges[i] = {W + assign[i], whiteOf[i]};
        if (!detail::isTree(W + B, edges)) return;
        std::vector<int> lab(static_cast<std::size_t>(shape.m()));
        for (int i = 0; i < k; ++i)
            for (int x : cs[i]) lab[x] = assign[i];
        out.push_back(SetPartition::fromLabels(lab));
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            leaf();
            return;
        }
        const unsigned long long bit = 1ull << whiteOf[i];
        for (std::size_t b = 0; b < usedWhite.size(); ++b) {
            if (usedWhite[b] & bit) continue;
            usedWhite[b] |= bit;
            assign[i] = static_cast<int>(b);
            self(self, i + 1);
            usedWhite[b] &= ~bit;
        }
        usedWhite.push_back(bit);
        assign[i] = static_cast<int>(usedWhite.size()) - 1;
        self(self, i + 1);
        usedWhite.pop_back();
    };
    if (W > 64) throw CapabilityError("ncPartsOver: too many components");
    rec(rec, 0);
    return out;
}

namespace {

template <class Perms>
std::vector<PartitionedPermutation> expand(const Perms& perms, const AnnulusShape& shape) {
    std::vector<PartitionedPermutation> out;
    for (const Permutation& p : perms)
        for (SetPartition& u : ncPartsOver(p, shape)) out.emplace_back(std::move(u), p, shape);
    return out;
}

}  // namespace

std::vector<PartitionedPermutation> enumeratePS_NC(const AnnulusShape& shape) {
    const Permutation gamma = gammaOf(shape);
    std::vector<Permutation> perms;
    PermutationStream ps(shape.m());
    while (auto p = ps.next())
        if (isNonCrossingRel(*p, gamma) != NCClass::Neither) perms.push_back(std::move(*p));
    return expand(perms, shape);
}

std::vector<PartitionedPermutation> enumeratePS_NC2(const AnnulusShape& shape) {
    auto perms = enumerateNC2(shape);
    auto more = enumerateNC2nc(shape);
    perms.insert(perms.end(), more.begin(), more.end());
    std::sort(perms.begin(), perms.end());
    return expand(perms, shape);
}

std::vector<PartitionedPermutation> enumeratePS_NC21(const AnnulusShape& shape) {
    const Permutation gamma = gammaOf(shape);
    std::vector<Permutation> perms;
    PartitionStream ps(shape.m());
    while (auto p = ps.next()) {
        const auto sizes = p->blockSizes();
        if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s > 2; })) continue;
        std::vector<int> img(static_cast<std::size_t>(shape.m()));
        std::iota(img.begin(), img.end(), 0);
        for (const auto& b : p->blocks())
            if (b.size() == 2) std::swap(img[b[0]], img[b[1]]);
        Permutation s(std::move(img));
        if (isNonCrossingRel(s, gamma) != NCClass::Neither) perms.push_back(std::move(s));
    }
    std::sort(perms.begin(), perms.end());
    return expand(perms, shape);
}

bool isLoopFree(const PartitionedPermutation& pp) {
    const SetPartition gs = cycles(compose(gammaOf(pp.shape), pp.perm));
    const auto sizes = pp.part.blockSizes();
    for (int u = 0; u < pp.perm.size(); ++u) {
        const int v = pp.perm(u);
        if (u < v && gs.blockOf(u) == gs.blockOf(v) && sizes[pp.part.blockOf(u)] != 2) return false;
    }
    return true;
}

std::vector<PartitionedPermutation> enumeratePS_NC2LoopFree(const AnnulusShape& shape) {
    auto all = enumeratePS_NC2(shape);
    std::vector<PartitionedPermutation> out;
    for (auto& pp : all)
        if (isLoopFree(pp)) out.push_back(std::move(pp));
    return out;
}

std::map<int, std::vector<int>> relatedBlocks(const PartitionedPermutation& pp) {
    const int m = pp.perm.size();
    for (int u = 0; u < m; ++u)
        if (pp.perm(u) == u || pp.perm(pp.perm(u)) != u)
            throw std::invalid_argument("relatedBlocks: permutation is not a pairing");
    if (!isNCPartitionedPerm(pp)) throw std::domain_error("relatedBlocks: not a non-crossing partitioned permutation");

    const SetPartition gs = cycles(compose(gammaOf(pp.shape), pp.perm));
    // (unordered gamma-sigma class pair, block of part) for every 2-cycle
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (int u = 0; u < m; ++u) {
        const int v = pp.perm(u);
        if (u > v) continue;
        const int a = gs.blockOf(u), b = gs.blockOf(v);
        keyed.push_back({{std::min(a, b), std::max(a, b)}, pp.part.blockOf(u)});
    }
    std::map<int, std::vector<int>> out;
    for (int b = 0; b < pp.part.blockCount(); ++b) out[b];
    for (const auto& [k1, b1] : keyed)
        for (const auto& [k2, b2] : keyed)
            if (k1 == k2 && b1 != b2) out[b1].push_back(b2);
    for (auto& [b, v] : out) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return out;
}

bool isMaximal(const PartitionedPermutation& pp) {
    for (const auto& [b, d] : relatedBlocks(pp))
        if (d.empty()) return true;
    return false;
}

}  // namespace wigfluct
