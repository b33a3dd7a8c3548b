#include "wigfluct/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"
#include "wigfluct/errors.hpp"
#include "wigfluct/obstruction.hpp"

namespace wigfluct {

const BetaPoly& CumulantTable::at(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    auto it = entries.find(idx);
    if (it == entries.end()) throw std::out_of_range("no cumulant stored for that index");
    return it->second;
}

// ------------------------------------------------------------------ loop-free pseudo-cumulant sum

namespace {

bool isFixedPointFreeInvolution(const Permutation& p) {
    for (int u = 0; u < p.size(); ++u)
        if (p(u) == u || p(p(u)) != u) return false;
    return true;
}

BetaPoly crossingCorrection(int r) {
    BetaPoly sum;
    for (const SetPartition& tau : obstructionSet(r)) {
        Monomial m;
        for (int s : tau.blockSizes()) m.push_back(s);
        sum.addTerm(std::move(m), 1);
    }
    return sum;
}

AnnulusShape shapeOf(const MomentIndex& idx) { return AnnulusShape(idx); }

int totalOrder(const MomentIndex& idx) {
    int m = 0;
    for (int k : idx) m += k;
    return m;
}

}  // namespace

BetaPoly pseudoCumulant(const PartitionedPermutation& pp) {
    if (!isFixedPointFreeInvolution(pp.perm)) throw std::invalid_argument("pseudoCumulant: permutation is not a pairing");
    if (!isNCPartitionedPerm(pp) || !isLoopFree(pp))
        throw std::domain_error("pseudoCumulant: element is not a loop-free non-crossing pairing");
    const auto related = relatedBlocks(pp);
    const auto sizes = pp.part.blockSizes();
    BetaPoly out = BetaPoly::constant(1);
    for (int b = 0; b < pp.part.blockCount(); ++b) {
        const int r = sizes[b] / 2;
        BetaPoly factor = BetaPoly::beta(2 * r);
        if (related.at(b).empty()) factor += crossingCorrection(r);
        factor *= Rational(BigInt(1) << (r - 1));
        out = out * factor;
    }
    return out;
}

BetaPoly momentTheorem1(const MomentIndex& idx, unsigned threads) {
    const AnnulusShape shape = shapeOf(idx);
    if (shape.m() % 2) return {};
    const auto elements = enumeratePS_NC2LoopFree(shape);
    std::vector<BetaPoly> partial(detail::workerCount(elements.size(), threads));
    detail::parallelFor(elements.size(), threads,
                        [&](unsigned w, std::size_t i) { partial[w] += pseudoCumulant(elements[i]); });
    BetaPoly total;
    for (const auto& p : partial) total += p;
    return total;
}

// ------------------------------------------------------------------ oracle side

namespace {

// The monomial of k_tau(pi), or nothing when it vanishes. piLabel[x] is the block
// of pi holding vertex x; edge j runs gamma(j) -> j.
bool kTauPiMonomial(const Permutation& gamma, const std::vector<int>& piLabel,
                    const std::vector<std::vector<int>>& tauBlocks, Monomial& out) {
    out.clear();
    for (const auto& D : tauBlocks) {
        const int a = piLabel[gamma(D[0])], b = piLabel[D[0]];
        int forward = 0;
        for (int j : D) {
            const int s = piLabel[gamma(j)], t = piLabel[j];
            if (s == a && t == b)
                ++forward;
            else if (!(s == b && t == a))
                return false;
        }
        const int size = static_cast<int>(D.size());
        if (a == b) {
            if (size != 2) return false;
        } else if (2 * forward != size) {
            return false;
        }
        out.push_back(size);
    }
    std::sort(out.begin(), out.end());
    return true;
}

std::vector<std::vector<std::vector<int>>> connectingTaus(const Permutation& gamma) {
    std::vector<std::vector<std::vector<int>>> out;
    const SetPartition g = cycles(gamma);
    PartitionStream ps(gamma.size());
    while (auto tau = ps.next())
        if (join(*tau, g).blockCount() == 1) out.push_back(tau->blocks());
    return out;
}

using CountMap = std::map<Monomial, std::int64_t, GradedLex>;

// Sum over tau of k_tau(pi) for every pi, bucketed by #(pi). Only block counts in
// [minBlocks, maxBlocks] are visited.
std::vector<CountMap> oracleCounts(const AnnulusShape& shape, int minBlocks, int maxBlocks, unsigned threads) {
    const Permutation gamma = gammaOf(shape);
    const auto taus = connectingTaus(gamma);
    std::vector<SetPartition> pis;
    PartitionStream ps(shape.m());
    while (auto pi = ps.next())
        if (pi->blockCount() >= minBlocks && pi->blockCount() <= maxBlocks) pis.push_back(std::move(*pi));

    const unsigned workers = detail::workerCount(pis.size(), threads);
    std::vector<std::vector<CountMap>> partial(workers, std::vector<CountMap>(static_cast<std::size_t>(shape.m() + 1)));
    detail::parallelFor(pis.size(), threads, [&](unsigned w, std::size_t i) {
        const SetPartition& pi = pis[i];
        Monomial mono;
        CountMap& bucket = partial[w][pi.blockCount()];
        for (const auto& tau : taus)
            if (kTauPiMonomial(gamma, pi.labels(), tau, mono)) ++bucket[mono];
    });
    std::vector<CountMap> merged(static_cast<std::size_t>(shape.m() + 1));
    for (const auto& perWorker : partial)
        for (std::size_t k = 0; k < perWorker.size(); ++k)
            for (const auto& [mono, c] : perWorker[k]) merged[k][mono] += c;
    return merged;
}

void checkBound(int m, int bound) {
    if (m > bound)
        throw CapabilityError("total order " + std::to_string(m) + " exceeds the oracle bound " + std::to_string(bound));
}

}  // namespace

BetaPoly kTauPi(const AnnulusShape& shape, const SetPartition& tau, const SetPartition& pi) {
    if (tau.size() != shape.m() || pi.size() != shape.m()) throw SizeMismatch("kTauPi: sizes differ from shape");
    Monomial mono;
    if (!kTauPiMonomial(gammaOf(shape), pi.labels(), tau.blocks(), mono)) return {};
    return BetaPoly::monomial(std::move(mono));
}

BetaPoly momentOracle(const MomentIndex& idx, int bound, unsigned threads) {
    const AnnulusShape shape = shapeOf(idx);
    checkBound(shape.m(), bound);
    if (shape.m() % 2) return {};
    const int target = shape.m() / 2 - shape.r() + 2;
    if (target < 1) return {};
    const auto counts = oracleCounts(shape, target, target, threads);
    BetaPoly out;
    for (const auto& [mono, c] : counts[target]) out.addTerm(mono, Rational(c));
    return out;
}

BetaPoly finiteNExpansion(const MomentIndex& idx, std::uint64_t N, int bound) {
    const AnnulusShape shape = shapeOf(idx);
    checkBound(shape.m(), bound);
    if (N < 1) throw std::invalid_argument("finiteNExpansion: N must be at least 1");
    if (shape.m() % 2) return {};
    const int exponent = shape.m() / 2 - shape.r() + 2;  // divide by N^exponent
    const auto counts = oracleCounts(shape, 1, shape.m(), 1);
    BetaPoly out;
    BigInt falling = 1;  // N (N-1) ... (N-k+1)
    for (int k = 1; k <= shape.m(); ++k) {
        falling *= BigInt(N) - (k - 1);
        if (falling == 0) break;
        for (const auto& [mono, c] : counts[k]) out.addTerm(mono, Rational(falling * c));
    }
    BigInt scaleBy = 1;
    for (int e = 0; e < std::abs(exponent); ++e) scaleBy *= N;
    out *= exponent >= 0 ? Rational(BigInt(1), scaleBy) : Rational(scaleBy);
    return out;
}

// ------------------------------------------------------------------ cumulants

CumulantTable freeCumulants(int maxR, int maxOrder) {
    if (maxR > 4)
        throw CapabilityError("free cumulants are only identified up to order 4 (requested r = " + std::to_string(maxR) + ")");
    if (maxR < 1 || maxOrder < 1) throw std::invalid_argument("freeCumulants: maxR and maxOrder must be positive");

    // all nondecreasing tuples with at most maxR entries and sum at most maxOrder
    std::vector<std::vector<int>> keys;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int minEntry, int remaining) -> void {
        if (!cur.empty()) keys.push_back(cur);
        if (static_cast<int>(cur.size()) == maxR) return;
        for (int e = minEntry; e <= remaining; ++e) {
            cur.push_back(e);
            self(self, e, remaining - e);
            cur.pop_back();
        }
    };
    gen(gen, 1, maxOrder);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        const int ma = totalOrder(a), mb = totalOrder(b);
        if (ma != mb) return ma < mb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    CumulantTable table;
    for (const auto& key : keys) {
        const AnnulusShape shape(key);
        const Permutation gamma = gammaOf(shape);
        const SetPartition top = SetPartition::full(shape.m());
        BetaPoly rest;
        for (const PartitionedPermutation& pp : enumeratePS_NC(shape)) {
            if (pp.perm == gamma && pp.part == top) continue;
            std::vector<std::vector<int>> perBlock(static_cast<std::size_t>(pp.part.blockCount()));
            for (const auto& c : pp.perm.cycleList())
                perBlock[pp.part.blockOf(c[0])].push_back(static_cast<int>(c.size()));
            BetaPoly term = BetaPoly::constant(1);
            for (auto& sub : perBlock) {
                std::sort(sub.begin(), sub.end());
                auto it = table.entries.find(sub);
                if (it == table.entries.end())
                    throw std::logic_error("cumulant inversion reached an index that has not been solved yet");
                term = term * it->second;
                if (term.isZero()) break;
            }
            rest += term;
        }
        table.entries.emplace(key, momentTheorem1(key) - rest);
    }
    return table;
}

}  // namespace wigfluct
