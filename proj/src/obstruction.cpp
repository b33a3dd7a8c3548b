#include "wigfluct/obstruction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "tree_util.hpp"
#include "wigfluct/errors.hpp"
#include "wigfluct/graph.hpp"

namespace wigfluct {

Permutation parityGamma(int n) {
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        img[2 * i] = 2 * i + 1;
        img[2 * i + 1] = 2 * i;
    }
    return Permutation(std::move(img));
}

bool isParityRespecting(const SetPartition& tau) {
    std::vector<int> balance(static_cast<std::size_t>(tau.blockCount()), 0);
    for (int x = 0; x < tau.size(); ++x) balance[tau.blockOf(x)] += (x % 2 == 0) ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

namespace {

// Searches odd/even matchings inside each block of tau; stops at the first tree.
class PairingSearch {
public:
    explicit PairingSearch(const SetPartition& tau) : tau_(tau), n_(tau.size() / 2) {
        for (const auto& b : tau.blocks()) {
            std::vector<int> odd, even;
            for (int x : b) (x % 2 == 0 ? odd : even).push_back(x);  // 0-based x is label x+1
            odds_.push_back(std::move(odd));
            evens_.push_back(std::move(even));
        }
        partner_.assign(static_cast<std::size_t>(tau.size()), -1);
    }

    bool run() { return block(0); }

private:
    bool block(std::size_t b) {
        if (b == odds_.size()) return leaf();
        return match(b, 0);
    }

    bool match(std::size_t b, std::size_t i) {
        if (i == odds_[b].size()) return block(b + 1);
        const int o = odds_[b][i];
        for (int e : evens_[b]) {
            if (partner_[e] >= 0) continue;
            partner_[o] = e;
            partner_[e] = o;
            if (match(b, i + 1)) return true;
            partner_[o] = partner_[e] = -1;
        }
        return false;
    }

    bool leaf() {
        // white: blocks of sigma v gamma^par, black: blocks of tau, edges: pairs of sigma
        const Permutation sigma(partner_);
        const SetPartition white = join(cycles(sigma), cycles(parityGamma(n_)));
        const int W = white.blockCount();
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < sigma.size(); ++x)
            if (x < sigma(x)) edges.emplace_back(W + tau_.blockOf(x), white.blockOf(x));
        return detail::isTree(W + tau_.blockCount(), edges);
    }

    const SetPartition& tau_;
    int n_;
    std::vector<std::vector<int>> odds_, evens_;
    std::vector<int> partner_;
};

bool connectsWithParityGamma(const SetPartition& tau) {
    return join(tau, cycles(parityGamma(tau.size() / 2))).blockCount() == 1;
}

}  // namespace

bool admitsNCPP(const SetPartition& tau) {
    if (tau.size() % 2 || !isParityRespecting(tau))
        throw std::domain_error("admitsNCPP: partition does not respect parity");
    if (!connectsWithParityGamma(tau)) throw std::domain_error("admitsNCPP: partition does not connect gamma^par");
    return PairingSearch(tau).run();
}

const std::vector<SetPartition>& obstructionSet(int n) {
    if (n < 1) throw std::invalid_argument("obstructionSet: n must be positive");
    if (n > 5) throw CapabilityError("obstructionSet: only n <= 5 is supported");
    static std::mutex mu;
    static std::map<int, std::vector<SetPartition>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<SetPartition> out;
    PartitionStream ps(2 * n);
    while (auto tau = ps.next()) {
        if (!isParityRespecting(*tau) || !connectsWithParityGamma(*tau)) continue;
        if (!PairingSearch(*tau).run()) out.push_back(*tau);
    }
    return memo.emplace(n, std::move(out)).first->second;
}

// ------------------------------------------------------------------ limit check

namespace {

struct TripleContext {
    AnnulusShape shape;
    Permutation gamma, sigma;
    SetPartition tau, pi;
    SetPartition gsParts;        // cycles of gamma*sigma, i.e. vertices of T^{gamma sigma}
    LabeledDigraph tGs, tPi;     // T quotiented by gamma*sigma and by pi
    EdgeClassPartition piBar;    // edge classes of T^pi
    SetPartition gsComponents;   // components of T^{gamma sigma}, over its vertex positions

    // The pi block holding the whole gamma-sigma class v, or -1 if v is split.
    int piBlockHolding(int v) const {
        int b = -1;
        for (int x = 0; x < shape.m(); ++x) {
            if (gsParts.blockOf(x) != v) continue;
            if (b < 0) b = pi.blockOf(x);
            else if (b != pi.blockOf(x)) return -1;
        }
        return b;
    }

    int componentOfLabel(int u) const {
        const Edge& e = tGs.edgeByLabel(u);
        return gsComponents.blockOf(tGs.vertexPosition(e.src));
    }
};

bool checkL2(const TripleContext& c) {
    const auto W = join(cycles(c.sigma), cycles(c.gamma)).blocks();
    for (const auto& w : W) {
        const SetPartition lhs = restrictPartition(c.pi, w);
        const SetPartition rhs = cycles(compose(restrict(c.gamma, w), restrict(c.sigma, w)));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool checkL3(const TripleContext& c) {
    // loop blocks, represented by their smaller element
    std::vector<int> loops;
    for (int u = 0; u < c.shape.m(); ++u)
        if (u < c.sigma(u) && c.tGs.edgeByLabel(u).isLoop()) loops.push_back(u);

    for (std::size_t i = 0; i < loops.size(); ++i) {
        for (std::size_t j = i + 1; j < loops.size(); ++j) {
            const int b1 = loops[i], b2 = loops[j];
            if (c.componentOfLabel(b1) == c.componentOfLabel(b2)) continue;
            const bool samePiBar = c.piBar.classOf(b1) == c.piBar.classOf(b2);

            const int v1 = c.gsParts.blockOf(b1), v2 = c.gsParts.blockOf(b2);  // [B_i] as gamma-sigma classes
            const int piOfV1 = c.piBlockHolding(v1), piOfV2 = c.piBlockHolding(v2);
            bool witness = false;
            for (const Edge& e1 : c.tGs.edges()) {
                if (e1.isLoop()) continue;
                if (c.gsParts.blockOf(e1.src) != v1 && c.gsParts.blockOf(e1.trg) != v1) continue;
                for (const Edge& e2 : c.tGs.edges()) {
                    if (e2.isLoop()) continue;
                    if (c.gsParts.blockOf(e2.src) != v2 && c.gsParts.blockOf(e2.trg) != v2) continue;
                    if (c.piBar.classOf(e1.label) != c.piBar.classOf(e2.label)) continue;
                    // one endpoint of the common pi-pair must contain both [B_1] and [B_2]
                    if (piOfV1 < 0 || piOfV1 != piOfV2) continue;
                    const Edge& p1 = c.tPi.edgeByLabel(e1.label);
                    const int shared = piOfV1;
                    const int srcBlock = c.pi.blockOf(p1.src), trgBlock = c.pi.blockOf(p1.trg);
                    if (srcBlock == shared || trgBlock == shared) {
                        witness = true;
                        break;
                    }
                }
                if (witness) break;
            }
            if (samePiBar != witness) return false;
        }
    }
    return true;
}

// T^{gamma sigma}(sigma, tau): white = components of T^{gamma sigma}, black = blocks
// of tau (offset by W), one edge per block of sigma. blackOf maps tau blocks to
// black vertex ids, which lets the caller merge black vertices.
std::vector<std::pair<int, int>> sigmaTauEdges(const TripleContext& c, const std::vector<int>& blackOf, int W) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < c.shape.m(); ++u)
        if (u < c.sigma(u)) edges.emplace_back(W + blackOf[c.tau.blockOf(u)], c.componentOfLabel(u));
    return edges;
}

bool checkL4prime(const TripleContext& c) {
    const int W = c.gsComponents.blockCount();
    std::vector<int> blackOf(static_cast<std::size_t>(c.tau.blockCount()));
    for (int b = 0; b < c.tau.blockCount(); ++b) blackOf[b] = b;
    return detail::isTree(W + c.tau.blockCount(), sigmaTauEdges(c, blackOf, W));
}

bool checkL4(const TripleContext& c) {
    const int W = c.gsComponents.blockCount();
    // pi_tau: merge tau blocks sharing a pi-bar class unless their pi-edges are loops
    const int T = c.tau.blockCount();
    std::vector<int> rep(static_cast<std::size_t>(T));
    for (int b = 0; b < T; ++b) rep[b] = b;
    std::vector<int> firstElem(static_cast<std::size_t>(T), -1);
    for (int x = 0; x < c.shape.m(); ++x)
        if (firstElem[c.tau.blockOf(x)] < 0) firstElem[c.tau.blockOf(x)] = x;
    for (int a = 0; a < T; ++a) {
        if (c.tPi.edgeByLabel(firstElem[a]).isLoop()) continue;
        for (int b = 0; b < a; ++b) {
            if (c.tPi.edgeByLabel(firstElem[b]).isLoop()) continue;
            if (c.piBar.classOf(firstElem[a]) == c.piBar.classOf(firstElem[b])) {
                rep[a] = rep[b];
                break;
            }
        }
    }
    const SetPartition merged = SetPartition::fromLabels(rep);
    std::vector<int> blackOf(rep.size());
    for (int b = 0; b < T; ++b) blackOf[b] = merged.blockOf(b);
    auto edges = sigmaTauEdges(c, blackOf, W);
    // elementarization: parallel edges collapse
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return detail::isTree(W + merged.blockCount(), edges);
}

}  // namespace

LimitCheck limitTripleCheck(const AnnulusShape& shape, const Permutation& sigma, const SetPartition& tau,
                            const SetPartition& pi) {
    const int m = shape.m();
    if (sigma.size() != m || tau.size() != m || pi.size() != m) throw SizeMismatch("limitTripleCheck: sizes differ");
    for (int u = 0; u < m; ++u)
        if (sigma(u) == u || sigma(sigma(u)) != u) throw std::invalid_argument("limitTripleCheck: sigma is not a pairing");

    TripleContext c{shape, gammaOf(shape), sigma, tau, pi, {}, {}, {}, {}, {}};
    const LabeledDigraph t = buildT(shape);
    c.gsParts = cycles(compose(c.gamma, sigma));
    c.tGs = quotient(t, c.gsParts);
    c.tPi = quotient(t, pi);
    c.piBar = edgeClasses(c.tPi);
    c.gsComponents = c.tGs.components();

    if (!cycles(sigma).refines(tau)) throw std::invalid_argument("limitTripleCheck: sigma is not below tau");
    if (!tau.refines(c.piBar.classes)) throw std::invalid_argument("limitTripleCheck: tau is not below the edge classes of T^pi");

    LimitCheck out;
    out.L1 = isNonCrossingRel(sigma, c.gamma) != NCClass::Neither;
    out.L2 = checkL2(c);
    out.L3 = checkL3(c);
    out.L4 = checkL4(c);
    out.L4prime = checkL4prime(c);
    out.excess = pi.blockCount() - m / 2 + shape.r() - 2;
    return out;
}

}  // namespace wigfluct
