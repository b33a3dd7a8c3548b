#include "wigfluct/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wigfluct {

LabeledDigraph::LabeledDigraph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex id");
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.label < b.label; });
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (k && edges_[k].label == edges_[k - 1].label) throw std::invalid_argument("edge labels must be unique");
        if (!std::binary_search(vertices_.begin(), vertices_.end(), edges_[k].src) ||
            !std::binary_search(vertices_.begin(), vertices_.end(), edges_[k].trg))
            throw std::invalid_argument("edge endpoint is not a vertex");
    }
}

int LabeledDigraph::vertexPosition(int id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) throw std::out_of_range("unknown vertex " + std::to_string(id));
    return static_cast<int>(it - vertices_.begin());
}

int LabeledDigraph::edgePosition(int label) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), label,
                               [](const Edge& e, int l) { return e.label < l; });
    if (it == edges_.end() || it->label != label) throw std::out_of_range("unknown edge label " + std::to_string(label));
    return static_cast<int>(it - edges_.begin());
}

SetPartition LabeledDigraph::components() const {
    std::vector<int> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : edges_) {
        int a = find(vertexPosition(e.src)), b = find(vertexPosition(e.trg));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> lab(vertices_.size());
    for (std::size_t i = 0; i < lab.size(); ++i) lab[i] = find(static_cast<int>(i));
    return SetPartition::fromLabels(lab);
}

bool LabeledDigraph::isTree() const {
    return vertexCount() - edgeCount() == 1 && isConnected();
}

void dumpGraph(std::ostream& os, const LabeledDigraph& g) {
    os << "digraph\n";
    for (const Edge& e : g.edges()) os << e.label + 1 << ' ' << e.src + 1 << ' ' << e.trg + 1 << '\n';
}

std::string dumpGraph(const LabeledDigraph& g) {
    std::ostringstream os;
    dumpGraph(os, g);
    return os.str();
}

LabeledDigraph buildT(const AnnulusShape& shape) {
    const Permutation gamma = gammaOf(shape);
    std::vector<int> vs(static_cast<std::size_t>(shape.m()));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    es.reserve(vs.size());
    for (int j = 0; j < shape.m(); ++j) es.push_back({j, gamma(j), j});
    return LabeledDigraph(std::move(vs), std::move(es));
}

LabeledDigraph quotient(const LabeledDigraph& g, const SetPartition& p) {
    if (p.size() != g.vertexCount()) throw std::invalid_argument("quotient: partition does not cover the vertex set");
    std::vector<int> rep(static_cast<std::size_t>(p.blockCount()), -1);
    for (int i = 0; i < g.vertexCount(); ++i)
        if (rep[p.blockOf(i)] < 0) rep[p.blockOf(i)] = g.vertices()[i];  // vertices are sorted
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        es.push_back({e.label, rep[p.blockOf(g.vertexPosition(e.src))], rep[p.blockOf(g.vertexPosition(e.trg))]});
    return LabeledDigraph(rep, std::move(es));
}

EdgeClassPartition edgeClasses(const LabeledDigraph& g) {
    std::vector<int> lab;
    lab.reserve(g.edges().size());
    std::vector<std::pair<int, int>> keys;
    for (const Edge& e : g.edges()) {
        std::pair<int, int> key{std::min(e.src, e.trg), std::max(e.src, e.trg)};
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            lab.push_back(static_cast<int>(keys.size()));
            keys.push_back(key);
        } else {
            lab.push_back(static_cast<int>(it - keys.begin()));
        }
    }
    return {g, SetPartition::fromLabels(lab)};
}

LabeledDigraph EdgeClassPartition::elementarization() const {
    std::vector<Edge> es;
    for (const auto& block : classes.blocks()) es.push_back(base.edges()[block.front()]);
    return LabeledDigraph(base.vertices(), std::move(es));
}

std::vector<int> loopLabels(const LabeledDigraph& g) {
    std::vector<int> out;
    for (const Edge& e : g.edges())
        if (e.isLoop()) out.push_back(e.label);
    return out;
}

bool orientationBalance(const LabeledDigraph& g, const std::vector<int>& labels) {
    if (labels.empty()) return true;
    const Edge& first = g.edgeByLabel(labels.front());
    const int lo = std::min(first.src, first.trg), hi = std::max(first.src, first.trg);
    int forward = 0, backward = 0;
    for (int l : labels) {
        const Edge& e = g.edgeByLabel(l);
        if (std::min(e.src, e.trg) != lo || std::max(e.src, e.trg) != hi)
            throw std::invalid_argument("orientationBalance: labels span several edge classes");
        if (e.src == lo) ++forward;
        if (e.src == hi) ++backward;
    }
    return lo == hi || forward == backward;
}

LabeledDigraph bipartiteGTau(const LabeledDigraph& g, const SetPartition& tau) {
    const EdgeClassPartition ec = edgeClasses(g);
    if (tau.size() != ec.classes.blockCount())
        throw std::invalid_argument("bipartiteGTau: tau must partition the edge classes");
    const SetPartition comp = g.components();
    const int white = comp.blockCount();
    std::vector<int> vs(static_cast<std::size_t>(white + tau.blockCount()));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    const auto classBlocks = ec.classes.blocks();
    for (std::size_t k = 0; k < classBlocks.size(); ++k) {
        const Edge& e = g.edges()[classBlocks[k].front()];
        es.push_back({static_cast<int>(k), white + tau.blockOf(static_cast<int>(k)), comp.blockOf(g.vertexPosition(e.src))});
    }
    return LabeledDigraph(std::move(vs), std::move(es));
}

}  // namespace wigfluct
