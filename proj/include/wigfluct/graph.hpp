#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wigfluct/annular.hpp"
#include "wigfluct/combinat.hpp"

namespace wigfluct {

struct Edge {
    int label;
    int src;
    int trg;
    bool isLoop() const noexcept { return src == trg; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Oriented multigraph with uniquely labelled edges. Vertices are kept sorted by id
// and edges sorted by label, so "vertex position" and "edge position" below refer
// to indices into those sorted lists.
class LabeledDigraph {
public:
    LabeledDigraph() = default;
    LabeledDigraph(std::vector<int> vertices, std::vector<Edge> edges);

    const std::vector<int>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int vertexCount() const noexcept { return static_cast<int>(vertices_.size()); }
    int edgeCount() const noexcept { return static_cast<int>(edges_.size()); }

    int vertexPosition(int id) const;
    int edgePosition(int label) const;
    const Edge& edgeByLabel(int label) const { return edges_[static_cast<std::size_t>(edgePosition(label))]; }

    // Connected components (orientation ignored), as a partition of vertex positions.
    SetPartition components() const;
    bool isConnected() const { return components().blockCount() == 1; }
    // Connected with #vertices - #edges = 1. Parallel edges count individually.
    bool isTree() const;

private:
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
};

// Plain-text export: a "digraph" header then one "label src trg" line per edge.
// Labels and vertex ids are written 1-based.
std::string dumpGraph(const LabeledDigraph& g);
void dumpGraph(std::ostream& os, const LabeledDigraph& g);

// Vertices 0..m-1, edge j running gamma(j) -> j.
LabeledDigraph buildT(const AnnulusShape& shape);

// Identifies vertices in the same block of p (a partition of vertex positions).
// New vertex ids are the smallest original id in each block.
LabeledDigraph quotient(const LabeledDigraph& g, const SetPartition& p);

struct EdgeClassPartition {
    LabeledDigraph base;
    SetPartition classes;  // over edge positions of base

    // One edge per class (the lowest label), i.e. the elementarization.
    LabeledDigraph elementarization() const;
    // Class index holding the given label.
    int classOf(int label) const { return classes.blockOf(base.edgePosition(label)); }
};

// Edges are grouped when they join the same unordered pair of vertices.
EdgeClassPartition edgeClasses(const LabeledDigraph& g);

std::vector<int> loopLabels(const LabeledDigraph& g);

// Equal counts in both directions among the given labels. Throws if the labels
// do not all lie in one edge class. Loops are reported balanced.
bool orientationBalance(const LabeledDigraph& g, const std::vector<int>& labels);

// White vertices 0..W-1 are the components of g, black vertices W..W+B-1 the
// blocks of tau (a partition of the edge classes of g); edge k joins the black
// vertex of class k to the white vertex of its component.
LabeledDigraph bipartiteGTau(const LabeledDigraph& g, const SetPartition& tau);

}  // namespace wigfluct
