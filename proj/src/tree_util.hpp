#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace wigfluct::detail {

// Undirected multigraph on nodes 0..nodes-1; a tree needs nodes-1 edges and no cycle.
inline bool isTree(int nodes, const std::vector<std::pair<int, int>>& edges) {
    if (nodes - static_cast<int>(edges.size()) != 1) return false;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace wigfluct::detail
