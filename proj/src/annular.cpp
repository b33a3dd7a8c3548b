#include "wigfluct/annular.hpp"

#include <stdexcept>

#include "wigfluct/errors.hpp"

namespace wigfluct {

AnnulusShape::AnnulusShape(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("annulus needs at least one circle");
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (orders_[i] < 1) throw std::invalid_argument("circle sizes must be positive");
        m_ += orders_[i];
        circle_.insert(circle_.end(), static_cast<std::size_t>(orders_[i]), static_cast<int>(i));
    }
}

Permutation gammaOf(const AnnulusShape& shape) {
    std::vector<int> img(static_cast<std::size_t>(shape.m()));
    int start = 0;
    for (int len : shape.orders()) {
        for (int k = 0; k < len; ++k) img[start + k] = start + (k + 1) % len;
        start += len;
    }
    return Permutation(std::move(img));
}

const char* toString(NCClass c) {
    switch (c) {
        case NCClass::NC: return "NC";
        case NCClass::NCNonConnecting: return "NC_nonconnecting";
        case NCClass::Neither: return "neither";
    }
    return "?";
}

NCClass isNonCrossingRel(const Permutation& p, const Permutation& g) {
    if (p.size() != g.size()) throw SizeMismatch("isNonCrossingRel: ground sets differ");
    const int n = p.size();
    const int joined = join(cycles(p), cycles(g)).blockCount();
    const int lhs = p.cycleCount() + g.cycleCount() + compose(p.inverse(), g).cycleCount();
    if (lhs != n + 2 * joined) return NCClass::Neither;
    return joined == 1 ? NCClass::NC : NCClass::NCNonConnecting;
}

namespace {

std::vector<Permutation> pairingsOfClass(const AnnulusShape& shape, NCClass want) {
    std::vector<Permutation> out;
    if (shape.m() % 2) return out;
    const Permutation g = gammaOf(shape);
    PairingStream ps(shape.m());
    while (auto p = ps.next()) {
        Permutation s = pairingPermutation(*p);
        if (isNonCrossingRel(s, g) == want) out.push_back(std::move(s));
    }
    return out;
}

void requireCycle(const Permutation& sigma, Transposition c) {
    auto [u, v] = c;
    if (u < 0 || v < 0 || u >= sigma.size() || v >= sigma.size() || u == v || sigma(u) != v || sigma(v) != u)
        throw std::invalid_argument("(" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                    ") is not a cycle of sigma");
}

}  // namespace

std::vector<Permutation> enumerateNC2(const AnnulusShape& shape) { return pairingsOfClass(shape, NCClass::NC); }

std::vector<Permutation> enumerateNC2nc(const AnnulusShape& shape) {
    return pairingsOfClass(shape, NCClass::NCNonConnecting);
}

std::vector<Transposition> throughStrings(const Permutation& sigma, const AnnulusShape& shape) {
    if (sigma.size() != shape.m()) throw SizeMismatch("throughStrings: size differs from shape");
    std::vector<Transposition> out;
    for (int u = 0; u < sigma.size(); ++u) {
        int v = sigma(u);
        if (u < v && shape.circleOf(u) != shape.circleOf(v)) out.emplace_back(u, v);
    }
    return out;
}

bool isCutting(const Permutation& sigma, Transposition cycle, const AnnulusShape& shape) {
    if (sigma.size() != shape.m()) throw SizeMismatch("isCutting: size differs from shape");
    requireCycle(sigma, cycle);
    std::vector<int> img = sigma.oneLine();
    img[cycle.first] = cycle.first;
    img[cycle.second] = cycle.second;
    const Permutation cut(std::move(img));
    return join(cycles(gammaOf(shape)), cycles(cut)).blockCount() == 2;
}

bool isLoopBlock(const Permutation& sigma, Transposition cycle, const AnnulusShape& shape) {
    if (sigma.size() != shape.m()) throw SizeMismatch("isLoopBlock: size differs from shape");
    requireCycle(sigma, cycle);
    const SetPartition gs = cycles(compose(gammaOf(shape), sigma));
    return gs.blockOf(cycle.first) == gs.blockOf(cycle.second);
}

}  // namespace wigfluct
