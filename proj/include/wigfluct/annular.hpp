#pragma once

#include <utility>
#include <vector>

#include "wigfluct/combinat.hpp"

namespace wigfluct {

// Circle sizes (m_1,...,m_r) of an annulus with r boundary circles.
class AnnulusShape {
public:
    AnnulusShape() = default;
    explicit AnnulusShape(std::vector<int> orders);

    const std::vector<int>& orders() const noexcept { return orders_; }
    int m() const noexcept { return m_; }
    int r() const noexcept { return static_cast<int>(orders_.size()); }
    // Index of the circle holding element x.
    int circleOf(int x) const { return circle_[static_cast<std::size_t>(x)]; }

    friend bool operator==(const AnnulusShape& a, const AnnulusShape& b) { return a.orders_ == b.orders_; }

private:
    std::vector<int> orders_;
    std::vector<int> circle_;
    int m_ = 0;
};

// gamma_{m_1,...,m_r}: consecutive cycles (1..m_1)(m_1+1..m_1+m_2)...
Permutation gammaOf(const AnnulusShape& shape);

enum class NCClass { NC, NCNonConnecting, Neither };

const char* toString(NCClass c);

// Classifies p relative to g via #(p)+#(g)+#(p^-1 g) against m + 2 #(p v g).
NCClass isNonCrossingRel(const Permutation& p, const Permutation& g);

// Pairings that are NC (resp. non-connecting NC) relative to gammaOf(shape).
std::vector<Permutation> enumerateNC2(const AnnulusShape& shape);
std::vector<Permutation> enumerateNC2nc(const AnnulusShape& shape);

using Transposition = std::pair<int, int>;  // (u, v) with u < v

std::vector<Transposition> throughStrings(const Permutation& sigma, const AnnulusShape& shape);
// #(gamma v sigma') == 2, sigma' = sigma with (u,v) split into fixed points.
bool isCutting(const Permutation& sigma, Transposition cycle, const AnnulusShape& shape);
// u and v lie in the same cycle of gamma*sigma.
bool isLoopBlock(const Permutation& sigma, Transposition cycle, const AnnulusShape& shape);

}  // namespace wigfluct
