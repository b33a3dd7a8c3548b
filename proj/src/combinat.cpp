#include "wigfluct/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "wigfluct/errors.hpp"

namespace wigfluct {

namespace {

// Reads the integers of one bracketed group "(a,b,c)" or "{a,b}" starting at pos.
std::vector<int> readGroup(std::string_view text, std::size_t& pos, char open, char close) {
    if (text[pos] != open) throw std::invalid_argument("expected '" + std::string(1, open) + "'");
    ++pos;
    std::vector<int> out;
    std::string digits;
    auto flush = [&] {
        if (!digits.empty()) {
            out.push_back(std::stoi(digits));
            digits.clear();
        }
    };
    while (pos < text.size() && text[pos] != close) {
        char c = text[pos++];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else if (c == ',' || c == ' ') {
            flush();
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "'");
        }
    }
    if (pos == text.size()) throw std::invalid_argument("unterminated group");
    flush();
    ++pos;
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return Permutation(std::move(id));
}

Permutation Permutation::fromCycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            int a = c[k] - 1, b = c[(k + 1) % c.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("cycle entry out of range");
            if (used[a]) throw std::invalid_argument("element repeated across cycles");
            used[a] = 1;
            img[a] = b;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, int n) {
    std::vector<std::vector<int>> cs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        auto g = readGroup(text, pos, '(', ')');
        if (!g.empty()) cs.push_back(std::move(g));
    }
    return fromCycles(n, cs);
}

std::vector<std::vector<int>> Permutation::cycleList() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image_.size(), 0);
    for (int s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int x = s; !seen[x]; x = image_[x]) {
            seen[x] = 1;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int Permutation::cycleCount() const {
    int count = 0;
    std::vector<char> seen(image_.size(), 0);
    for (int s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        ++count;
        for (int x = s; !seen[x]; x = image_[x]) seen[x] = 1;
    }
    return count;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::isInvolution() const {
    for (int i = 0; i < size(); ++i)
        if (image_[image_[i]] != i) return false;
    return true;
}

std::string Permutation::toString() const {
    std::string s;
    for (const auto& c : cycleList()) {
        if (c.size() < 2) continue;
        s += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(c[k] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------- SetPartition

SetPartition SetPartition::fromLabels(const std::vector<int>& labels) {
    SetPartition p;
    p.rgs_.resize(labels.size());
    std::vector<std::pair<int, int>> seen;  // (label, canonical id), small
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int id = -1;
        for (const auto& [lab, cid] : seen)
            if (lab == labels[i]) {
                id = cid;
                break;
            }
        if (id < 0) {
            id = static_cast<int>(seen.size());
            seen.emplace_back(labels[i], id);
        }
        p.rgs_[i] = id;
    }
    p.blocks_ = static_cast<int>(seen.size());
    return p;
}

SetPartition SetPartition::fromBlocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> lab(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (int x : blocks[b]) {
            if (x < 0 || x >= n) throw std::invalid_argument("block element out of range");
            if (lab[x] >= 0) throw std::invalid_argument("blocks overlap");
            lab[x] = static_cast<int>(b);
        }
    }
    if (std::find(lab.begin(), lab.end(), -1) != lab.end())
        throw std::invalid_argument("blocks do not cover the ground set");
    return fromLabels(lab);
}

SetPartition SetPartition::parse(std::string_view text, int n) {
    std::vector<std::vector<int>> bs;
    std::size_t pos = 0;
    int hi = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        auto g = readGroup(text, pos, '{', '}');
        for (int& x : g) {
            hi = std::max(hi, x);
            --x;
        }
        bs.push_back(std::move(g));
    }
    return fromBlocks(n < 0 ? hi : n, bs);
}

SetPartition SetPartition::singletons(int n) {
    std::vector<int> lab(static_cast<std::size_t>(n));
    std::iota(lab.begin(), lab.end(), 0);
    return fromLabels(lab);
}

SetPartition SetPartition::full(int n) { return fromLabels(std::vector<int>(static_cast<std::size_t>(n), 0)); }

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < size(); ++i) out[rgs_[i]].push_back(i);
    return out;
}

std::vector<int> SetPartition::blockSizes() const {
    std::vector<int> out(static_cast<std::size_t>(blocks_), 0);
    for (int b : rgs_) ++out[b];
    return out;
}

bool SetPartition::refines(const SetPartition& other) const {
    if (other.size() != size()) throw SizeMismatch("refines: ground sets differ");
    std::vector<int> image(static_cast<std::size_t>(blocks_), -1);
    for (int i = 0; i < size(); ++i) {
        int& t = image[rgs_[i]];
        if (t < 0)
            t = other.rgs_[i];
        else if (t != other.rgs_[i])
            return false;
    }
    return true;
}

std::string SetPartition::toString() const {
    std::string s;
    for (const auto& b : blocks()) {
        s += '{';
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(b[k] + 1);
        }
        s += '}';
    }
    return s;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.labels()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
}

// ---------------------------------------------------------------- operations

int length(const Permutation& p) { return p.size() - p.cycleCount(); }
int length(const SetPartition& p) { return p.size() - p.blockCount(); }

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw SizeMismatch("compose: ground sets differ");
    std::vector<int> img(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) img[i] = p(q(i));
    return Permutation(std::move(img));
}

SetPartition cycles(const Permutation& p) {
    std::vector<int> lab(static_cast<std::size_t>(p.size()), -1);
    int id = 0;
    for (int s = 0; s < p.size(); ++s) {
        if (lab[s] >= 0) continue;
        for (int x = s; lab[x] < 0; x = p(x)) lab[x] = id;
        ++id;
    }
    return SetPartition::fromLabels(lab);
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) throw SizeMismatch("join: ground sets differ");
    const int n = a.size();
    UnionFind uf(n);
    std::vector<int> firstA(static_cast<std::size_t>(a.blockCount()), -1);
    std::vector<int> firstB(static_cast<std::size_t>(b.blockCount()), -1);
    for (int i = 0; i < n; ++i) {
        int& fa = firstA[a.blockOf(i)];
        if (fa < 0) fa = i; else uf.unite(fa, i);
        int& fb = firstB[b.blockOf(i)];
        if (fb < 0) fb = i; else uf.unite(fb, i);
    }
    std::vector<int> lab(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lab[i] = uf.find(i);
    return SetPartition::fromLabels(lab);
}

Permutation restrict(const Permutation& p, const std::vector<int>& M) {
    if (M.empty()) throw std::invalid_argument("restrict: empty subset");
    std::vector<int> pos(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t k = 0; k < M.size(); ++k) {
        if (M[k] < 0 || M[k] >= p.size()) throw std::invalid_argument("restrict: element out of range");
        if (k && M[k] <= M[k - 1]) throw std::invalid_argument("restrict: subset must be strictly increasing");
        pos[M[k]] = static_cast<int>(k);
    }
    std::vector<int> img(M.size());
    for (std::size_t k = 0; k < M.size(); ++k) {
        int x = p(M[k]);
        while (pos[x] < 0) x = p(x);
        img[k] = pos[x];
    }
    return Permutation(std::move(img));
}

SetPartition restrictPartition(const SetPartition& t, const std::vector<int>& A) {
    if (A.empty()) throw std::invalid_argument("restrictPartition: empty subset");
    std::vector<int> lab;
    lab.reserve(A.size());
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (A[k] < 0 || A[k] >= t.size()) throw std::invalid_argument("restrictPartition: element out of range");
        if (k && A[k] <= A[k - 1]) throw std::invalid_argument("restrictPartition: subset must be strictly increasing");
        lab.push_back(t.blockOf(A[k]));
    }
    return SetPartition::fromLabels(lab);
}

Permutation pairingPermutation(const SetPartition& pairing) {
    std::vector<int> img(static_cast<std::size_t>(pairing.size()));
    for (const auto& b : pairing.blocks()) {
        if (b.size() != 2) throw std::invalid_argument("not a pairing");
        img[b[0]] = b[1];
        img[b[1]] = b[0];
    }
    return Permutation(std::move(img));
}

// ---------------------------------------------------------------- streams

PartitionStream::PartitionStream(int n)
    : a_(static_cast<std::size_t>(std::max(n, 0)), 0), mx_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 1) done_ = true;
}

std::optional<SetPartition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // mx_[i] = max(a_[0..i-1]); find the rightmost position that may grow.
        int i = static_cast<int>(a_.size()) - 1;
        while (i > 0 && a_[i] > mx_[i]) --i;
        if (i <= 0) {
            done_ = true;
            return std::nullopt;
        }
        ++a_[i];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < a_.size(); ++j) {
            a_[j] = 0;
            mx_[j] = std::max(mx_[j - 1], a_[j - 1]);
        }
    }
    started_ = true;
    return SetPartition::fromLabels(a_);
}

PairingStream::PairingStream(int n) : n_(n), choice_(static_cast<std::size_t>(std::max(n, 0) / 2), 0) {
    if (n < 2 || n % 2) done_ = true;
}

std::optional<SetPartition> PairingStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // Mixed-radix increment: slot k has n-1-2k possible partners.
        int k = static_cast<int>(choice_.size()) - 1;
        while (k >= 0 && choice_[k] + 1 >= n_ - 1 - 2 * k) {
            choice_[k] = 0;
            --k;
        }
        if (k < 0) {
            done_ = true;
            return std::nullopt;
        }
        ++choice_[k];
    }
    started_ = true;
    std::vector<int> lab(static_cast<std::size_t>(n_), -1);
    std::vector<int> free(static_cast<std::size_t>(n_));
    std::iota(free.begin(), free.end(), 0);
    for (std::size_t k = 0; k < choice_.size(); ++k) {
        int a = free.front();
        int b = free[1 + choice_[k]];
        lab[a] = lab[b] = static_cast<int>(k);
        free.erase(free.begin() + 1 + choice_[k]);
        free.erase(free.begin());
    }
    return SetPartition::fromLabels(lab);
}

PermutationStream::PermutationStream(int n) : cur_(static_cast<std::size_t>(std::max(n, 0))) {
    std::iota(cur_.begin(), cur_.end(), 0);
    if (n < 1) done_ = true;
}

std::optional<Permutation> PermutationStream::next() {
    if (done_) return std::nullopt;
    if (started_ && !std::next_permutation(cur_.begin(), cur_.end())) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return Permutation(cur_);
}

}  // namespace wigfluct
