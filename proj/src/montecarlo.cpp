#include "wigfluct/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "wigfluct/combinat.hpp"
#include "wigfluct/errors.hpp"

namespace wigfluct {

EntryLaw EntryLaw::gaussian() { return {}; }

EntryLaw EntryLaw::fixedModulus(double c) {
    if (!(c > 0)) throw std::invalid_argument("fixed-modulus law needs c > 0");
    EntryLaw l;
    l.kind = Kind::FixedModulus;
    l.c1 = c;
    return l;
}

EntryLaw EntryLaw::twoPoint(double c1, double c2, double p) {
    if (!(c1 >= 0) || !(c2 >= 0) || !(p >= 0 && p <= 1)) throw std::invalid_argument("two-point law needs c1, c2 >= 0 and p in [0,1]");
    EntryLaw l;
    l.kind = Kind::TwoPointModulus;
    l.c1 = c1;
    l.c2 = c2;
    l.p = p;
    return l;
}

EntryLaw EntryLaw::parse(const std::string& text) {
    if (text == "gue" || text == "gaussian") return gaussian();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown law '" + text + "'");
    const std::string name = text.substr(0, colon);
    std::vector<double> args;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad number '" + item + "' in law");
        args.push_back(v);
    }
    if (name == "fixed-modulus" && args.size() == 1) return fixedModulus(args[0]);
    if (name == "two-point" && args.size() == 3) return twoPoint(args[0], args[1], args[2]);
    throw std::invalid_argument("unknown law '" + text + "'");
}

double EntryLaw::absMoment(int k) const {
    switch (kind) {
        case Kind::ComplexGaussian: return std::tgamma(k + 1.0);
        case Kind::FixedModulus: return std::pow(c1, 2 * k);
        case Kind::TwoPointModulus: return p * std::pow(c1, 2 * k) + (1 - p) * std::pow(c2, 2 * k);
    }
    return 0;
}

std::complex<double> EntryLaw::draw(std::mt19937_64& rng) const {
    if (kind == Kind::ComplexGaussian) {
        std::normal_distribution<double> g(0.0, std::sqrt(0.5));
        const double re = g(rng);
        return {re, g(rng)};
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double rho = c1;
    if (kind == Kind::TwoPointModulus && u(rng) >= p) rho = c2;
    return std::polar(rho, 2 * std::numbers::pi * u(rng));
}

std::string EntryLaw::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::ComplexGaussian: os << "gue"; break;
        case Kind::FixedModulus: os << "fixed-modulus:" << c1; break;
        case Kind::TwoPointModulus: os << "two-point:" << c1 << ',' << c2 << ',' << p; break;
    }
    return os.str();
}

double betaOf(const EntryLaw& law, int n) {
    if (n < 1 || n > 4) throw CapabilityError("betaOf supports 1 <= n <= 4");
    // arguments alternate x, conj x; a block's moment vanishes unless balanced
    const int len = 2 * n;
    double total = 0.0;
    PartitionStream ps(len);
    while (auto pi = ps.next()) {
        double prod = 1.0;
        for (const auto& block : pi->blocks()) {
            int xs = 0;
            for (int i : block) xs += (i % 2 == 0);
            const int conj = static_cast<int>(block.size()) - xs;
            if (xs != conj) {
                prod = 0.0;
                break;
            }
            prod *= law.absMoment(xs);
        }
        if (prod == 0.0) continue;
        const int b = pi->blockCount();
        total += ((b - 1) % 2 ? -1.0 : 1.0) * std::tgamma(static_cast<double>(b)) * prod;
    }
    return total;
}

std::map<int, double> betaValues(const EntryLaw& law) {
    std::map<int, double> out;
    for (int n = 1; n <= 4; ++n) out[2 * n] = betaOf(law, n);
    return out;
}

std::uint64_t sampleSeed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

WignerMatrix sample(const EntryLaw& law, int N, std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("sample: N must be positive");
    std::mt19937_64 rng(seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    std::normal_distribution<double> diag(0.0, std::sqrt(betaOf(law, 1)));
    WignerMatrix X(N, N);
    for (int i = 0; i < N; ++i) {
        X(i, i) = diag(rng) * scale;
        for (int j = i + 1; j < N; ++j) {
            const std::complex<double> x = law.draw(rng) * scale;
            X(i, j) = x;
            X(j, i) = std::conj(x);
        }
    }
    return X;
}

double jointCumulant(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("jointCumulant: no observations");
    const int r = static_cast<int>(rows.front().size());
    const double count = static_cast<double>(rows.size());
    double total = 0.0;
    PartitionStream ps(r);
    while (auto pi = ps.next()) {
        double prod = 1.0;
        for (const auto& block : pi->blocks()) {
            double mean = 0.0;
            for (const auto& row : rows) {
                double v = 1.0;
                for (int i : block) v *= row[i];
                mean += v;
            }
            prod *= mean / count;
        }
        const int b = pi->blockCount();
        total += ((b - 1) % 2 ? -1.0 : 1.0) * std::tgamma(static_cast<double>(b)) * prod;
    }
    return total;
}

namespace {

std::vector<double> tracePowers(const WignerMatrix& X, const std::vector<int>& idx) {
    int maxM = 0;
    for (int m : idx) maxM = std::max(maxM, m);
    // powers[k] = X^k for k up to ceil(maxM / 2)
    std::vector<WignerMatrix> powers(static_cast<std::size_t>((maxM + 1) / 2 + 1));
    powers[1] = X;
    for (std::size_t k = 2; k < powers.size(); ++k) powers[k] = powers[k - 1] * X;
    std::vector<double> out;
    for (int m : idx) {
        const int a = m / 2, b = m - a;
        if (a == 0) {
            out.push_back(X.trace().real());
        } else {
            // Tr(X^a X^b) with X^b self-adjoint
            out.push_back((powers[a].array() * powers[b].conjugate().array()).sum().real());
        }
    }
    return out;
}

}  // namespace

Fluctuation empiricalFluctuation(const EntryLaw& law, int N, const std::vector<int>& idx, std::uint64_t samples,
                                 std::uint64_t seed, unsigned threads) {
    if (idx.empty() || idx.size() > 4) throw std::invalid_argument("empiricalFluctuation: need 1 <= r <= 4");
    for (int m : idx)
        if (m < 1) throw std::invalid_argument("empiricalFluctuation: orders must be positive");
    const auto batches = static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(samples))));
    if (batches < 2 || samples < 10 * batches)
        throw std::invalid_argument("empiricalFluctuation: need at least 10 samples per batch (samples >= 100)");

    std::vector<std::vector<double>> rows(samples);
    detail::parallelFor(samples, threads, [&](unsigned, std::size_t i) {
        rows[i] = tracePowers(sample(law, N, sampleSeed(seed, i)), idx);
    });

    const double scale = std::pow(static_cast<double>(N), static_cast<double>(idx.size()) - 2.0);
    Fluctuation out;
    out.estimate = scale * jointCumulant(rows);
    out.batches = static_cast<int>(batches);

    std::vector<double> est;
    const std::uint64_t per = samples / batches;
    for (std::uint64_t b = 0; b < batches; ++b) {
        const auto first = rows.begin() + static_cast<std::ptrdiff_t>(b * per);
        const auto last = (b + 1 == batches) ? rows.end() : first + static_cast<std::ptrdiff_t>(per);
        est.push_back(scale * jointCumulant(std::vector<std::vector<double>>(first, last)));
    }
    double mean = 0.0;
    for (double e : est) mean += e;
    mean /= static_cast<double>(est.size());
    double var = 0.0;
    for (double e : est) var += (e - mean) * (e - mean);
    var /= static_cast<double>(est.size() - 1);
    out.standardError = std::sqrt(var / static_cast<double>(est.size()));
    return out;
}

}  // namespace wigfluct
