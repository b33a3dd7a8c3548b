#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace wigfluct {

// Phase-invariant entry laws x = rho * exp(i theta), theta uniform and independent of rho.
struct EntryLaw {
    enum class Kind { ComplexGaussian, FixedModulus, TwoPointModulus };
    Kind kind = Kind::ComplexGaussian;
    double c1 = 1.0;  // modulus (fixed) or first modulus (two-point)
    double c2 = 1.0;  // second modulus (two-point)
    double p = 0.5;   // probability of c1 (two-point)

    static EntryLaw gaussian();
    static EntryLaw fixedModulus(double c);
    static EntryLaw twoPoint(double c1, double c2, double p);
    // "gue", "fixed-modulus:c" or "two-point:c1,c2,p"
    static EntryLaw parse(const std::string& text);

    // E|x|^{2k}
    double absMoment(int k) const;
    std::complex<double> draw(std::mt19937_64& rng) const;
    std::string describe() const;
};

// b_{2n} = k_{2n}(x, conj x, ..., x, conj x) for n <= 4.
double betaOf(const EntryLaw& law, int n);
// b2..b8 keyed by index, ready for evaluate().
std::map<int, double> betaValues(const EntryLaw& law);

using WignerMatrix = Eigen::MatrixXcd;

// Self-adjoint N x N matrix scaled by 1/sqrt(N): iid law entries above the
// diagonal, real N(0, b2) on the diagonal. Deterministic in seed.
WignerMatrix sample(const EntryLaw& law, int N, std::uint64_t seed);

// Seed of sample number i in a run started from seed (splitmix64 of seed + i).
std::uint64_t sampleSeed(std::uint64_t seed, std::uint64_t i);

struct Fluctuation {
    double estimate = 0.0;
    double standardError = 0.0;
    int batches = 0;
};

// Plug-in joint cumulant of (Tr X^{m_1}, ..., Tr X^{m_r}) over the samples,
// times N^{r-2}. The standard error comes from floor(sqrt(samples)) batches.
Fluctuation empiricalFluctuation(const EntryLaw& law, int N, const std::vector<int>& idx, std::uint64_t samples,
                                 std::uint64_t seed, unsigned threads = 1);

// Plug-in joint cumulant of the columns of rows (one row per observation).
double jointCumulant(const std::vector<std::vector<double>>& rows);

}  // namespace wigfluct
