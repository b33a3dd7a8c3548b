#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wigfluct {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Sorted multiset of even indices: {4,4} is b4^2.
using Monomial = std::vector<int>;

// Total degree first, then lexicographic on the sorted indices.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Polynomial in b2, b4, b6, ... with exact rational coefficients.
class BetaPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    BetaPoly() = default;
    static BetaPoly constant(const Rational& c);
    static BetaPoly beta(int index);
    static BetaPoly monomial(Monomial m, const Rational& c = 1);
    // Reads the format written by toString(), e.g. "8*b8 + 24*b4^2" or "-1/2*b2*b4".
    static BetaPoly parse(std::string_view text);

    const Terms& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }
    bool hasIntegerCoefficients() const;

    void addTerm(Monomial m, const Rational& c);

    BetaPoly& operator+=(const BetaPoly& o);
    BetaPoly& operator-=(const BetaPoly& o);
    BetaPoly& operator*=(const Rational& c);

    friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
    friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
    friend BetaPoly operator*(BetaPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const BetaPoly& a, const BetaPoly& b) { return a.terms_ == b.terms_; }

    // "0" for the zero polynomial; terms in GradedLex order.
    std::string toString() const;

private:
    Terms terms_;
};

inline BetaPoly add(const BetaPoly& a, const BetaPoly& b) { return a + b; }
inline BetaPoly mul(const BetaPoly& a, const BetaPoly& b) { return a * b; }
inline BetaPoly scale(const BetaPoly& p, const Rational& c) { return p * c; }

// Throws UnboundSymbol when an index has no value.
double evaluate(const BetaPoly& p, const std::map<int, double>& values);
Rational evaluateExact(const BetaPoly& p, const std::map<int, Rational>& values);

// b2 = 1 and every other symbol 0.
Rational gueSpecialize(const BetaPoly& p);

std::string toString(const Rational& q);

}  // namespace wigfluct
