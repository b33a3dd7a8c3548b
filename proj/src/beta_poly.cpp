#include "wigfluct/beta_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "wigfluct/errors.hpp"

namespace wigfluct {

namespace {

void checkIndex(int k) {
    if (k < 2 || k % 2) throw std::invalid_argument("beta indices are even and at least 2, got " + std::to_string(k));
}

}  // namespace

std::string toString(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

BetaPoly BetaPoly::constant(const Rational& c) {
    BetaPoly p;
    p.addTerm({}, c);
    return p;
}

BetaPoly BetaPoly::beta(int index) { return monomial({index}, 1); }

BetaPoly BetaPoly::monomial(Monomial m, const Rational& c) {
    BetaPoly p;
    p.addTerm(std::move(m), c);
    return p;
}

bool BetaPoly::hasIntegerCoefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return denominator(t.second) == 1; });
}

void BetaPoly::addTerm(Monomial m, const Rational& c) {
    if (c == 0) return;
    for (int k : m) checkIndex(k);
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

BetaPoly& BetaPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
    BetaPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.addTerm(std::move(m), ca * cb);
        }
    return out;
}

std::string BetaPoly::toString() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            if (!mono.empty()) mono += '*';
            mono += "b" + std::to_string(m[i]);
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
        }
        if (mono.empty())
            s += wigfluct::toString(mag);
        else if (mag == 1)
            s += mono;
        else
            s += wigfluct::toString(mag) + "*" + mono;
    }
    return s;
}

BetaPoly BetaPoly::parse(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty polynomial text");
    BetaPoly out;
    std::size_t pos = 0;
    auto readInt = [&]() {
        std::size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected a number in '" + t + "'");
        return BigInt(t.substr(start, pos - start));
    };
    while (pos < t.size()) {
        Rational sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            if (t[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("expected '+' or '-' in '" + t + "'");
        }
        Rational coef = 1;
        Monomial mono;
        bool hasFactor = false;
        if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            BigInt num = readInt();
            BigInt den = 1;
            if (pos < t.size() && t[pos] == '/') {
                ++pos;
                den = readInt();
            }
            coef = Rational(num, den);
            hasFactor = true;
            if (pos < t.size() && t[pos] == '*') {
                ++pos;
                if (pos == t.size() || t[pos] != 'b') throw std::invalid_argument("dangling '*' in '" + t + "'");
            }
        }
        while (pos < t.size() && t[pos] == 'b') {
            ++pos;
            const int idx = static_cast<int>(readInt());
            int power = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                power = static_cast<int>(readInt());
            }
            mono.insert(mono.end(), static_cast<std::size_t>(power), idx);
            hasFactor = true;
            if (pos < t.size() && t[pos] == '*') {
                ++pos;
                if (pos == t.size() || t[pos] != 'b') throw std::invalid_argument("dangling '*' in '" + t + "'");
            }
        }
        if (!hasFactor) throw std::invalid_argument("empty term in '" + t + "'");
        if (pos < t.size() && t[pos] != '+' && t[pos] != '-')
            throw std::invalid_argument("unexpected character in '" + t + "'");
        out.addTerm(std::move(mono), sign * coef);
    }
    return out;
}

double evaluate(const BetaPoly& p, const std::map<int, double>& values) {
    double total = 0.0;
    for (const auto& [m, c] : p.terms()) {
        double term = static_cast<double>(c);
        for (int k : m) {
            auto it = values.find(k);
            if (it == values.end()) throw UnboundSymbol(k);
            term *= it->second;
        }
        total += term;
    }
    return total;
}

Rational evaluateExact(const BetaPoly& p, const std::map<int, Rational>& values) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (int k : m) {
            auto it = values.find(k);
            if (it == values.end()) throw UnboundSymbol(k);
            term *= it->second;
        }
        total += term;
    }
    return total;
}

Rational gueSpecialize(const BetaPoly& p) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms())
        if (std::all_of(m.begin(), m.end(), [](int k) { return k == 2; })) total += c;
    return total;
}

}  // namespace wigfluct
