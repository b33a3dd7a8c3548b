#pragma once

#include <stdexcept>
#include <string>

namespace wigfluct {

// Two objects that must live on the same ground set do not.
class SizeMismatch : public std::invalid_argument {
public:
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A request outside the supported computational range (order caps, oracle bounds).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial was evaluated without a value for one of its symbols.
class UnboundSymbol : public std::out_of_range {
public:
    explicit UnboundSymbol(int index)
        : std::out_of_range("no value bound for b" + std::to_string(index)), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

}  // namespace wigfluct
