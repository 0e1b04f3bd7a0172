#pragma once

#include <stdexcept>
#include <string>

namespace cyclopair {

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& msg) : std::runtime_error(msg) {}
};

struct ModulusNotPrime : std::runtime_error {
    explicit ModulusNotPrime(const std::string& msg) : std::runtime_error(msg) {}
};

struct ModulusNotSquareOfPrime : std::runtime_error {
    explicit ModulusNotSquareOfPrime(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleAtIndex : std::runtime_error {
    explicit PoleAtIndex(const std::string& msg) : std::runtime_error(msg) {}
};

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotIrregular : std::runtime_error {
    explicit NotIrregular(const std::string& msg) : std::runtime_error(msg) {}
};

// Signals an arithmetic bug, not a mathematical possibility.
struct IntegralityFailure : std::logic_error {
    explicit IntegralityFailure(const std::string& msg) : std::logic_error(msg) {}
};

// The kernel of a relation system came out zero; this would contradict
// the expected existence of a nontrivial pairing and is flagged loudly.
struct TriviallyZero : std::runtime_error {
    explicit TriviallyZero(const std::string& msg) : std::runtime_error(msg) {}
};

struct PairMismatch : std::invalid_argument {
    explicit PairMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct MissingLambda : std::invalid_argument {
    explicit MissingLambda(const std::string& msg) : std::invalid_argument(msg) {}
};

struct WrongShape : std::invalid_argument {
    explicit WrongShape(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ZeroCoefficient : std::invalid_argument {
    explicit ZeroCoefficient(const std::string& msg) : std::invalid_argument(msg) {}
};

struct CacheCorrupt : std::runtime_error {
    explicit CacheCorrupt(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cyclopair
