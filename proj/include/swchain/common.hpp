#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swchain {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Model { UC, Bipartite, Directed };

const char* model_name(Model m);

// Unordered vertex pair, always stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Input or precondition problems. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Broken internal invariants. The CLI maps these to exit code 1.
class InvariantError : public std::logic_error {
public:
    InvariantError(std::string kind, const std::string& what)
        : std::logic_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define SWCHAIN_VALIDATION_ERROR(Name)                                        \
    struct Name : ValidationError {                                           \
        explicit Name(const std::string& w) : ValidationError(#Name, w) {}    \
    };
#define SWCHAIN_INVARIANT_ERROR(Name)                                         \
    struct Name : InvariantError {                                            \
        explicit Name(const std::string& w) : InvariantError(#Name, w) {}     \
    };

SWCHAIN_VALIDATION_ERROR(ParseError)
SWCHAIN_VALIDATION_ERROR(NotGraphical)
SWCHAIN_VALIDATION_ERROR(CapExceeded)
SWCHAIN_VALIDATION_ERROR(ModelMismatch)
SWCHAIN_VALIDATION_ERROR(InvalidMove)
SWCHAIN_VALIDATION_ERROR(Unbalanced)
SWCHAIN_VALIDATION_ERROR(InvalidMatching)
SWCHAIN_VALIDATION_ERROR(InvalidCircuit)
SWCHAIN_VALIDATION_ERROR(PreconditionViolation)

SWCHAIN_INVARIANT_ERROR(InternalInvariant)
SWCHAIN_INVARIANT_ERROR(InvariantViolation)
SWCHAIN_INVARIANT_ERROR(NoBranch)
SWCHAIN_INVARIANT_ERROR(NonTermination)
SWCHAIN_INVARIANT_ERROR(ReconstructionMismatch)
SWCHAIN_INVARIANT_ERROR(ConvergenceFailure)

#undef SWCHAIN_VALIDATION_ERROR
#undef SWCHAIN_INVARIANT_ERROR

BigInt binomial(long n, long k);
BigInt factorial(long n);

}  // namespace swchain
