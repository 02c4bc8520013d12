#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Base class for all library errors. CLI maps these to exit code 2.
struct BohrError : std::runtime_error {
    explicit BohrError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonHermitianInput : BohrError {
    explicit NonHermitianInput(const std::string& msg = "matrix is not Hermitian")
        : BohrError(msg) {}
};

struct DimensionMismatch : BohrError {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch")
        : BohrError(msg) {}
};

struct ZeroRankProjection : BohrError {
    explicit ZeroRankProjection(const std::string& msg = "projection has rank zero")
        : BohrError(msg) {}
};

struct PosetTooLarge : BohrError {
    explicit PosetTooLarge(const std::string& msg) : BohrError(msg) {}
};

struct IndexOutOfRange : BohrError {
    explicit IndexOutOfRange(const std::string& msg = "index out of range")
        : BohrError(msg) {}
};

struct EnumerationTooLarge : BohrError {
    explicit EnumerationTooLarge(const std::string& msg) : BohrError(msg) {}
};

struct InvalidCovering : BohrError {
    int axiom;  // 1..4, the first violated covering axiom
    explicit InvalidCovering(int which)
        : BohrError("covering relation violates axiom " + std::to_string(which)),
          axiom(which) {}
};

struct NotContinuous : BohrError {
    int condition;  // 1..3, the violated continuity condition
    explicit NotContinuous(int which)
        : BohrError("map violates continuity condition " + std::to_string(which)),
          condition(which) {}
};

struct NotInContext : BohrError {
    explicit NotInContext(const std::string& msg = "observable not in the context's span")
        : BohrError(msg) {}
};

struct NotComparable : BohrError {
    explicit NotComparable(const std::string& msg = "contexts are not comparable")
        : BohrError(msg) {}
};

struct PosetMismatch : BohrError {
    explicit PosetMismatch(const std::string& msg = "operands live over different posets")
        : BohrError(msg) {}
};

struct IncompleteChoice : BohrError {
    explicit IncompleteChoice(const std::string& msg = "choice function is not total")
        : BohrError(msg) {}
};

struct InputError : BohrError {
    explicit InputError(const std::string& msg) : BohrError(msg) {}
};

}  // namespace bohr
