#pragma once

#include <stdexcept>
#include <string>

namespace specpot {

/// Base of every library failure. `mathematical()` separates failures that
/// describe the mathematics of the input (exit status 1 in the CLI) from
/// malformed input (exit status 2).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, bool mathematical = true)
        : std::runtime_error(what), mathematical_(mathematical) {}

    bool mathematical() const noexcept { return mathematical_; }

private:
    bool mathematical_;
};

#define SPECPOT_DEFINE_ERROR(Name, Math)                                       \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what, Math) {} \
    }

// algebra
SPECPOT_DEFINE_ERROR(ZeroDenominator, true);
SPECPOT_DEFINE_ERROR(PoleAtPoint, true);
SPECPOT_DEFINE_ERROR(ZeroLeadingCoefficient, true);
SPECPOT_DEFINE_ERROR(NonRationalCoefficient, true);
SPECPOT_DEFINE_ERROR(IncompatibleCarrier, true);
SPECPOT_DEFINE_ERROR(NotInvertible, true);

// interp
SPECPOT_DEFINE_ERROR(UnsolvableSystem, true);
SPECPOT_DEFINE_ERROR(DuplicateNode, true);

// seeds
SPECPOT_DEFINE_ERROR(SingularParameter, true);

// gauge
SPECPOT_DEFINE_ERROR(MixedFactor, true);
SPECPOT_DEFINE_ERROR(DegreeBoundViolated, true);
SPECPOT_DEFINE_ERROR(EDependentPotential, true);
SPECPOT_DEFINE_ERROR(InconsistentRatio, true);
SPECPOT_DEFINE_ERROR(NonzeroResidual, true);

// families
SPECPOT_DEFINE_ERROR(DegreeMismatch, true);
SPECPOT_DEFINE_ERROR(CoincidentNodes, true);

// spectrum
SPECPOT_DEFINE_ERROR(NoSolution, true);
SPECPOT_DEFINE_ERROR(DegreeCapExceeded, true);
SPECPOT_DEFINE_ERROR(SymbolicNu, false);

// io
SPECPOT_DEFINE_ERROR(UnboundParameter, false);
SPECPOT_DEFINE_ERROR(DocumentError, false);

#undef SPECPOT_DEFINE_ERROR

/// Parse failure carrying the byte offset and the set of tokens that would
/// have been accepted there.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string expected)
        : Error("SyntaxError: at offset " + std::to_string(offset) + ", expected " + expected,
                false),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace specpot
