#ifndef EPSICOMP_ERRORS_HPP
#define EPSICOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epsicomp {

// Base for all domain errors raised by the library. Input/file problems are
// the caller's concern; everything below signals a violated contract or a
// mathematically undefined request.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define EPSICOMP_DEFINE_ERROR(NAME)                                  \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& msg) : Error(msg) {}        \
    }

EPSICOMP_DEFINE_ERROR(ZeroFunction);          // all sample values are zero
EPSICOMP_DEFINE_ERROR(LengthMismatch);        // arrays of unequal length
EPSICOMP_DEFINE_ERROR(StrideTooLarge);        // subgrid would drop below 2 nodes per axis
EPSICOMP_DEFINE_ERROR(OutOfRange);            // tabulated modulus queried beyond last knot
EPSICOMP_DEFINE_ERROR(NotAttained);           // epsilon exceeds sup of the modulus
EPSICOMP_DEFINE_ERROR(ErrorTooLarge);         // omega^{-1}(eps) > sqrt(k)/2, complexity would be negative
EPSICOMP_DEFINE_ERROR(NotHolder);             // operation requires a Holder modulus
EPSICOMP_DEFINE_ERROR(TooFewPoints);          // not enough retained nodes for the method
EPSICOMP_DEFINE_ERROR(UnsupportedDimension);  // method not defined for this grid dimension
EPSICOMP_DEFINE_ERROR(UnsupportedSelection);  // kept set lacks the structure the method needs
EPSICOMP_DEFINE_ERROR(AllMethodsFailed);      // every method in the family failed its preconditions
EPSICOMP_DEFINE_ERROR(DiscreteUndefined);     // floor(h* N) = 0, discrete complexity undefined
EPSICOMP_DEFINE_ERROR(TooFewKept);            // selection fraction keeps fewer than 2 points
EPSICOMP_DEFINE_ERROR(OrderTooHigh);          // difference order >= series length
EPSICOMP_DEFINE_ERROR(SeriesTooShort);        // series shorter than one window
EPSICOMP_DEFINE_ERROR(TooFewWindows);         // fewer than 4 usable windows for detection
EPSICOMP_DEFINE_ERROR(InvalidSpec);           // generator/config parameters violate invariants
EPSICOMP_DEFINE_ERROR(DegenerateFit);         // fit attempted on an exactly-recoverable function

#undef EPSICOMP_DEFINE_ERROR

}  // namespace epsicomp

#endif
