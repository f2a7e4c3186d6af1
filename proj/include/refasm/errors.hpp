#pragma once

#include <stdexcept>
#include <string>

namespace refasm {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define REFASM_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// exactnum
REFASM_DEFINE_ERROR(DivisionByZero);
REFASM_DEFINE_ERROR(NonzeroRemainder);
REFASM_DEFINE_ERROR(ZeroPolynomial);
REFASM_DEFINE_ERROR(ParseError);

// asmcount
REFASM_DEFINE_ERROR(OrderTooLarge);
REFASM_DEFINE_ERROR(NonSquare);
REFASM_DEFINE_ERROR(BadEntry);
REFASM_DEFINE_ERROR(InvalidAsm);
REFASM_DEFINE_ERROR(InexactDivision);
REFASM_DEFINE_ERROR(OutOfRange);

// qcalc / orthopoly
REFASM_DEFINE_ERROR(DegenerateQ);
REFASM_DEFINE_ERROR(SingularHankel);
REFASM_DEFINE_ERROR(CrossCheckFailed);
REFASM_DEFINE_ERROR(PoleHit);

// identity
REFASM_DEFINE_ERROR(UnexpectedPole);
REFASM_DEFINE_ERROR(NonrealResult);
REFASM_DEFINE_ERROR(NonrealCoefficient);
REFASM_DEFINE_ERROR(AnnihilationFailed);
REFASM_DEFINE_ERROR(DivergentParameters);
REFASM_DEFINE_ERROR(InsufficientData);

#undef REFASM_DEFINE_ERROR

} // namespace refasm
