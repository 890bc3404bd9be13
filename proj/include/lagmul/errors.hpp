#ifndef LAGMUL_ERRORS_HPP
#define LAGMUL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lagmul {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero field element") {}
};

struct MixedFields : Error {
    MixedFields() : Error("operands belong to different fields") {}
};

struct MixedRings : Error {
    MixedRings() : Error("operands belong to different polynomial rings") {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& op)
        : Error(op + " is undefined for the zero polynomial") {}
};

struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& what)
        : Error(what + ": polynomial is not homogeneous") {}
};

struct NotGraded : Error {
    explicit NotGraded(const std::string& what)
        : Error("complex is not graded: " + what) {}
};

struct InfiniteDimensional : Error {
    InfiniteDimensional() : Error("quotient ring is infinite-dimensional") {}
};

struct UnitIdeal : Error {
    explicit UnitIdeal(const std::string& what)
        : Error(what + ": ideal is the unit ideal") {}
};

struct NonIsolatedCritical : Error {
    NonIsolatedCritical()
        : Error("critical locus is not isolated (infinite-dimensional quotient)") {}
};

struct KTooLarge : Error {
    KTooLarge() : Error("minor size exceeds matrix dimensions") {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

struct FieldTooLarge : Error {
    FieldTooLarge() : Error("point enumeration over this field is too large") {}
};

struct RationalFieldUnsupported : Error {
    RationalFieldUnsupported()
        : Error("operation requires a finite prime field") {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what)
        : Error("resource limit exceeded: " + what) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

struct ReservedVariable : Error {
    explicit ReservedVariable(const std::string& name)
        : Error("variable name '" + name + "' is reserved") {}
};

struct TooManyConstraints : Error {
    TooManyConstraints()
        : Error("constraint count must be strictly less than variable count") {}
};

struct HypothesesFail : Error {
    HypothesesFail() : Error("required hypotheses do not hold for this system") {}
};

struct TruncationTooSmall : Error {
    int degree;
    explicit TruncationTooSmall(int degree_)
        : Error("truncation too small: nonzero strand at degree " +
                std::to_string(degree_)),
          degree(degree_) {}
};

}  // namespace lagmul

#endif
