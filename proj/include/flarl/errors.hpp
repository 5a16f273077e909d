#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace flarl {

// Base of all domain errors. `name()` is the stable identifier used on CLI
// diagnostic lines and in tests; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define FLARL_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                          \
    public:                                                               \
        explicit Name(const std::string& detail = #Name)                  \
            : Error(#Name, detail) {}                                     \
    }

FLARL_DEFINE_ERROR(ResolutionMismatch);
FLARL_DEFINE_ERROR(DivisionByZeroLabel);
FLARL_DEFINE_ERROR(DivisionByZeroScalar);
FLARL_DEFINE_ERROR(NegativeEvenRoot);
FLARL_DEFINE_ERROR(DomainError);
FLARL_DEFINE_ERROR(ShapeMismatch);
FLARL_DEFINE_ERROR(AmbientMismatch);
FLARL_DEFINE_ERROR(NotDirectSum);
FLARL_DEFINE_ERROR(NonSquareMatrix);
FLARL_DEFINE_ERROR(ZeroPolynomialDivisor);
FLARL_DEFINE_ERROR(AllZeroInputs);
FLARL_DEFINE_ERROR(ZeroPolynomial);
FLARL_DEFINE_ERROR(OrdinalRange);
FLARL_DEFINE_ERROR(FormatError);
FLARL_DEFINE_ERROR(UnknownFunction);

#undef FLARL_DEFINE_ERROR

// Parse errors carry the offending position (0-based byte offset).
class ParseError : public Error {
public:
    ParseError(const std::string& detail, std::size_t position)
        : Error("ParseError", detail + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace flarl
