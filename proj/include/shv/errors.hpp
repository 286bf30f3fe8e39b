#pragma once

#include <stdexcept>
#include <string>

namespace shv {

struct DivisionByZeroScalar : std::runtime_error {
    DivisionByZeroScalar() : std::runtime_error("division by zero scalar") {}
};

struct MissingAssignment : std::runtime_error {
    explicit MissingAssignment(const std::string& what)
        : std::runtime_error("missing assignment for " + what) {}
};

struct DenominatorVanishes : std::runtime_error {
    DenominatorVanishes() : std::runtime_error("denominator vanishes at the given point") {}
};

struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownIndeterminate : std::runtime_error {
    explicit UnknownIndeterminate(const std::string& name)
        : std::runtime_error("unknown indeterminate: " + name) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg = "lattice dimension mismatch")
        : std::runtime_error(msg) {}
};

struct VariantMismatch : std::runtime_error {
    explicit VariantMismatch(const std::string& msg = "symbol not admitted by algebra variant")
        : std::runtime_error(msg) {}
};

struct NonGenericSpecialization : std::runtime_error {
    explicit NonGenericSpecialization(const std::string& msg)
        : std::runtime_error("non-generic specialization of mu: " + msg) {}
};

struct UnderdeterminedWindow : std::runtime_error {
    UnderdeterminedWindow() : std::runtime_error("window too small for decomposition (need B >= 2)") {}
};

struct DimensionTooSmall : std::runtime_error {
    DimensionTooSmall() : std::runtime_error("generalized Verma construction needs n >= 2") {}
};

struct AntisymmetryViolation : std::runtime_error {
    AntisymmetryViolation() : std::runtime_error("cochain values violate antisymmetry") {}
};

} // namespace shv
