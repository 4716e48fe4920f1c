#pragma once

#include <stdexcept>
#include <string>

namespace rsusy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonTerminating : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct SingularPotential : Error { using Error::Error; };

// carries the iteration count reached when the solver gave up
struct ConvergenceFailure : Error {
    int iterations = 0;
    ConvergenceFailure(const std::string& what, int iters) : Error(what), iterations(iters) {}
};

enum class Variant { printed, corrected };

inline const char* to_string(Variant v) { return v == Variant::printed ? "printed" : "corrected"; }

}  // namespace rsusy
