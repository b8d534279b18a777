#pragma once

#include <stdexcept>
#include <string>

namespace cy {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact-core
struct DivisionByZeroSeries : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };

// operator
struct EmptyOperator : Error { using Error::Error; };
struct ZeroBoundaryTerm : Error { using Error::Error; };
struct DegenerateLeadingCoefficient : Error { using Error::Error; };
struct NonClearableTwist : Error { using Error::Error; };
struct ZeroScale : Error { using Error::Error; };

// frobenius
struct NotMUM : Error { using Error::Error; };
struct VanishingP0AtPositiveInteger : Error { using Error::Error; };
struct NotSelfDual : Error { using Error::Error; };

// cy-criteria
struct WrongOrder : Error { using Error::Error; };
struct InsufficientDepth : Error { using Error::Error; };

// constructions
struct SyntaxError : Error {
    int line, col;
    SyntaxError(const std::string& msg, int line_, int col_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};
struct DomainError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// search
struct InvalidSpectrumParams : Error { using Error::Error; };

// cli-db
struct IOError : Error { using Error::Error; };

} // namespace cy
