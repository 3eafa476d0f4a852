#pragma once

#include <stdexcept>
#include <string>

namespace gcomp {

// Base class for every failure the library reports.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Matrix is empty, non-square, or shapes disagree.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Asymmetry beyond the relative tolerance.
class NotSymmetricError : public Error {
public:
    using Error::Error;
};

// Smallest eigenvalue at or below the rank floor p*eps*lambda_max.
class NotPositiveDefiniteError : public Error {
public:
    using Error::Error;
};

// Iterative eigensolver hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Interpolation parameter outside [0, 1].
class SOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Squared radius t must be strictly positive.
class TNonPositiveError : public Error {
public:
    using Error::Error;
};

class IdenticalCovariancesError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

// The verbatim printed formula leaves its domain (log of a nonpositive value).
class PaperFormulaDomainError : public Error {
public:
    using Error::Error;
};

// Grid unusable: empty, unsorted, nonpositive, or too coarse for a stencil.
class GridError : public Error {
public:
    using Error::Error;
};

// Configuration value outside its documented range.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Argument violates a documented precondition (e.g. nonpositive weight).
class DomainError : public Error {
public:
    using Error::Error;
};

// A computed value landed where only a bug can put it (e.g. probability
// clamped by more than 10x the tolerance).
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace gcomp
