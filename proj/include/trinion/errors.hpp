#pragma once

#include <stdexcept>
#include <string>

namespace trinion {

// Base class for every domain error raised by the library.  Each error names
// the structural condition that failed, so callers can catch the precise one.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A leading/trailing principal minor vanished: the point is outside the
// generic locus needed for a triangular factorization.
struct SingularMinor : Error {
    explicit SingularMinor(int k)
        : Error("singular minor of order " + std::to_string(k)), order(k) {}
    int order;
};

struct NotUnipotent : Error {
    NotUnipotent() : Error("matrix is not unipotent triangular") {}
};

struct NotOrdered : Error {
    NotOrdered() : Error("weights are not weakly decreasing") {}
};

struct AffineBoundViolated : Error {
    AffineBoundViolated() : Error("last weight drops below first weight minus one") {}
};

struct NotTraceless : Error {
    NotTraceless() : Error("weights do not sum to zero") {}
};

struct NoAlcoveBranch : Error {
    NoAlcoveBranch() : Error("no logarithm branch lands in the fundamental alcove") {}
};

struct DefectiveMatrix : Error {
    DefectiveMatrix() : Error("matrix is not diagonalizable") {}
};

struct IllConditioned : Error {
    IllConditioned() : Error("pairing matrix condition number exceeds threshold") {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what) : Error("zero denominator: " + what) {}
};

struct AllZero : Error {
    AllZero() : Error("all volume coordinates vanish (indeterminacy locus)") {}
};

struct RankMismatch : Error {
    RankMismatch() : Error("weight vectors have different ranks") {}
};

struct TorsionTooLarge : Error {
    TorsionTooLarge() : Error("torsion rank must be strictly less than the sheaf rank") {}
};

struct TorsionPatternViolation : Error {
    explicit TorsionPatternViolation(const std::string& clause)
        : Error("torsion pattern violation: " + clause) {}
};

struct InvalidGraph : Error {
    explicit InvalidGraph(const std::string& what) : Error("invalid trinion graph: " + what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("valuation of the zero polynomial") {}
};

struct Unbounded : Error {
    Unbounded() : Error("polytope is unbounded or empty") {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema: " + what) {}
};

}  // namespace trinion
