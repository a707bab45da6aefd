#pragma once

#include <map>
#include <vector>

#include "trinion/double.hpp"

namespace trinion::integrable {

using dk::NormalizedTriple;
using dk::TangentTriple;
using matgroup::Complex;
using matgroup::Matrix;

inline constexpr double kConditionLimit = 1e12;
inline constexpr double kFieldCheckTol = 1e-8;

struct HamiltonianIndex {
    enum class Kind { Local, Torus, Diagonal, Global, RealGlobal };
    Kind kind;
    int i = 0, j = 0, k = 0;  // local: (i,j); torus/diagonal: i = l; global: (i,j,k)

    static HamiltonianIndex local(int i, int j);
    static HamiltonianIndex torus(int l);
    static HamiltonianIndex diagonal(int l);
    static HamiltonianIndex global(int j1, int j2, int j3);
    static HamiltonianIndex real_global(int j1, int j2, int j3);

    auto operator<=>(const HamiltonianIndex&) const = default;
};

/// The strictly-upper index pairs (i,j), i<j, in row-major order; the shared
/// basis ordering for PairingMatrix and CoefficientMatrix.
std::vector<std::pair<int, int>> upper_pairs(int n);

// A[p][q] = omega(beta-slot basis direction p, mu-slot basis direction q),
// where direction q for the pair (i',j') is mu(j',i')^- = E_{j',i'}.  Basis
// directions are normalized against n3+ (beta+ = d3^-1 E d3), so that the
// coefficient matrix below has unit diagonal.
struct PairingMatrix {
    Matrix A;
    std::vector<std::pair<int, int>> basis;
    double condition_number = 0.0;
};

/// C[p][q] = dH_{basis[q]} along basis variation p; unit diagonal.
struct CoefficientMatrix {
    Matrix C;
    std::vector<std::pair<int, int>> basis;
};

/// H_{i,j} = log(n3+)_{i,j} for i<j, where b3+ = n3+ d3.
std::map<HamiltonianIndex, Complex> local_hamiltonians(const NormalizedTriple& t);

/// H^V_l = log(v)_l / (2 pi i), l = 1..n-1; alcove branch on the unitary
/// locus, principal branch in the complexified case.
std::vector<Complex> torus_hamiltonians(const alcove::TorusElement& v);

/// Entries of d3 in the factorization u3 = n3+ d3 n3-.
std::vector<Complex> diagonal_hamiltonians(const NormalizedTriple& t);

PairingMatrix pairing_matrix(const NormalizedTriple& t);
CoefficientMatrix coefficient_matrix(const NormalizedTriple& t);

// Hamiltonian vector field of a local Hamiltonian: the mu- combination
// -(A^-1 C) in the shared basis.  The defining relation dH(P) = -omega(P, X)
// is verified at construction.
TangentTriple hamiltonian_field(const NormalizedTriple& t, const HamiltonianIndex& idx);

Complex poisson_bracket(const NormalizedTriple& t, const HamiltonianIndex& f,
                        const HamiltonianIndex& g);

/// n3+ and d3 split out of the normalized triple's b3+ factor.
std::pair<Matrix, Matrix> unipotent_diagonal_split(const NormalizedTriple& t);

}  // namespace trinion::integrable
