#pragma once

#include <compare>
#include <map>
#include <vector>

#include "trinion/double.hpp"

namespace trinion::volumes {

using dk::NormalizedTriple;
using matgroup::Complex;
using matgroup::GroupElement;
using matgroup::Matrix;

inline constexpr double kTableTol = 1e-12;
inline constexpr double kDualRouteTol = 1e-10;

/// Column counts (j1, j2, j3) drawn from the three punctures; j1+j2+j3 = n
/// with each count in 0..n-1.
struct VolumeIndex {
    int j1 = 0, j2 = 0, j3 = 0;

    VolumeIndex(int a, int b, int c);
    int rank() const { return j1 + j2 + j3; }

    auto operator<=>(const VolumeIndex&) const = default;
};

/// All admissible indices for rank n; there are (n+4)(n-1)/2 of them.
std::vector<VolumeIndex> admissible_indices(int n);

struct VolumeTable {
    std::map<VolumeIndex, Complex> values;
    int rank = 0;
};

// The column assembly: u1 e_1, ..., u1 e_{j1}, then u2 e_n, ..., u2 e_{n-j2+1},
// then u3 e_n, ..., u3 e_{n-j3+1}.  Flags at the second and third puncture are
// taken in reversed order.
Matrix g_matrix(const VolumeIndex& idx, const GroupElement& u1, const GroupElement& u2,
                const GroupElement& u3);

/// Determinant of the column assembly in normalized coordinates
/// (u1 = b1+, u2 = n2-, u3 = b3+), one value per admissible index.
VolumeTable hG_columns(const NormalizedTriple& t);

// Closed form of the same table: block reduction of the column determinant
// leaves d_{1,1}...d_{1,j1} times a signed minor of b3+,
//   sign = (-1)^(j2 j3 + j2(j2-1)/2 + j3(j3-1)/2),
//   minor rows j1+1..j1+j3, columns n-j3+1..n.
Complex hG_closed_form(const VolumeIndex& idx, const Matrix& b1_plus, const Matrix& b3_plus);
VolumeTable hG(const NormalizedTriple& t);

// Rebuilds the unipotent factor n3+ from the table and the two diagonals by
// back-substitution: column n first, then each column leftward, walking up.
// Throws ZeroDenominator when a required value vanishes (non-generic input).
Matrix recover_unipotent(const VolumeTable& table, const Matrix& d1, const Matrix& d3);

/// The table read as homogeneous coordinates, in admissible_indices order.
/// Throws AllZero on the indeterminacy locus.
std::vector<Complex> projective_coordinates(const NormalizedTriple& t);

// Real Hamiltonians on the unitary locus:
//   H^GG = A f1 f2 f3 |H^G|^2,  A = prod_k (alpha_k^1 - alpha_k^n - 1),
// f-factors are alcove-coordinate differences attached to the index; a factor
// whose weight position falls outside 1..n defaults to 1.
std::map<VolumeIndex, double> hGG(const NormalizedTriple& t, const alcove::AlcovePoint& a1,
                                  const alcove::AlcovePoint& a2, const alcove::AlcovePoint& a3);

/// Number of admissible indices: (n+4)(n-1)/2.
long long volume_function_count(int n);

}  // namespace trinion::volumes
