#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "trinion/errors.hpp"

namespace trinion::matgroup {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Entrywise max-modulus norm; all residual checks in the library use it.
double inf_norm(const Matrix& m);

inline constexpr double kDetTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kReconstructTol = 1e-10;
inline constexpr double kMinorTol = 1e-12;
inline constexpr double kRoundTripTol = 1e-12;

/// An SL(n,C) element: square complex matrix with unit determinant.
class GroupElement {
  public:
    explicit GroupElement(Matrix m);

    const Matrix& matrix() const { return m_; }
    int size() const { return static_cast<int>(m_.rows()); }

    /// True when g g* = I within tolerance.
    bool is_unitary() const;

  private:
    Matrix m_;
};

enum class GaussOrder {
    UpperDiagLower,  // g = n+ d n-
    LowerDiagUpper,  // g = n- d n+
};

struct GaussFactors {
    Matrix upper_unipotent;  // unit diagonal, zero below
    Matrix diagonal;         // nonzero diagonal entries
    Matrix lower_unipotent;  // unit diagonal, zero above
    GaussOrder order = GaussOrder::UpperDiagLower;

    /// Product of the three factors in the stated order.
    Matrix reconstruct() const;
};

/// Strictly triangular matrix (upper or lower); matrix^n = 0 by shape.
class NilpotentMatrix {
  public:
    explicit NilpotentMatrix(Matrix m);
    const Matrix& matrix() const { return m_; }
    int size() const { return static_cast<int>(m_.rows()); }

  private:
    Matrix m_;
};

// Triangular factorization g = n+ d n- (or n- d n+).  The upper-first order
// needs nonzero trailing principal minors, the lower-first order nonzero
// leading ones; a vanishing minor of order k throws SingularMinor(k).
// Minors are judged zero relative to the matrix norm: |minor| < tol * |g|^k.
GaussFactors gauss_decompose(const GroupElement& g, GaussOrder order);
GaussFactors gauss_decompose(const Matrix& g, GaussOrder order);

/// Finite-series logarithm of a unipotent triangular matrix.
NilpotentMatrix unipotent_log(const Matrix& u);

/// Finite-series exponential of a strictly triangular matrix.
Matrix nilpotent_exp(const NilpotentMatrix& xi);

// Directional derivative of the exponential at xi along zeta:
//   d/dt exp(xi + t zeta)|_0 = exp(xi) * sum_k (-ad xi)^k zeta / (k+1)!
// The series is finite because ad(xi) is nilpotent.
Matrix dexp(const NilpotentMatrix& xi, const Matrix& zeta);

/// I(g) = (g*)^{-1}; an involution fixing the unitary subgroup pointwise.
GroupElement involution_I(const GroupElement& g);

// Seeded random constructors.  Generic elements are exponentials of Gaussian
// traceless matrices with the determinant projected back to one.
GroupElement random_generic(int n, std::mt19937_64& rng);
GroupElement random_unitary(int n, std::mt19937_64& rng);
Matrix random_gaussian(int n, std::mt19937_64& rng);
Matrix random_strictly_upper(int n, std::mt19937_64& rng);
Matrix random_strictly_lower(int n, std::mt19937_64& rng);
/// Random diagonal with unit determinant; entries bounded away from zero.
Matrix random_diagonal_det1(int n, std::mt19937_64& rng);

}  // namespace trinion::matgroup
