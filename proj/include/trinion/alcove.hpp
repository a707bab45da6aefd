#pragma once

#include <set>
#include <vector>

#include "trinion/matgroup.hpp"

namespace trinion::alcove {

using matgroup::Complex;
using matgroup::Matrix;

inline constexpr double kAlcoveTol = 1e-12;
inline constexpr double kFaceTol = 1e-10;

/// Ordered traceless weight vector in the fundamental alcove:
/// a1 >= a2 >= ... >= an >= a1 - 1, sum = 0.
class AlcovePoint {
  public:
    explicit AlcovePoint(std::vector<double> alpha);

    const std::vector<double>& alpha() const { return alpha_; }
    int rank() const { return static_cast<int>(alpha_.size()); }
    double operator[](int i) const { return alpha_[static_cast<size_t>(i)]; }

  private:
    std::vector<double> alpha_;
};

/// Face label: the set of 1-based positions i with a_i > a_{i+1}.
using FaceIndex = std::set<int>;

/// Diagonal determinant-one matrix; the torus slot of the double.
class TorusElement {
  public:
    explicit TorusElement(Matrix v);

    const Matrix& matrix() const { return v_; }
    int size() const { return static_cast<int>(v_.rows()); }
    Complex entry(int i) const { return v_(i, i); }
    bool is_unitary() const;

  private:
    Matrix v_;
};

/// Validates a raw weight vector; throws NotOrdered, AffineBoundViolated or
/// NotTraceless.
AlcovePoint validate_alcove(const std::vector<double>& alpha);

FaceIndex face_of(const AlcovePoint& p);

/// v = exp(2 pi i alpha), diagonal.
TorusElement torus_exp(const AlcovePoint& p);

// Inverse of torus_exp: principal arguments are shifted by integers until the
// weight vector lands in the alcove.  The branch is unique off walls; on
// walls the lexicographically largest valid vector is returned.  Throws
// NoAlcoveBranch when no shift pattern works.
AlcovePoint torus_log(const TorusElement& v);

/// The anti-diagonal glueing involution (-a_n, ..., -a_1).
AlcovePoint glue_partner(const AlcovePoint& p);

/// Seeded sample from the interior of the alcove.
AlcovePoint random_interior(int n, std::mt19937_64& rng);

}  // namespace trinion::alcove
