#pragma once

#include <utility>

#include "trinion/alcove.hpp"
#include "trinion/matgroup.hpp"

// The double DK restricted to the cross-section K x Delta, its two-form,
// the trinion relation, and frame normalization on the generic locus.
namespace trinion::dk {

using alcove::AlcovePoint;
using alcove::FaceIndex;
using alcove::TorusElement;
using matgroup::Complex;
using matgroup::GroupElement;
using matgroup::Matrix;

inline constexpr double kRelationTol = 1e-9;

struct DoublePoint {
    GroupElement u;
    TorusElement v;
};

/// A double point together with its implosion stratum label.
struct ImplodedPoint {
    explicit ImplodedPoint(DoublePoint p);
    DoublePoint point;
    FaceIndex stratum;
};

/// Three double points whose holonomies multiply to the identity.
class FramedTriple {
  public:
    FramedTriple(DoublePoint p1, DoublePoint p2, DoublePoint p3);

    const DoublePoint& p1() const { return p1_; }
    const DoublePoint& p2() const { return p2_; }
    const DoublePoint& p3() const { return p3_; }
    int size() const { return p1_.u.size(); }

  private:
    DoublePoint p1_, p2_, p3_;
};

/// max-norm of u1 v1 u1^-1 u2 v2 u2^-1 u3 v3 u3^-1 - I.
double relation_residual(const Matrix& u1, const Matrix& v1, const Matrix& u2, const Matrix& v2,
                         const Matrix& u3, const Matrix& v3);

// Normalized generic-locus coordinates: u1 = b1+, u2 = n2-, u3 = b3+ n3-.
class NormalizedTriple {
  public:
    NormalizedTriple(Matrix b1_plus, Matrix n2_minus, Matrix b3_plus, Matrix n3_minus,
                     TorusElement v1, TorusElement v2, TorusElement v3);

    const Matrix& b1_plus() const { return b1_plus_; }
    const Matrix& n2_minus() const { return n2_minus_; }
    const Matrix& b3_plus() const { return b3_plus_; }
    const Matrix& n3_minus() const { return n3_minus_; }
    const TorusElement& v1() const { return v1_; }
    const TorusElement& v2() const { return v2_; }
    const TorusElement& v3() const { return v3_; }
    int size() const { return static_cast<int>(b1_plus_.rows()); }

    Matrix u3() const { return b3_plus_ * n3_minus_; }

  private:
    Matrix b1_plus_, n2_minus_, b3_plus_, n3_minus_;
    TorusElement v1_, v2_, v3_;
};

/// Infinitesimal variation (beta+, mu-, zeta) of a (b+, n-, v) chart point;
/// diagonal variations ride in beta+'s diagonal.
struct TangentTriple {
    Matrix beta_plus;   // upper triangular (diagonal allowed)
    Matrix mu_minus;    // strictly lower triangular
    Matrix zeta;        // diagonal

    TangentTriple(Matrix beta, Matrix mu, Matrix z);
    static TangentTriple zero(int n);
    int size() const { return static_cast<int>(beta_plus.rows()); }
};

/// Moment map of the double: (u v^-1 u^-1, v).
std::pair<GroupElement, TorusElement> moment_map(const DoublePoint& p);

/// Change of trivializations: (k1 u k2^-1, k2 v k2^-1), raw matrix form.
std::pair<Matrix, Matrix> group_act(const Matrix& k1, const Matrix& k2, const Matrix& u,
                                    const Matrix& v);
/// Same action on a DoublePoint; k2 must preserve diagonality of v.
DoublePoint group_act(const GroupElement& k1, const GroupElement& k2, const DoublePoint& p);

// The restricted two-form evaluated in the (b+, n-, v) chart at (n_minus, v):
// three trace terms, antisymmetric by construction.  Pairs with beta+ = 0 and
// zeta = 0 on both sides vanish identically.
Complex two_form(const Matrix& n_minus, const Matrix& v, const TangentTriple& x,
                 const TangentTriple& y);
Complex two_form(const NormalizedTriple& t, const TangentTriple& x, const TangentTriple& y);

struct TrinionSolution {
    GroupElement u3;
    AlcovePoint alpha3;
    TorusElement v3;
};

// Completes (u1,v1,u2,v2) to a trinion: eigendecomposes the inverse of the
// partial holonomy product with eigenvalues ordered along the alcove branch.
TrinionSolution solve_trinion(const GroupElement& u1, const TorusElement& v1,
                              const GroupElement& u2, const TorusElement& v2);

FramedTriple complete_triple(const GroupElement& u1, const TorusElement& v1,
                             const GroupElement& u2, const TorusElement& v2);

// Left-translates the common frame so that u1 becomes upper triangular, u2
// lower unipotent and u3 factors as b3+ n3-.  Throws SingularMinor off the
// generic locus.
NormalizedTriple normalize_frame(const FramedTriple& t);

/// d = n + n(n+1)/2 = (n+2)(n+1)/2 - 1.
long long moduli_dimension(int n);

}  // namespace trinion::dk
