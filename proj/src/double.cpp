#include "trinion/double.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace trinion::dk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kTwoPiI(0.0, kTwoPi);
}  // namespace

ImplodedPoint::ImplodedPoint(DoublePoint p)
    : point(std::move(p)), stratum(alcove::face_of(alcove::torus_log(point.v))) {}

double relation_residual(const Matrix& u1, const Matrix& v1, const Matrix& u2, const Matrix& v2,
                         const Matrix& u3, const Matrix& v3) {
    const Matrix prod = u1 * v1 * u1.inverse() * u2 * v2 * u2.inverse() * u3 * v3 * u3.inverse();
    return matgroup::inf_norm(prod - Matrix::Identity(prod.rows(), prod.cols()));
}

FramedTriple::FramedTriple(DoublePoint p1, DoublePoint p2, DoublePoint p3)
    : p1_(std::move(p1)), p2_(std::move(p2)), p3_(std::move(p3)) {
    const double res = relation_residual(p1_.u.matrix(), p1_.v.matrix(), p2_.u.matrix(),
                                         p2_.v.matrix(), p3_.u.matrix(), p3_.v.matrix());
    if (res > kRelationTol) {
        throw Error("framed triple violates the trinion relation");
    }
}

NormalizedTriple::NormalizedTriple(Matrix b1_plus, Matrix n2_minus, Matrix b3_plus,
                                   Matrix n3_minus, TorusElement v1, TorusElement v2,
                                   TorusElement v3)
    : b1_plus_(std::move(b1_plus)),
      n2_minus_(std::move(n2_minus)),
      b3_plus_(std::move(b3_plus)),
      n3_minus_(std::move(n3_minus)),
      v1_(std::move(v1)),
      v2_(std::move(v2)),
      v3_(std::move(v3)) {
    const double res = relation_residual(b1_plus_, v1_.matrix(), n2_minus_, v2_.matrix(),
                                         b3_plus_ * n3_minus_, v3_.matrix());
    if (res > kRelationTol) {
        throw Error("normalized triple violates the trinion relation");
    }
}

TangentTriple::TangentTriple(Matrix beta, Matrix mu, Matrix z)
    : beta_plus(std::move(beta)), mu_minus(std::move(mu)), zeta(std::move(z)) {
    const int n = static_cast<int>(beta_plus.rows());
    if (mu_minus.rows() != n || zeta.rows() != n || beta_plus.cols() != n ||
        mu_minus.cols() != n || zeta.cols() != n) {
        throw Error("tangent triple slots have mismatched sizes");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j < i && beta_plus(i, j) != Complex(0.0)) {
                throw Error("beta+ slot must be upper triangular");
            }
            if (j >= i && mu_minus(i, j) != Complex(0.0)) {
                throw Error("mu- slot must be strictly lower triangular");
            }
            if (i != j && zeta(i, j) != Complex(0.0)) {
                throw Error("zeta slot must be diagonal");
            }
        }
    }
}

TangentTriple TangentTriple::zero(int n) {
    return TangentTriple(Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n));
}

std::pair<GroupElement, TorusElement> moment_map(const DoublePoint& p) {
    const Matrix& u = p.u.matrix();
    const Matrix first = u * p.v.matrix().inverse() * u.inverse();
    return {GroupElement(first), p.v};
}

std::pair<Matrix, Matrix> group_act(const Matrix& k1, const Matrix& k2, const Matrix& u,
                                    const Matrix& v) {
    return {k1 * u * k2.inverse(), k2 * v * k2.inverse()};
}

DoublePoint group_act(const GroupElement& k1, const GroupElement& k2, const DoublePoint& p) {
    auto [u, v] = group_act(k1.matrix(), k2.matrix(), p.u.matrix(), p.v.matrix());
    // Clean roundoff off-diagonal noise when k2 lies in the torus.
    const int n = static_cast<int>(v.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::abs(v(i, j)) > 1e-10) {
                throw Error("group_act second factor must preserve the torus slot");
            }
            v(i, j) = 0.0;
        }
    }
    return DoublePoint{GroupElement(u), TorusElement(v)};
}

namespace {

// (n-)^-1 beta+ n-, computed so the structural triangularity is exact: the
// conjugated diagonal part of beta+ is lower triangular by algebra, so its
// roundoff in the strict upper part is zeroed.
Matrix conjugate_beta(const Matrix& ninv, const Matrix& n_minus, const Matrix& beta) {
    const int n = static_cast<int>(beta.rows());
    Matrix diag = Matrix::Zero(n, n);
    Matrix strict = beta;
    for (int i = 0; i < n; ++i) {
        diag(i, i) = beta(i, i);
        strict(i, i) = 0.0;
    }
    Matrix lower = ninv * diag * n_minus;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) lower(i, j) = 0.0;
    }
    if (strict.isZero(0.0)) return lower;
    return lower + ninv * strict * n_minus;
}

}  // namespace

Complex two_form(const Matrix& n_minus, const Matrix& v, const TangentTriple& x,
                 const TangentTriple& y) {
    const Matrix ninv = n_minus.inverse();
    const Matrix vinv = v.inverse();

    const Matrix bx = conjugate_beta(ninv, n_minus, x.beta_plus);
    const Matrix by = conjugate_beta(ninv, n_minus, y.beta_plus);
    const Matrix cbx = v * bx * vinv;  // v (n-)^-1 beta+ n- v^-1
    const Matrix cby = v * by * vinv;

    const Complex term1 = 0.5 * ((cbx * by).trace() - (cby * bx).trace());
    const Complex term2 = 0.5 * ((cbx * y.mu_minus).trace() - (cby * x.mu_minus).trace());
    const Complex term3 =
        (((bx + x.mu_minus) * y.zeta).trace() - ((by + y.mu_minus) * x.zeta).trace()) / kTwoPiI;
    return term1 + term2 + term3;
}

Complex two_form(const NormalizedTriple& t, const TangentTriple& x, const TangentTriple& y) {
    return two_form(t.n3_minus(), t.v3().matrix(), x, y);
}

TrinionSolution solve_trinion(const GroupElement& u1, const TorusElement& v1,
                              const GroupElement& u2, const TorusElement& v2) {
    const int n = u1.size();
    const Matrix m1 = u1.matrix();
    const Matrix m2 = u2.matrix();
    const Matrix partial = m1 * v1.matrix() * m1.inverse() * m2 * v2.matrix() * m2.inverse();
    const Matrix p = partial.inverse();

    Eigen::ComplexEigenSolver<Matrix> eig(p);
    if (eig.info() != Eigen::Success) throw DefectiveMatrix();
    Matrix vectors = eig.eigenvectors();
    const Eigen::VectorXcd values = eig.eigenvalues();
    {
        Eigen::JacobiSVD<Matrix> svd(vectors);
        const double smin = svd.singularValues().minCoeff();
        const double smax = svd.singularValues().maxCoeff();
        if (smin <= 1e-10 * smax) throw DefectiveMatrix();
    }

    // Principal arguments of the eigenvalues, sorted descending; ties broken
    // by the real part of the eigenvector's first nonzero entry.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto tiebreak = [&](int k) {
        for (int r = 0; r < n; ++r) {
            if (std::abs(vectors(r, k)) > 1e-12) return vectors(r, k).real();
        }
        return 0.0;
    };
    std::vector<double> arg(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) arg[static_cast<size_t>(k)] = std::arg(values(k)) / kTwoPi;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double da = arg[static_cast<size_t>(a)];
        const double db = arg[static_cast<size_t>(b)];
        if (std::abs(da - db) > 1e-12) return da > db;
        return tiebreak(a) > tiebreak(b);
    });

    // The sum of arguments is an integer c (unit determinant); drop the top
    // c entries by one period and rotate them to the bottom: the unique
    // ordered traceless branch.
    double sum = 0.0;
    for (double a : arg) sum += a;
    const int cut = static_cast<int>(std::llround(sum));
    if (cut <= -n || cut >= n) throw NoAlcoveBranch();
    std::vector<int> rotated;
    std::vector<double> alpha;
    if (cut >= 0) {
        for (int k = cut; k < n; ++k) {
            rotated.push_back(order[static_cast<size_t>(k)]);
            alpha.push_back(arg[static_cast<size_t>(order[static_cast<size_t>(k)])]);
        }
        for (int k = 0; k < cut; ++k) {
            rotated.push_back(order[static_cast<size_t>(k)]);
            alpha.push_back(arg[static_cast<size_t>(order[static_cast<size_t>(k)])] - 1.0);
        }
    } else {
        // Negative argument sum: the bottom |cut| entries move up one period
        // and rotate to the top.
        for (int k = n + cut; k < n; ++k) {
            rotated.push_back(order[static_cast<size_t>(k)]);
            alpha.push_back(arg[static_cast<size_t>(order[static_cast<size_t>(k)])] + 1.0);
        }
        for (int k = 0; k < n + cut; ++k) {
            rotated.push_back(order[static_cast<size_t>(k)]);
            alpha.push_back(arg[static_cast<size_t>(order[static_cast<size_t>(k)])]);
        }
    }
    double asum = 0.0;
    for (double a : alpha) asum += a;
    for (double& a : alpha) a -= asum / static_cast<double>(n);  // snap roundoff

    Matrix u3(n, n);
    Matrix v3 = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const int src = rotated[static_cast<size_t>(k)];
        u3.col(k) = vectors.col(src).normalized();
        v3(k, k) = values(src);
    }
    const Complex det = u3.determinant();
    if (std::abs(det) < 1e-12) throw DefectiveMatrix();
    u3 /= std::pow(det, 1.0 / static_cast<double>(n));
    // Snap the eigenvalue determinant as well: products of unit-modulus
    // entries drift at the last bit.
    Complex vdet = 1.0;
    for (int k = 0; k < n; ++k) vdet *= v3(k, k);
    v3 /= std::pow(vdet, 1.0 / static_cast<double>(n));

    AlcovePoint a3 = alcove::validate_alcove(alpha);
    return TrinionSolution{GroupElement(u3), a3, TorusElement(v3)};
}

FramedTriple complete_triple(const GroupElement& u1, const TorusElement& v1,
                             const GroupElement& u2, const TorusElement& v2) {
    TrinionSolution s = solve_trinion(u1, v1, u2, v2);
    return FramedTriple(DoublePoint{u1, v1}, DoublePoint{u2, v2}, DoublePoint{s.u3, s.v3});
}

namespace {

Matrix zero_lower(Matrix m) {
    const int n = static_cast<int>(m.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) m(i, j) = 0.0;
    }
    return m;
}

Matrix zero_upper_keep_unit(Matrix m) {
    const int n = static_cast<int>(m.rows());
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) m(i, j) = 0.0;
    }
    return m;
}

}  // namespace

NormalizedTriple normalize_frame(const FramedTriple& t) {
    const Matrix& u1 = t.p1().u.matrix();
    const Matrix& u2 = t.p2().u.matrix();
    const Matrix& u3 = t.p3().u.matrix();

    // Transversality of the flags from p1 and p2 is exactly the existence of
    // the n+ d n- factorization of u1^-1 u2.
    const Matrix w = u1.inverse() * u2;
    matgroup::GaussFactors wf = matgroup::gauss_decompose(w, matgroup::GaussOrder::UpperDiagLower);
    const Matrix g = (wf.upper_unipotent * wf.diagonal).inverse() * u1.inverse();

    const Matrix b1 = zero_lower(g * u1);
    const Matrix n2 = zero_upper_keep_unit(g * u2);
    const Matrix u3n = g * u3;
    matgroup::GaussFactors f3 = matgroup::gauss_decompose(u3n, matgroup::GaussOrder::UpperDiagLower);
    const Matrix b3 = f3.upper_unipotent * f3.diagonal;
    const Matrix n3 = f3.lower_unipotent;

    return NormalizedTriple(b1, n2, b3, n3, t.p1().v, t.p2().v, t.p3().v);
}

long long moduli_dimension(int n) {
    if (n < 1) throw Error("rank must be positive");
    const long long nn = n;
    return nn + nn * (nn + 1) / 2;
}

}  // namespace trinion::dk
