#include "trinion/matgroup.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace trinion::matgroup {

double inf_norm(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

GroupElement::GroupElement(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
        throw Error("group element must be a square matrix");
    }
    if (!m_.allFinite()) {
        throw Error("group element has non-finite entries");
    }
    const Complex det = m_.determinant();
    if (std::abs(det - Complex(1.0)) > kDetTol) {
        throw Error("determinant differs from 1 beyond tolerance");
    }
}

bool GroupElement::is_unitary() const {
    const Matrix gram = m_ * m_.adjoint();
    return inf_norm(gram - Matrix::Identity(m_.rows(), m_.cols())) <= kUnitaryTol;
}

Matrix GaussFactors::reconstruct() const {
    if (order == GaussOrder::UpperDiagLower) {
        return upper_unipotent * diagonal * lower_unipotent;
    }
    return lower_unipotent * diagonal * upper_unipotent;
}

NilpotentMatrix::NilpotentMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw Error("nilpotent matrix must be square");
    }
    const int n = static_cast<int>(m_.rows());
    bool upper_ok = true;
    bool lower_ok = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (m_(i, j) != Complex(0.0)) upper_ok = false;
        }
        for (int j = i; j < n; ++j) {
            if (m_(i, j) != Complex(0.0)) lower_ok = false;
        }
    }
    if (!upper_ok && !lower_ok) {
        throw Error("matrix is not strictly triangular");
    }
}

namespace {

// LDU by elimination without pivoting: g = lower * diag * upper, all pivots
// checked against the scale-aware minor tolerance.
GaussFactors ldu(const Matrix& g) {
    const int n = static_cast<int>(g.rows());
    const double scale = std::max(inf_norm(g), 1.0);

    Matrix work = g;
    Matrix lower = Matrix::Identity(n, n);
    double minor_scale = 1.0;  // scale^k for the order-k minor
    Complex minor = 1.0;       // product of pivots = leading principal minor
    for (int k = 0; k < n; ++k) {
        const Complex pivot = work(k, k);
        minor *= pivot;
        minor_scale *= scale;
        if (std::abs(minor) < kMinorTol * minor_scale) {
            throw SingularMinor(k + 1);
        }
        for (int i = k + 1; i < n; ++i) {
            const Complex factor = work(i, k) / pivot;
            lower(i, k) = factor;
            work.row(i).tail(n - k) -= factor * work.row(k).tail(n - k);
        }
    }

    Matrix diag = Matrix::Zero(n, n);
    Matrix upper = Matrix::Identity(n, n);
    for (int k = 0; k < n; ++k) {
        diag(k, k) = work(k, k);
        for (int j = k + 1; j < n; ++j) {
            upper(k, j) = work(k, j) / work(k, k);
        }
    }
    return GaussFactors{upper, diag, lower, GaussOrder::LowerDiagUpper};
}

Matrix reverse_conjugate(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j) = m(n - 1 - i, n - 1 - j);
        }
    }
    return out;
}

void check_unipotent_triangular(const Matrix& u) {
    if (u.rows() != u.cols()) throw NotUnipotent();
    const int n = static_cast<int>(u.rows());
    for (int i = 0; i < n; ++i) {
        if (std::abs(u(i, i) - Complex(1.0)) > 1e-10) throw NotUnipotent();
    }
    bool upper_ok = true;
    bool lower_ok = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (std::abs(u(i, j)) > 1e-10) upper_ok = false;
            if (std::abs(u(j, i)) > 1e-10) lower_ok = false;
        }
    }
    if (!upper_ok && !lower_ok) throw NotUnipotent();
}

}  // namespace

GaussFactors gauss_decompose(const Matrix& g, GaussOrder order) {
    if (order == GaussOrder::LowerDiagUpper) {
        return ldu(g);
    }
    // g = n+ d n-  <=>  JgJ = (Jn+J)(JdJ)(Jn-J) is an LDU of the reversed
    // matrix; leading minors of JgJ are the trailing minors of g.
    GaussFactors rev = ldu(reverse_conjugate(g));
    GaussFactors out;
    out.order = GaussOrder::UpperDiagLower;
    out.upper_unipotent = reverse_conjugate(rev.lower_unipotent);
    out.diagonal = reverse_conjugate(rev.diagonal);
    out.lower_unipotent = reverse_conjugate(rev.upper_unipotent);
    return out;
}

GaussFactors gauss_decompose(const GroupElement& g, GaussOrder order) {
    return gauss_decompose(g.matrix(), order);
}

NilpotentMatrix unipotent_log(const Matrix& u) {
    check_unipotent_triangular(u);
    const int n = static_cast<int>(u.rows());
    const Matrix nil = u - Matrix::Identity(n, n);
    // log(I+N) = N - N^2/2 + ... +- N^{n-1}/(n-1); exact for nilpotent N.
    Matrix power = nil;
    Matrix out = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        out += (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k) * power;
        power = power * nil;
    }
    // Zero out the kept triangle's complement so the result is strictly
    // triangular by shape, not merely up to roundoff.
    for (int i = 0; i < n; ++i) out(i, i) = 0.0;
    return NilpotentMatrix(out);
}

Matrix nilpotent_exp(const NilpotentMatrix& xi) {
    const Matrix& x = xi.matrix();
    const int n = xi.size();
    Matrix out = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    for (int k = 1; k < n; ++k) {
        term = term * x / static_cast<double>(k);
        out += term;
    }
    return out;
}

Matrix dexp(const NilpotentMatrix& xi, const Matrix& zeta) {
    const Matrix& x = xi.matrix();
    const int n = xi.size();
    if (zeta.rows() != n || zeta.cols() != n) {
        throw Error("dexp direction has mismatched size");
    }
    Matrix sum = zeta;
    Matrix term = zeta;
    double factorial = 1.0;
    // ad(xi)^k vanishes for k >= 2n-1 on gl(n).
    for (int k = 1; k < 2 * n; ++k) {
        term = x * term - term * x;  // ad(xi) applied again
        if (inf_norm(term) == 0.0) break;
        factorial *= static_cast<double>(k + 1);
        sum += ((k % 2 == 1) ? -1.0 : 1.0) / factorial * term;
    }
    return nilpotent_exp(xi) * sum;
}

GroupElement involution_I(const GroupElement& g) {
    Matrix inv = g.matrix().inverse();
    return GroupElement(inv.adjoint());
}

Matrix random_gaussian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

GroupElement random_generic(int n, std::mt19937_64& rng) {
    Matrix a = random_gaussian(n, rng) * 0.5;
    a -= (a.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
    Matrix g = a.exp();
    // det(exp(traceless)) = 1 analytically; divide by an n-th root of the
    // computed determinant to absorb roundoff.
    const Complex det = g.determinant();
    g /= std::pow(det, 1.0 / static_cast<double>(n));
    return GroupElement(g);
}

GroupElement random_unitary(int n, std::mt19937_64& rng) {
    const Matrix z = random_gaussian(n, rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k) {
        const Complex rkk = r(k, k);
        q.col(k) *= rkk / std::abs(rkk);  // fix column phases
    }
    const Complex det = q.determinant();
    q /= std::pow(det, 1.0 / static_cast<double>(n));
    return GroupElement(q);
}

Matrix random_strictly_upper(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    return m;
}

Matrix random_strictly_lower(int n, std::mt19937_64& rng) {
    return random_strictly_upper(n, rng).transpose().eval();
}

Matrix random_diagonal_det1(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Matrix d = Matrix::Zero(n, n);
    Complex det = 1.0;
    for (int k = 0; k + 1 < n; ++k) {
        // modulus in [1/2, 2], random phase
        const double mag = std::exp(unif(rng) * std::log(2.0));
        const double phase = unif(rng) * 3.141592653589793;
        d(k, k) = Complex(mag * std::cos(phase), mag * std::sin(phase));
        det *= d(k, k);
    }
    d(n - 1, n - 1) = 1.0 / det;
    return d;
}

}  // namespace trinion::matgroup
