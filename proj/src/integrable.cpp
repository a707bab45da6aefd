#include "trinion/integrable.hpp"

#include <cmath>
#include <numbers>

namespace trinion::integrable {

namespace {
const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);
}

HamiltonianIndex HamiltonianIndex::local(int i, int j) {
    if (i < 1 || i >= j) throw Error("local index requires 1 <= i < j");
    return {Kind::Local, i, j, 0};
}
HamiltonianIndex HamiltonianIndex::torus(int l) {
    if (l < 1) throw Error("torus index requires l >= 1");
    return {Kind::Torus, l, 0, 0};
}
HamiltonianIndex HamiltonianIndex::diagonal(int l) {
    if (l < 1) throw Error("diagonal index requires l >= 1");
    return {Kind::Diagonal, l, 0, 0};
}
HamiltonianIndex HamiltonianIndex::global(int j1, int j2, int j3) {
    return {Kind::Global, j1, j2, j3};
}
HamiltonianIndex HamiltonianIndex::real_global(int j1, int j2, int j3) {
    return {Kind::RealGlobal, j1, j2, j3};
}

std::vector<std::pair<int, int>> upper_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    }
    return out;
}

std::pair<Matrix, Matrix> unipotent_diagonal_split(const NormalizedTriple& t) {
    const Matrix& b3 = t.b3_plus();
    const int n = t.size();
    const double scale = std::max(matgroup::inf_norm(b3), 1.0);
    Matrix d = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        if (std::abs(b3(k, k)) < matgroup::kMinorTol * scale) throw SingularMinor(k + 1);
        d(k, k) = b3(k, k);
    }
    Matrix nu = b3 * d.inverse();
    for (int k = 0; k < n; ++k) nu(k, k) = 1.0;  // exact unit diagonal
    return {nu, d};
}

std::map<HamiltonianIndex, Complex> local_hamiltonians(const NormalizedTriple& t) {
    auto [n3p, d3] = unipotent_diagonal_split(t);
    const Matrix xi = matgroup::unipotent_log(n3p).matrix();
    std::map<HamiltonianIndex, Complex> out;
    for (auto [i, j] : upper_pairs(t.size())) {
        out[HamiltonianIndex::local(i, j)] = xi(i - 1, j - 1);
    }
    return out;
}

std::vector<Complex> torus_hamiltonians(const alcove::TorusElement& v) {
    const int n = v.size();
    std::vector<Complex> out;
    if (v.is_unitary()) {
        const alcove::AlcovePoint a = alcove::torus_log(v);
        for (int l = 0; l + 1 < n; ++l) out.emplace_back(a[l], 0.0);
    } else {
        // Complexified case: principal branch (multi-valued in general).
        for (int l = 0; l + 1 < n; ++l) out.push_back(std::log(v.entry(l)) / kTwoPiI);
    }
    return out;
}

std::vector<Complex> diagonal_hamiltonians(const NormalizedTriple& t) {
    auto [n3p, d3] = unipotent_diagonal_split(t);
    std::vector<Complex> out;
    for (int k = 0; k < t.size(); ++k) out.push_back(d3(k, k));
    return out;
}

namespace {

// The beta-slot direction attached to the pair (i,j): normalized so that the
// induced variation of n3+ is exactly n3+ E_{i,j}.
Matrix beta_direction(const Matrix& d3, int i, int j, int n) {
    Matrix b = Matrix::Zero(n, n);
    b(i - 1, j - 1) = d3(j - 1, j - 1) / d3(i - 1, i - 1);
    return b;
}

Matrix mu_direction(int i, int j, int n) {
    Matrix m = Matrix::Zero(n, n);
    m(j - 1, i - 1) = 1.0;  // mu(j,i)^-
    return m;
}

Eigen::VectorXcd vec_upper(const Matrix& m, const std::vector<std::pair<int, int>>& basis) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(basis.size()));
    for (size_t p = 0; p < basis.size(); ++p) {
        v(static_cast<Eigen::Index>(p)) = m(basis[p].first - 1, basis[p].second - 1);
    }
    return v;
}

}  // namespace

PairingMatrix pairing_matrix(const NormalizedTriple& t) {
    const int n = t.size();
    auto [n3p, d3] = unipotent_diagonal_split(t);
    const auto basis = upper_pairs(n);
    const auto m = static_cast<Eigen::Index>(basis.size());

    PairingMatrix out;
    out.basis = basis;
    out.A = Matrix(m, m);
    const Matrix zero = Matrix::Zero(n, n);
    for (Eigen::Index p = 0; p < m; ++p) {
        const auto [i, j] = basis[static_cast<size_t>(p)];
        const TangentTriple x(beta_direction(d3, i, j, n), zero, zero);
        for (Eigen::Index q = 0; q < m; ++q) {
            const auto [ip, jp] = basis[static_cast<size_t>(q)];
            const TangentTriple y(zero, mu_direction(ip, jp, n), zero);
            out.A(p, q) = dk::two_form(t, x, y);
        }
    }
    Eigen::JacobiSVD<Matrix> svd(out.A);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    out.condition_number = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(out.condition_number < kConditionLimit)) throw IllConditioned();
    return out;
}

CoefficientMatrix coefficient_matrix(const NormalizedTriple& t) {
    const int n = t.size();
    auto [n3p, d3] = unipotent_diagonal_split(t);
    const matgroup::NilpotentMatrix xi = matgroup::unipotent_log(n3p);
    const auto basis = upper_pairs(n);
    const auto m = static_cast<Eigen::Index>(basis.size());

    // L maps a strictly-upper variation of xi to the variation of n3+, both
    // in shared basis coordinates; invert it to differentiate the logarithm.
    Matrix L(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
        Matrix e = Matrix::Zero(n, n);
        e(basis[static_cast<size_t>(r)].first - 1, basis[static_cast<size_t>(r)].second - 1) = 1.0;
        L.col(r) = vec_upper(matgroup::dexp(xi, e), basis);
    }
    const auto lu = L.fullPivLu();

    CoefficientMatrix out;
    out.basis = basis;
    out.C = Matrix(m, m);
    for (Eigen::Index p = 0; p < m; ++p) {
        const auto [i, j] = basis[static_cast<size_t>(p)];
        Matrix e = Matrix::Zero(n, n);
        e(i - 1, j - 1) = 1.0;
        const Eigen::VectorXcd dxi = lu.solve(vec_upper(n3p * e, basis));
        out.C.row(p) = dxi.transpose();
    }
    return out;
}

TangentTriple hamiltonian_field(const NormalizedTriple& t, const HamiltonianIndex& idx) {
    if (idx.kind != HamiltonianIndex::Kind::Local) {
        throw Error("hamiltonian_field expects a local index");
    }
    const int n = t.size();
    const PairingMatrix pm = pairing_matrix(t);
    const CoefficientMatrix cm = coefficient_matrix(t);
    const auto& basis = pm.basis;
    const auto m = static_cast<Eigen::Index>(basis.size());

    Eigen::Index col = -1;
    for (Eigen::Index q = 0; q < m; ++q) {
        if (basis[static_cast<size_t>(q)] == std::pair<int, int>{idx.i, idx.j}) col = q;
    }
    if (col < 0) throw Error("local index out of range for this rank");

    const Eigen::VectorXcd coeffs = pm.A.fullPivLu().solve(cm.C.col(col));
    Matrix mu = Matrix::Zero(n, n);
    for (Eigen::Index p = 0; p < m; ++p) {
        const auto [ip, jp] = basis[static_cast<size_t>(p)];
        mu(jp - 1, ip - 1) -= coeffs(p);  // X = -sum (A^-1 C) mu(j',i')^-
    }
    const Matrix zero = Matrix::Zero(n, n);
    TangentTriple field(zero, mu, zero);

    // Defining relation dH(P) = -omega(P, X) over the whole basis.
    auto [n3p, d3] = unipotent_diagonal_split(t);
    double scale = std::max(1.0, cm.C.col(col).cwiseAbs().maxCoeff());
    for (Eigen::Index p = 0; p < m; ++p) {
        const auto [i, j] = basis[static_cast<size_t>(p)];
        const TangentTriple dir(beta_direction(d3, i, j, n), zero, zero);
        const Complex lhs = cm.C(p, col);
        const Complex rhs = -dk::two_form(t, dir, field);
        if (std::abs(lhs - rhs) > kFieldCheckTol * scale) {
            throw Error("hamiltonian field failed the defining-relation check");
        }
    }
    return field;
}

namespace {

TangentTriple field_of(const NormalizedTriple& t, const HamiltonianIndex& idx) {
    const int n = t.size();
    const Matrix zero = Matrix::Zero(n, n);
    switch (idx.kind) {
        case HamiltonianIndex::Kind::Local:
            return hamiltonian_field(t, idx);
        case HamiltonianIndex::Kind::Torus: {
            if (idx.i > n - 1) throw Error("torus index out of range");
            Matrix delta = Matrix::Zero(n, n);
            delta(idx.i - 1, idx.i - 1) = 1.0;  // right-diagonal action direction
            return TangentTriple(delta, zero, zero);
        }
        case HamiltonianIndex::Kind::Diagonal: {
            if (idx.i > n) throw Error("diagonal index out of range");
            Matrix z = Matrix::Zero(n, n);
            z(idx.i - 1, idx.i - 1) = 1.0;  // torus-slot direction
            return TangentTriple(zero, zero, z);
        }
        default:
            throw Error("no chart vector field for this Hamiltonian kind; see volumes");
    }
}

}  // namespace

Complex poisson_bracket(const NormalizedTriple& t, const HamiltonianIndex& f,
                        const HamiltonianIndex& g) {
    return dk::two_form(t, field_of(t, f), field_of(t, g));
}

}  // namespace trinion::integrable
