#include "trinion/volumes.hpp"

#include <cmath>

namespace trinion::volumes {

VolumeIndex::VolumeIndex(int a, int b, int c) : j1(a), j2(b), j3(c) {
    const int n = j1 + j2 + j3;
    if (j1 < 0 || j2 < 0 || j3 < 0 || j1 >= n || j2 >= n || j3 >= n) {
        throw Error("inadmissible volume index");
    }
}

std::vector<VolumeIndex> admissible_indices(int n) {
    if (n < 2) throw Error("volume indices need rank at least 2");
    std::vector<VolumeIndex> out;
    for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
            const int j3 = n - j1 - j2;
            if (j3 >= 0 && j3 < n) out.emplace_back(j1, j2, j3);
        }
    }
    return out;
}

long long volume_function_count(int n) {
    return static_cast<long long>(n + 4) * (n - 1) / 2;
}

Matrix g_matrix(const VolumeIndex& idx, const GroupElement& u1, const GroupElement& u2,
                const GroupElement& u3) {
    const int n = idx.rank();
    if (u1.size() != n || u2.size() != n || u3.size() != n) {
        throw Error("volume index rank does not match the matrices");
    }
    Matrix m(n, n);
    int col = 0;
    for (int k = 0; k < idx.j1; ++k) m.col(col++) = u1.matrix().col(k);
    for (int k = 0; k < idx.j2; ++k) m.col(col++) = u2.matrix().col(n - 1 - k);
    for (int k = 0; k < idx.j3; ++k) m.col(col++) = u3.matrix().col(n - 1 - k);
    return m;
}

namespace {

Complex column_determinant(const VolumeIndex& idx, const Matrix& u1, const Matrix& u2,
                           const Matrix& u3) {
    const int n = idx.rank();
    Matrix m(n, n);
    int col = 0;
    for (int k = 0; k < idx.j1; ++k) m.col(col++) = u1.col(k);
    for (int k = 0; k < idx.j2; ++k) m.col(col++) = u2.col(n - 1 - k);
    for (int k = 0; k < idx.j3; ++k) m.col(col++) = u3.col(n - 1 - k);
    return m.determinant();
}

int closed_form_sign(const VolumeIndex& idx) {
    const int e = idx.j2 * idx.j3 + idx.j2 * (idx.j2 - 1) / 2 + idx.j3 * (idx.j3 - 1) / 2;
    return (e % 2 == 0) ? 1 : -1;
}

}  // namespace

Complex hG_closed_form(const VolumeIndex& idx, const Matrix& b1_plus, const Matrix& b3_plus) {
    const int n = idx.rank();
    Complex dprod = 1.0;
    for (int k = 0; k < idx.j1; ++k) dprod *= b1_plus(k, k);
    Complex minor = 1.0;
    if (idx.j3 > 0) {
        minor = b3_plus.block(idx.j1, n - idx.j3, idx.j3, idx.j3).determinant();
    }
    return static_cast<double>(closed_form_sign(idx)) * dprod * minor;
}

VolumeTable hG_columns(const NormalizedTriple& t) {
    VolumeTable out;
    out.rank = t.size();
    for (const VolumeIndex& idx : admissible_indices(t.size())) {
        out.values.emplace(idx,
                           column_determinant(idx, t.b1_plus(), t.n2_minus(), t.b3_plus()));
    }
    return out;
}

VolumeTable hG(const NormalizedTriple& t) {
    VolumeTable out;
    out.rank = t.size();
    const double scale =
        std::max({1.0, matgroup::inf_norm(t.b1_plus()), matgroup::inf_norm(t.b3_plus())});
    const double tol = kDualRouteTol * std::pow(scale, t.size());
    for (const VolumeIndex& idx : admissible_indices(t.size())) {
        const Complex closed = hG_closed_form(idx, t.b1_plus(), t.b3_plus());
        const Complex direct = column_determinant(idx, t.b1_plus(), t.n2_minus(), t.b3_plus());
        if (std::abs(closed - direct) > tol) {
            throw Error("closed-form and column evaluations of hG disagree");
        }
        out.values.emplace(idx, closed);
    }
    return out;
}

Matrix recover_unipotent(const VolumeTable& table, const Matrix& d1, const Matrix& d3) {
    const int n = table.rank;
    if (d1.rows() != n || d3.rows() != n) throw Error("diagonal sizes do not match the table");

    Matrix b = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        if (std::abs(d3(k, k)) < 1e-300) throw ZeroDenominator("d3 entry");
        b(k, k) = d3(k, k);
    }

    // Column n - m + 1 of b3+, walking up; the unknown entry is the top-left
    // corner of the minor attached to (i-1, n-i+1-m, m).
    for (int m = 1; m < n; ++m) {
        for (int i = n - m; i >= 1; --i) {
            const VolumeIndex idx(i - 1, n - i + 1 - m, m);
            const auto it = table.values.find(idx);
            if (it == table.values.end()) throw Error("volume table is missing an index");

            Complex dprod = 1.0;
            for (int k = 0; k < i - 1; ++k) dprod *= d1(k, k);
            if (std::abs(dprod) < 1e-300) throw ZeroDenominator("d1 product");
            const Complex target =
                it->second / (static_cast<double>(closed_form_sign(idx)) * dprod);

            Matrix minor = b.block(i - 1, n - m, m, m);
            minor(0, 0) = 0.0;
            const Complex det0 = minor.determinant();
            const Complex cof =
                (m == 1) ? Complex(1.0)
                         : b.block(i, n - m + 1, m - 1, m - 1).determinant();
            const double scale = std::pow(std::max(1.0, matgroup::inf_norm(b)), m - 1);
            if (std::abs(cof) < 1e-12 * scale) throw ZeroDenominator("leading cofactor");
            b(i - 1, n - m) = (target - det0) / cof;
        }
    }

    Matrix n3 = b;
    for (int j = 0; j < n; ++j) n3.col(j) /= d3(j, j);
    return n3;
}

std::vector<Complex> projective_coordinates(const NormalizedTriple& t) {
    const VolumeTable table = hG(t);
    std::vector<Complex> out;
    double biggest = 0.0;
    for (const auto& [idx, value] : table.values) {
        out.push_back(value);
        biggest = std::max(biggest, std::abs(value));
    }
    if (biggest <= kTableTol) throw AllZero();
    return out;
}

namespace {

// Weight-coordinate difference a_p - a_q with 1-based positions; any position
// outside 1..n sends the whole factor to 1.
double alpha_factor(const alcove::AlcovePoint& a, int p, int q) {
    const int n = a.rank();
    if (p < 1 || p > n || q < 1 || q > n) return 1.0;
    return a[p - 1] - a[q - 1];
}

}  // namespace

std::map<VolumeIndex, double> hGG(const NormalizedTriple& t, const alcove::AlcovePoint& a1,
                                  const alcove::AlcovePoint& a2, const alcove::AlcovePoint& a3) {
    const int n = t.size();
    if (a1.rank() != n || a2.rank() != n || a3.rank() != n) throw RankMismatch();
    const double big = (a1[0] - a1[n - 1] - 1.0) * (a2[0] - a2[n - 1] - 1.0) *
                       (a3[0] - a3[n - 1] - 1.0);
    const VolumeTable table = hG(t);
    std::map<VolumeIndex, double> out;
    for (const auto& [idx, value] : table.values) {
        const double f1 = alpha_factor(a1, idx.j1 + 1, idx.j1);
        const double f2 = alpha_factor(a2, n - idx.j2, n - idx.j2 + 1);
        const double f3 = alpha_factor(a3, n - idx.j3, n - idx.j3 + 1);
        out.emplace(idx, big * f1 * f2 * f3 * std::norm(value));
    }
    return out;
}

}  // namespace trinion::volumes
