#include "trinion/alcove.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace trinion::alcove {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AlcovePoint::AlcovePoint(std::vector<double> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.empty()) throw Error("empty weight vector");
    const size_t n = alpha_.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        if (alpha_[i] < alpha_[i + 1] - kAlcoveTol) throw NotOrdered();
    }
    if (alpha_[n - 1] < alpha_[0] - 1.0 - kAlcoveTol) throw AffineBoundViolated();
    double sum = 0.0;
    for (double a : alpha_) sum += a;
    if (std::abs(sum) > kAlcoveTol * static_cast<double>(n)) throw NotTraceless();
}

AlcovePoint validate_alcove(const std::vector<double>& alpha) { return AlcovePoint(alpha); }

FaceIndex face_of(const AlcovePoint& p) {
    FaceIndex out;
    for (int i = 0; i + 1 < p.rank(); ++i) {
        if (p[i] - p[i + 1] > kFaceTol) out.insert(i + 1);
    }
    return out;
}

TorusElement::TorusElement(Matrix v) : v_(std::move(v)) {
    if (v_.rows() != v_.cols() || v_.rows() < 1) throw Error("torus element must be square");
    const int n = static_cast<int>(v_.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && v_(i, j) != Complex(0.0)) throw Error("torus element must be diagonal");
        }
        if (std::abs(v_(i, i)) < 1e-300) throw Error("torus element has a zero entry");
    }
    Complex det = 1.0;
    for (int i = 0; i < n; ++i) det *= v_(i, i);
    if (std::abs(det - Complex(1.0)) > matgroup::kDetTol) {
        throw Error("torus element determinant differs from 1");
    }
}

bool TorusElement::is_unitary() const {
    for (int i = 0; i < size(); ++i) {
        if (std::abs(std::abs(v_(i, i)) - 1.0) > matgroup::kUnitaryTol) return false;
    }
    return true;
}

TorusElement torus_exp(const AlcovePoint& p) {
    const int n = p.rank();
    Matrix v = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        v(i, i) = std::polar(1.0, kTwoPi * p[i]);
    }
    return TorusElement(v);
}

AlcovePoint torus_log(const TorusElement& v) {
    const int n = v.size();
    std::vector<double> arg(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        arg[static_cast<size_t>(i)] = std::arg(v.entry(i)) / kTwoPi;  // in (-1/2, 1/2]
    }

    // Anchor on each entry in turn: every other entry is shifted into the
    // closed unit window below the anchor.  Entries landing within tolerance
    // of either window end are ambiguous; enumerate both choices for them.
    const double tol = 1e-9;
    std::vector<std::vector<double>> valid;
    // The leading weight lies in [0, 1), so the top of the window is some
    // entry's argument, possibly shifted up by one period.
    std::vector<double> tops;
    for (double a : arg) {
        tops.push_back(a);
        tops.push_back(a + 1.0);
    }
    for (double top : tops) {
        if (top < -tol || top >= 1.0 + tol) continue;
        std::vector<double> base(static_cast<size_t>(n));
        std::vector<int> ambiguous;
        for (int i = 0; i < n; ++i) {
            double a = arg[static_cast<size_t>(i)];
            while (a > top + tol) a -= 1.0;
            while (a <= top - 1.0 + tol) a += 1.0;
            base[static_cast<size_t>(i)] = a;
            if (std::abs(a - top) <= tol) ambiguous.push_back(i);
        }
        const size_t combos = size_t{1} << ambiguous.size();
        for (size_t mask = 0; mask < combos; ++mask) {
            std::vector<double> cand = base;
            for (size_t b = 0; b < ambiguous.size(); ++b) {
                if (mask & (size_t{1} << b)) {
                    cand[static_cast<size_t>(ambiguous[b])] -= 1.0;
                }
            }
            double sum = 0.0;
            for (double c : cand) sum += c;
            if (std::abs(sum) > tol * static_cast<double>(n)) continue;
            bool ordered = true;
            for (int i = 0; i + 1 < n; ++i) {
                if (cand[static_cast<size_t>(i)] < cand[static_cast<size_t>(i + 1)] - tol) {
                    ordered = false;
                    break;
                }
            }
            if (!ordered) continue;
            if (cand[static_cast<size_t>(n - 1)] < cand[0] - 1.0 - tol) continue;
            // Snap the tiny residual sum to make the point exactly traceless.
            for (double& c : cand) c -= sum / static_cast<double>(n);
            valid.push_back(std::move(cand));
        }
    }
    if (valid.empty()) throw NoAlcoveBranch();
    std::sort(valid.begin(), valid.end(), std::greater<>());
    return validate_alcove(valid.front());
}

AlcovePoint glue_partner(const AlcovePoint& p) {
    std::vector<double> out(p.alpha().rbegin(), p.alpha().rend());
    for (double& a : out) a = -a;
    return validate_alcove(out);
}

AlcovePoint random_interior(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // Sorted points in a narrow band, centered; strict gaps almost surely.
    std::vector<double> a(static_cast<size_t>(n));
    for (double& x : a) x = 0.8 * (unif(rng) - 0.5);
    std::sort(a.begin(), a.end(), std::greater<>());
    double mean = 0.0;
    for (double x : a) mean += x;
    mean /= static_cast<double>(n);
    for (double& x : a) x -= mean;
    return validate_alcove(a);
}

}  // namespace trinion::alcove
