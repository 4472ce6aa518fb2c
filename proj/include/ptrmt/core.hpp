// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ptrmt {

/// Real 4-tuple (x1, y1, x2, y2) defining one ensemble member through
/// z1 = x1 + i*y1 and z2 = x2 + i*y2.  Construction rejects non-finite
/// values, so downstream code can assume finiteness.
struct MatrixParams {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    MatrixParams() = default;
    MatrixParams(double x1_, double y1_, double x2_, double y2_)
        : x1(x1_), y1(y1_), x2(x2_), y2(y2_) {
        if (!(std::isfinite(x1) && std::isfinite(y1) &&
              std::isfinite(x2) && std::isfinite(y2))) {
            throw std::invalid_argument("MatrixParams: coordinates must be finite");
        }
    }

    friend bool operator==(const MatrixParams&, const MatrixParams&) = default;
};

/// 2x2 complex matrix [[z1, z2], [-conj(z2), conj(z1)]].  Normal for any
/// (z1, z2): it satisfies H^H H = H H^H = det(H) I with real determinant
/// |z1|^2 + |z2|^2.
class SuTwoLikeMatrix {
  public:
    using Complex = std::complex<double>;

    explicit SuTwoLikeMatrix(const MatrixParams& p)
        : z1_(p.x1, p.y1), z2_(p.x2, p.y2) {}

    Complex z1() const { return z1_; }
    Complex z2() const { return z2_; }

    /// Entry (row, col), indices in {0, 1}.
    Complex entry(int row, int col) const {
        if (row == 0) return col == 0 ? z1_ : z2_;
        return col == 0 ? -std::conj(z2_) : std::conj(z1_);
    }

    /// det(H) = |z1|^2 + |z2|^2, real and non-negative.
    double determinant() const { return std::norm(z1_) + std::norm(z2_); }

  private:
    Complex z1_;
    Complex z2_;
};

inline SuTwoLikeMatrix build_matrix(const MatrixParams& p) {
    return SuTwoLikeMatrix(p);
}

/// Conjugate eigenvalue pair with the spacing |e_plus - e_minus| cached
/// at construction (it is the quantity sampled in hot loops).
struct EigenPair {
    std::complex<double> e_plus;
    std::complex<double> e_minus;
    double spacing = 0.0;
};

/// Closed-form eigenvalues x1 +- i*sqrt(y1^2 + y2^2 + x2^2).  Branch-free;
/// real exactly when y1 = y2 = x2 = 0.
inline EigenPair eigenvalues(const MatrixParams& p) {
    const double r = std::sqrt(p.y1 * p.y1 + p.y2 * p.y2 + p.x2 * p.x2);
    return EigenPair{{p.x1, r}, {p.x1, -r}, 2.0 * r};
}

/// Spacing |e_plus - e_minus| = 2*sqrt(y1^2 + y2^2 + x2^2) without building
/// the full pair.
inline double spacing(const MatrixParams& p) {
    return 2.0 * std::sqrt(p.y1 * p.y1 + p.y2 * p.y2 + p.x2 * p.x2);
}

/// Max-abs entry of H^H H - det(H) I.  Identically zero in exact arithmetic;
/// floating point leaves a few ulps of det(H).
inline double normality_residual(const SuTwoLikeMatrix& h) {
    using C = std::complex<double>;
    const C a = h.entry(0, 0), b = h.entry(0, 1);
    const C c = h.entry(1, 0), d = h.entry(1, 1);
    const double det = h.determinant();
    // H^H H with H^H = [[conj a, conj c], [conj b, conj d]].
    const C p00 = std::conj(a) * a + std::conj(c) * c - det;
    const C p01 = std::conj(a) * b + std::conj(c) * d;
    const C p10 = std::conj(b) * a + std::conj(d) * c;
    const C p11 = std::conj(b) * b + std::conj(d) * d - det;
    return std::max(std::max(std::abs(p00), std::abs(p01)),
                    std::max(std::abs(p10), std::abs(p11)));
}

}  // namespace ptrmt
