// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace ptrmt {

/// Non-negative integer exponents (l, n, m) of the Gaussian-weighted
/// ensemble.  Admissible only when m >= max(l, n).
struct ExponentTriple {
    int l = 0;
    int n = 0;
    int m = 0;

    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
};

/// Real separation constants (lambda0, lambda2, lambda3) of the unit-ball
/// ensemble.  The derived exponents alpha_i must all be positive.
struct BoundedExponents {
    double lambda0 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;

    /// (alpha1, alpha2, alpha3, alpha4) =
    /// (lambda3+1, lambda2-lambda0+1, lambda2-lambda3+1, lambda0+1).
    std::array<double, 4> alphas() const {
        return {lambda3 + 1.0, lambda2 - lambda0 + 1.0,
                lambda2 - lambda3 + 1.0, lambda0 + 1.0};
    }

    friend bool operator==(const BoundedExponents&, const BoundedExponents&) = default;
};

struct UnboundedEnsemble {
    double alpha = 1.0;
    ExponentTriple exponents;

    friend bool operator==(const UnboundedEnsemble&, const UnboundedEnsemble&) = default;
};

struct BoundedEnsemble {
    BoundedExponents exponents;

    friend bool operator==(const BoundedEnsemble&, const BoundedEnsemble&) = default;
};

/// Tagged union selecting the ensemble variant.
using EnsembleSpec = std::variant<UnboundedEnsemble, BoundedEnsemble>;

/// Validation returns the violated inequality verbatim (empty optional when
/// admissible) so CLI diagnostics and failed verification reports can name it.
inline std::optional<std::string> validate(const ExponentTriple& t) {
    if (t.l < 0) return "l >= 0 violated";
    if (t.n < 0) return "n >= 0 violated";
    if (t.m < 0) return "m >= 0 violated";
    if (t.m < std::max(t.l, t.n)) return "m >= max(l,n) violated";
    return std::nullopt;
}

inline std::optional<std::string> validate(const BoundedExponents& b) {
    if (!(std::isfinite(b.lambda0) && std::isfinite(b.lambda2) && std::isfinite(b.lambda3)))
        return "finite lambda violated";
    if (!(b.lambda0 > -1.0)) return "lambda0 > -1 violated";
    if (!(b.lambda3 > -1.0)) return "lambda3 > -1 violated";
    if (!(b.lambda2 - b.lambda0 > -1.0)) return "lambda2 - lambda0 > -1 violated";
    if (!(b.lambda2 - b.lambda3 > -1.0)) return "lambda2 - lambda3 > -1 violated";
    return std::nullopt;
}

inline std::optional<std::string> validate(const UnboundedEnsemble& u) {
    if (!(std::isfinite(u.alpha) && u.alpha > 0.0)) return "alpha > 0 violated";
    return validate(u.exponents);
}

inline std::optional<std::string> validate(const BoundedEnsemble& b) {
    return validate(b.exponents);
}

inline std::optional<std::string> validate(const EnsembleSpec& spec) {
    return std::visit([](const auto& v) { return validate(v); }, spec);
}

template <typename T>
void require_valid(const T& v) {
    if (auto err = validate(v)) throw std::invalid_argument(*err);
}

/// Exponent nu of the small-spacing law p(sigma) ~ C sigma^nu.
/// Unbounded: 2(2m - l + 1).  Bounded: 2*lambda2 + 2 - lambda3.
inline double repulsion_exponent(const EnsembleSpec& spec) {
    require_valid(spec);
    if (const auto* u = std::get_if<UnboundedEnsemble>(&spec)) {
        return 2.0 * (2 * u->exponents.m - u->exponents.l + 1);
    }
    const auto& b = std::get<BoundedEnsemble>(spec).exponents;
    return 2.0 * b.lambda2 + 2.0 - b.lambda3;
}

}  // namespace ptrmt
