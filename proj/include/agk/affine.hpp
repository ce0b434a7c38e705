#pragma once

#include <set>
#include <stdexcept>

#include "agk/matrix.hpp"

namespace agk {

/// The four determinant classes of G(n).
enum class DetClass { GL, SL, ABS_SL, GL_PLUS };

/// Returns every class whose determinant condition holds within tol.
/// An empty set is possible for near-singular input.
inline std::set<DetClass> classify(const Matrix& a, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("classify: tol must be positive");
    const double d = det(a);
    std::set<DetClass> out;
    if (std::abs(d) > tol) out.insert(DetClass::GL);
    if (std::abs(d - 1.0) <= tol) out.insert(DetClass::SL);
    if (std::abs(std::abs(d) - 1.0) <= tol) out.insert(DetClass::ABS_SL);
    if (d > tol) out.insert(DetClass::GL_PLUS);
    return out;
}

inline bool in_class(const Matrix& a, DetClass c, double tol) {
    return classify(a, tol).count(c) > 0;
}

/// An element (x, A) of the semidirect product R^n x| G(n).
struct AffineElement {
    Vec translation;
    Matrix linear;

    AffineElement() = default;
    AffineElement(Vec x, Matrix a) : translation(std::move(x)), linear(std::move(a)) {
        if (translation.size() != linear.dim())
            throw std::invalid_argument("AffineElement: translation/linear dimension mismatch");
    }

    static AffineElement identity(std::size_t n) {
        return AffineElement(Vec(n, 0.0), Matrix::identity(n));
    }

    /// Pure translation (x, I).
    static AffineElement translation_only(Vec x) {
        const std::size_t n = x.size();
        return AffineElement(std::move(x), Matrix::identity(n));
    }

    /// Pure linear part (0, A).
    static AffineElement linear_only(Matrix a) {
        const std::size_t n = a.dim();
        return AffineElement(Vec(n, 0.0), std::move(a));
    }

    std::size_t dim() const { return linear.dim(); }
};

/// Group law (x, A)(y, B) = (x + A y, A B).
inline AffineElement mul(const AffineElement& g, const AffineElement& h) {
    if (g.dim() != h.dim()) throw std::invalid_argument("mul: dimension mismatch");
    return AffineElement(g.translation + g.linear * h.translation, g.linear * h.linear);
}

/// Group inverse (-A^{-1} x, A^{-1}).
inline AffineElement inv(const AffineElement& g) {
    if (!is_invertible(g.linear)) throw std::domain_error("inv: singular linear part");
    Matrix ai = inverse(g.linear);
    Vec t = -1.0 * (ai * g.translation);
    return AffineElement(std::move(t), std::move(ai));
}

/// [g, h] = g h g^{-1} h^{-1}.
inline AffineElement commutator(const AffineElement& g, const AffineElement& h) {
    return mul(mul(g, h), mul(inv(g), inv(h)));
}

/// Affine action p -> A p + x.
inline Vec act(const AffineElement& g, const Vec& p) {
    if (p.size() != g.dim()) throw std::invalid_argument("act: dimension mismatch");
    return g.linear * p + g.translation;
}

/// max of translation distance and linear Frobenius distance.
inline double distance(const AffineElement& a, const AffineElement& b) {
    return std::max(norm(a.translation - b.translation), distance(a.linear, b.linear));
}

inline double distance_to_identity(const AffineElement& g) {
    return distance(g, AffineElement::identity(g.dim()));
}

inline Matrix commutator(const Matrix& g, const Matrix& h) {
    return g * h * inverse(g) * inverse(h);
}

}  // namespace agk
