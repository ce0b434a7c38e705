#pragma once

#include <cmath>
#include <stdexcept>

#include "agk/generators.hpp"
#include "agk/matrix.hpp"

namespace agk {

namespace detail {

// Rotation angle taking the pair (a, b) to (hypot(a,b), 0):
// R(theta) (a, b)^T = (r, 0)^T with theta = atan2(-b, a) in (-pi, pi].
inline double reducing_angle(double a, double b) { return std::atan2(-b, a); }

}  // namespace detail

/// Successive planar rotations carrying a unit vector to e_1, zeroing
/// coordinates n, n-1, ..., 2. Rotation k acts in the plane (n-k, n-k+1).
/// Length <= n-1; near-zero coordinate pairs skip their rotation.
inline GeneratorWord givens_reduce(const Vec& x, double tol) {
    const std::size_t n = x.size();
    if (n == 0 || norm(x) <= tol) throw std::invalid_argument("givens_reduce: zero vector");
    if (std::abs(norm(x) - 1.0) > tol)
        throw std::invalid_argument("givens_reduce: input must be a unit vector");
    GeneratorWord word(n);
    Vec w = x;
    std::vector<PlanarRotation> applied;  // in application order
    for (std::size_t j = n - 1; j >= 1; --j) {
        const double a = w[j - 1], b = w[j];
        if (std::abs(a) < tol && std::abs(b) < tol) continue;
        const double theta = detail::reducing_angle(a, b);
        if (theta == 0.0) continue;
        applied.emplace_back(j - 1, j, theta);
        w[j - 1] = std::hypot(a, b);
        w[j] = 0.0;
    }
    // The word is a left-to-right product, so the first rotation applied to x
    // is the rightmost letter.
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) word.letters.emplace_back(*it);
    return word;
}

namespace detail {

// The product of the word's letters applied left of v.
inline Vec apply_word(const GeneratorWord& word, const Vec& v) {
    return word.evaluate() * v;
}

inline void require_special_orthogonal(const Matrix& r, double tol) {
    const std::size_t n = r.dim();
    if (distance(r.transpose() * r, Matrix::identity(n)) > tol)
        throw std::invalid_argument("expected an orthogonal matrix");
    if (std::abs(det(r) - 1.0) > tol) throw std::invalid_argument("expected determinant 1");
}

}  // namespace detail

/// Factors R in SO(n) into planar rotations: reduce the first column to e_1,
/// the residual fixes e_1 and is an embedded SO(n-1), recurse on the lower
/// block. Length <= n(n-1)/2.
inline GeneratorWord so_factorize(const Matrix& r, double tol) {
    const std::size_t n = r.dim();
    detail::require_special_orthogonal(r, tol);
    GeneratorWord word(n);
    Matrix w = r;
    // reducers[] * R = I, so R = product of their inverses in reverse order
    std::vector<PlanarRotation> reducers;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t j = n - 1; j >= k + 1; --j) {
            const double a = w(j - 1, k), b = w(j, k);
            if (std::abs(a) < tol && std::abs(b) < tol) continue;
            const double theta = detail::reducing_angle(a, b);
            if (theta == 0.0) continue;
            PlanarRotation rot(j - 1, j, theta);
            w = rot.embed(n) * w;
            reducers.push_back(rot);
        }
    }
    // (G_m ... G_1) R = I, so R = G_1^{-1} G_2^{-1} ... G_m^{-1}.
    for (const PlanarRotation& g : reducers) word.letters.emplace_back(g.inverse());
    return word;
}

/// A rotation in SO(n) carrying x0 to x1 (equal nonzero norms), composed from
/// the Givens words of the normalized endpoints.
inline Matrix sphere_orbit_witness(const Vec& x0, const Vec& x1, double tol) {
    const std::size_t n = x0.size();
    if (n < 2 || x1.size() != n)
        throw std::invalid_argument("sphere_orbit_witness: need matching dimension >= 2");
    const double r0 = norm(x0), r1 = norm(x1);
    if (r0 <= tol || r1 <= tol) throw std::invalid_argument("sphere_orbit_witness: zero vector");
    if (std::abs(r0 - r1) > tol) throw std::invalid_argument("sphere_orbit_witness: norm mismatch");
    const GeneratorWord w0 = givens_reduce((1.0 / r0) * x0, tol);
    const GeneratorWord w1 = givens_reduce((1.0 / r1) * x1, tol);
    // w0 maps x0/r0 to e1 and w1 maps x1/r1 to e1, so w1^T w0 maps x0 to x1.
    return w1.evaluate().transpose() * w0.evaluate();
}

/// Factors an e_1-stabilizing SL(n) element into UPPER/LOWER block
/// generators: LOWER diag(1, A) for the lower-right block, an UPPER letter
/// for the row shear, and the corner entry realized as the four-factor
/// product yielding E_1n(lambda1 * lambda2).
inline GeneratorWord stabilizer_factorize(const Matrix& a, double tol) {
    const std::size_t n = a.dim();
    if (n < 3) throw std::invalid_argument("stabilizer_factorize: n >= 3 required");
    if (std::abs(det(a) - 1.0) > tol) throw std::invalid_argument("stabilizer_factorize: not in SL(n)");
    for (std::size_t i = 0; i < n; ++i) {
        const double want = i == 0 ? 1.0 : 0.0;
        if (std::abs(a(i, 0) - want) > tol)
            throw std::invalid_argument("stabilizer_factorize: first column must be e_1");
    }
    GeneratorWord word(n);

    // a = diag(1, A) * (I + e_1 row^T) with row the tail of the first row.
    const Matrix lower = a.block(1, 1, n - 1);
    if (distance(lower, Matrix::identity(n - 1)) > tol)
        word.letters.emplace_back(BlockGenerator(BlockPosition::LOWER, lower));

    // Row shear over columns 2..n-1 as a single UPPER letter.
    bool have_row = false;
    Matrix shear = Matrix::identity(n - 1);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        if (std::abs(a(0, j)) > tol) have_row = true;
        shear(0, j) = a(0, j);
    }
    if (have_row) word.letters.emplace_back(BlockGenerator(BlockPosition::UPPER, shear));

    // Corner E_1n(c): U(l1) L(l2) U(-l1) L(-l2) with l1*l2 = c, balanced
    // magnitudes l1 = sign(c) sqrt|c|, l2 = sqrt|c|.
    const double c = a(0, n - 1);
    if (std::abs(c) > tol) {
        const double l2 = std::sqrt(std::abs(c));
        const double l1 = c >= 0.0 ? l2 : -l2;
        auto upper_shear = [n](double lam) {
            Matrix b = Matrix::identity(n - 1);
            b(0, n - 2) = lam;  // embeds as E_{1,n-1}
            return BlockGenerator(BlockPosition::UPPER, b);
        };
        auto lower_shear = [n](double lam) {
            Matrix b = Matrix::identity(n - 1);
            b(n - 3, n - 2) = lam;  // embeds as E_{n-1,n}
            return BlockGenerator(BlockPosition::LOWER, b);
        };
        word.letters.emplace_back(upper_shear(l1));
        word.letters.emplace_back(lower_shear(l2));
        word.letters.emplace_back(upper_shear(-l1));
        word.letters.emplace_back(lower_shear(-l2));
    }
    return word;
}

/// At most two block generators whose product g satisfies g x = e_1:
/// a LOWER letter collapsing (x_2, ..., x_n) onto the second coordinate,
/// then an UPPER letter mapping (x_1, s, 0, ...) to e_1.
inline GeneratorWord sphere_transitivity_witness(const Vec& x, double tol) {
    const std::size_t n = x.size();
    if (n < 3) throw std::invalid_argument("sphere_transitivity_witness: n >= 3 required");
    if (norm(x) <= tol) throw std::invalid_argument("sphere_transitivity_witness: zero vector");
    GeneratorWord word(n);
    Vec w = x;

    bool have_lower = false;
    BlockGenerator lower;
    Vec tail(w.begin() + 1, w.end());
    const double tail_norm = norm(tail);
    if (tail_norm > tol) {
        // Givens rotations are already in SL(n-1).
        Matrix b = Matrix::identity(n - 1);
        for (std::size_t j = n - 2; j >= 1; --j) {
            const double a = tail[j - 1], bb = tail[j];
            if (std::abs(a) < tol && std::abs(bb) < tol) continue;
            const double theta = detail::reducing_angle(a, bb);
            if (theta == 0.0) continue;
            b = PlanarRotation(j - 1, j, theta).embed(n - 1) * b;
            tail[j - 1] = std::hypot(a, bb);
            tail[j] = 0.0;
        }
        if (distance(b, Matrix::identity(n - 1)) > 0.0) {
            lower = BlockGenerator(BlockPosition::LOWER, b);
            have_lower = true;
        }
        for (std::size_t i = 1; i < n; ++i) w[i] = tail[i - 1];
    }

    // w is now (x_1, s, 0, ..., 0); rotate the leading pair to (r, 0) and
    // correct to (1, 0) with det-preserving diag(1/r, r, 1, ...). The UPPER
    // letter acts after the LOWER one, so it is the leftmost factor.
    const double r = std::hypot(w[0], w[1]);
    if (std::abs(w[0] - 1.0) > tol || std::abs(w[1]) > tol) {
        Matrix b = PlanarRotation(0, 1, detail::reducing_angle(w[0], w[1])).embed(n - 1);
        Matrix scale = Matrix::identity(n - 1);
        scale(0, 0) = 1.0 / r;
        scale(1, 1) = r;
        word.letters.emplace_back(BlockGenerator(BlockPosition::UPPER, scale * b));
    }
    if (have_lower) word.letters.emplace_back(std::move(lower));
    return word;
}

/// Factors M in SL(n), n >= 3, into block generators: carry M e_1 to e_1 with
/// the transitivity witness g, factor the stabilizer element g M, and prepend
/// the inverses of g's letters.
inline GeneratorWord sl_block_factorize(const Matrix& m, double tol) {
    const std::size_t n = m.dim();
    if (n < 3) throw std::invalid_argument("sl_block_factorize: n >= 3 required");
    if (std::abs(det(m) - 1.0) > tol) throw std::invalid_argument("sl_block_factorize: not in SL(n)");
    const GeneratorWord g = sphere_transitivity_witness(m.column(0), tol);
    const Matrix stab = g.evaluate() * m;
    // loosen the stabilizer check: the witness application adds rounding
    const GeneratorWord s = stabilizer_factorize(stab, std::max(tol * 100.0, 1e-10));
    GeneratorWord word(n);
    for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it)
        word.letters.emplace_back(std::get<BlockGenerator>(*it).inverted());
    for (const auto& l : s.letters) word.letters.push_back(l);
    return word;
}

/// GL+ = scalar * SL split: lambda = det(T)^{1/n}, S = T / lambda.
inline std::pair<double, Matrix> glplus_split(const Matrix& t, double tol) {
    const double d = det(t);
    if (d <= tol) throw std::invalid_argument("glplus_split: determinant not positive");
    const double lambda = std::pow(d, 1.0 / static_cast<double>(t.dim()));
    return {lambda, t * (1.0 / lambda)};
}

}  // namespace agk
