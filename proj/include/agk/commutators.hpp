#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "agk/affine.hpp"
#include "agk/centralizers.hpp"
#include "agk/generators.hpp"
#include "agk/matrix.hpp"

namespace agk {

namespace detail {

// Factors a 2x2 block with det ~ 1 (global indices p < q) into at most four
// transvections: E_pq((a-1)/c) E_qp(c) E_pq((d-1)/c) when the lower-left
// entry c is usable, with one extra row-add to create c otherwise.
inline void factor_sl2_block(const Matrix& b, std::size_t p, std::size_t q, double eps,
                             std::vector<Transvection>& out) {
    const double a = b(0, 0), c = b(1, 0), d = b(1, 1);
    if (std::abs(a - 1.0) <= eps && std::abs(b(0, 1)) <= eps && std::abs(c) <= eps &&
        std::abs(d - 1.0) <= eps)
        return;
    if (std::abs(c) <= eps && std::abs(a - 1.0) <= eps && std::abs(d - 1.0) <= eps) {
        out.emplace_back(p, q, b(0, 1));  // already an upper shear
        return;
    }
    if (std::abs(c) > eps) {
        if (a != 1.0) out.emplace_back(p, q, (a - 1.0) / c);
        out.emplace_back(q, p, c);
        if (d != 1.0) out.emplace_back(p, q, (d - 1.0) / c);
        return;
    }
    // c ~ 0: a row add makes the lower-left entry a (nonzero since ad ~ 1).
    Matrix shifted = b;
    shifted(1, 0) += b(0, 0);
    shifted(1, 1) += b(0, 1);
    out.emplace_back(q, p, -1.0);
    factor_sl2_block(shifted, p, q, eps, out);
}

}  // namespace detail

/// Gaussian-elimination factorization of M in SL(n) into transvections, row
/// operations only, with a final 2x2 cleanup in the last two coordinates.
inline std::vector<Transvection> transvection_factorize(const Matrix& m, double tol) {
    const std::size_t n = m.dim();
    if (n < 2) throw std::invalid_argument("transvection_factorize: n >= 2 required");
    if (std::abs(det(m) - 1.0) > tol)
        throw std::invalid_argument("transvection_factorize: not in SL(n)");
    const double eps = 1e-13 * std::max(1.0, m.max_abs());

    Matrix w = m;
    std::vector<Transvection> applied;  // left-multiplications, in order
    auto row_add = [&](std::size_t i, std::size_t j, double lambda) {
        for (std::size_t k = 0; k < n; ++k) w(i, k) += lambda * w(j, k);
        applied.emplace_back(i, j, lambda);
    };

    // Reduce columns 0..n-3 to unit columns.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        if (std::abs(w(j, j) - 1.0) > eps) {
            std::size_t p = j;
            double best = 0.0;
            for (std::size_t i = j + 1; i < n; ++i)
                if (std::abs(w(i, j)) > best) {
                    best = std::abs(w(i, j));
                    p = i;
                }
            if (best <= eps) {
                // zero pivot column below; seed it from the diagonal row
                row_add(j + 1, j, 1.0);
                p = j + 1;
            }
            row_add(j, p, (1.0 - w(j, j)) / w(p, j));
        }
        for (std::size_t i = 0; i < n; ++i)
            if (i != j && std::abs(w(i, j)) > eps) row_add(i, j, -w(i, j));
    }

    // Trailing 2x2 block: factor it as T1 T2 ... and strip the factors off the
    // left of w one at a time.
    std::vector<Transvection> block;
    detail::factor_sl2_block(w.block(n - 2, n - 2, 2), n - 2, n - 1, eps, block);
    for (const Transvection& t : block) row_add(t.i, t.j, -t.lambda);

    // Clear the remaining last-two-column entries above the block.
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = n - 2; j < n; ++j)
            if (std::abs(w(i, j)) > eps) row_add(i, j, -w(i, j));

    // (A_m ... A_1) M = I, so M = A_1^{-1} A_2^{-1} ... A_m^{-1}.
    std::vector<Transvection> word;
    word.reserve(applied.size());
    for (const Transvection& t : applied) word.push_back(t.inverse());
    return word;
}

/// A pair (g, h) with [g, h] = E_ij(lambda). For n >= 3 the standard witness
/// [E_ik(lambda), E_kj(1)]; for n = 2 conjugation by diag(2, 1/2) scales a
/// shear by d_i/d_j, so [diag, E_ij(mu)] = E_ij((d_i/d_j - 1) mu).
inline CommutatorPair commutator_witness_transvection(std::size_t i, std::size_t j, double lambda,
                                                      std::size_t n) {
    if (i == j || i >= n || j >= n)
        throw std::invalid_argument("commutator_witness_transvection: bad indices");
    if (n >= 3) {
        std::size_t k = 0;
        while (k == i || k == j) ++k;
        return {Transvection(i, k, lambda).embed(n), Transvection(k, j, 1.0).embed(n)};
    }
    const Matrix d = Matrix::diagonal({2.0, 0.5});
    const double scale = (i == 0) ? 4.0 : 0.25;
    return {d, Transvection(i, j, lambda / (scale - 1.0)).embed(2)};
}

/// Every SL(n) element as a product of commutators: transvection
/// factorization composed with per-shear commutator witnesses.
inline std::vector<CommutatorPair> sl_commutator_factorize(const Matrix& m, double tol) {
    const std::size_t n = m.dim();
    std::vector<CommutatorPair> out;
    for (const Transvection& t : transvection_factorize(m, tol))
        out.push_back(commutator_witness_transvection(t.i, t.j, t.lambda, n));
    return out;
}

inline Matrix evaluate(const std::vector<CommutatorPair>& pairs, std::size_t n) {
    Matrix p = Matrix::identity(n);
    for (const auto& cp : pairs) p = p * commutator(cp.g, cp.h);
    return p;
}

inline AffineElement evaluate(const std::vector<AffineCommutatorPair>& pairs, std::size_t n) {
    AffineElement p = AffineElement::identity(n);
    for (const auto& cp : pairs) p = mul(p, commutator(cp.g, cp.h));
    return p;
}

namespace detail {

struct SignFlipParts {
    double x;       // first translation coordinate
    double lambda;  // (0,0) entry of the linear part
    Matrix block;   // lower-right (n-1) block
};

inline SignFlipParts split_sign_flip_member(const AffineElement& g) {
    CentralizerSpec spec{LemmaId::SIGN_FLIP, g.dim(), DetClass::GL};
    if (!membership(spec, g, 1e-8))
        throw std::invalid_argument("commutator_in_A: element is not in the centralizer family");
    return {g.translation[0], g.linear(0, 0), g.linear.block(1, 1, g.dim() - 1)};
}

}  // namespace detail

/// Closed-form commutator inside the centralizer family of odd dimension:
/// [g, h] has translation ((-1 + lambda_g) x_h + (1 - lambda_h) x_g, 0, ...)
/// and linear part diag(1, A_g A_h A_g^{-1} A_h^{-1}).
inline AffineElement commutator_in_A(const AffineElement& g, const AffineElement& h) {
    if (g.dim() != h.dim()) throw std::invalid_argument("commutator_in_A: dimension mismatch");
    const std::size_t n = g.dim();
    const auto pg = detail::split_sign_flip_member(g);
    const auto ph = detail::split_sign_flip_member(h);
    Vec x(n, 0.0);
    x[0] = (-1.0 + pg.lambda) * ph.x + (1.0 - ph.lambda) * pg.x;
    Matrix lin = Matrix::identity(n);
    lin.set_block(1, 1, commutator(pg.block, ph.block));
    return AffineElement(std::move(x), std::move(lin));
}

/// Expresses ((x1, 0, ..., 0), diag(1, D)) as a product of commutators of
/// centralizer-family elements: one pair with lambda = lambda' = 1/2 and
/// A = A' = diag(2, 1, ..., 1) carries the translation, then the commutator
/// word of D lifted with lambda = 1 and zero translation.
inline std::vector<AffineCommutatorPair> express_D_element(double x1, const Matrix& d, double tol) {
    const std::size_t k = d.dim();
    const std::size_t n = k + 1;
    if (n < 3) throw std::invalid_argument("express_D_element: n >= 3 required");
    if (std::abs(det(d) - 1.0) > tol)
        throw std::invalid_argument("express_D_element: det(D) != 1");

    std::vector<AffineCommutatorPair> out;
    if (x1 != 0.0) {
        Matrix lin = Matrix::identity(n);
        lin(0, 0) = 0.5;
        lin(1, 1) = 2.0;
        Vec xp(n, 0.0), xm(n, 0.0);
        xp[0] = x1;
        xm[0] = -x1;
        out.push_back({AffineElement(std::move(xp), lin), AffineElement(std::move(xm), lin)});
    }
    for (const CommutatorPair& cp : sl_commutator_factorize(d, tol)) {
        Matrix lg = Matrix::identity(n);
        lg.set_block(1, 1, cp.g);
        Matrix lh = Matrix::identity(n);
        lh.set_block(1, 1, cp.h);
        out.push_back({AffineElement::linear_only(std::move(lg)),
                       AffineElement::linear_only(std::move(lh))});
    }
    return out;
}

}  // namespace agk
