#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "agk/affine.hpp"
#include "agk/generators.hpp"
#include "agk/matrix.hpp"

namespace agk {

/// The five characterized centralizers.
enum class LemmaId { NEG_IDENTITY, SIGN_FLIP, SCALAR, J_SL2, BLOCK_M };

struct CentralizerSpec {
    LemmaId lemma = LemmaId::NEG_IDENTITY;
    std::size_t n = 2;
    DetClass det_class = DetClass::GL;

    void validate() const {
        switch (lemma) {
            case LemmaId::NEG_IDENTITY:
                // requires -I in G(n)
                if (n % 2 != 0 && det_class != DetClass::GL && det_class != DetClass::ABS_SL)
                    throw std::invalid_argument(
                        "NEG_IDENTITY: -I not in G(n) for odd n unless class is GL or |SL|");
                if (n < 2) throw std::invalid_argument("NEG_IDENTITY: n >= 2 required");
                break;
            case LemmaId::SIGN_FLIP:
                if (n < 3 || n % 2 == 0)
                    throw std::invalid_argument("SIGN_FLIP: requires odd n >= 3");
                break;
            case LemmaId::SCALAR:
                if (n < 2) throw std::invalid_argument("SCALAR: n >= 2 required");
                break;
            case LemmaId::J_SL2:
                if (n != 2) throw std::invalid_argument("J_SL2: requires n = 2");
                break;
            case LemmaId::BLOCK_M:
                if (n < 4) throw std::invalid_argument("BLOCK_M: requires n >= 4");
                break;
        }
    }
};

namespace detail {

// Orthogonal sample by modified Gram-Schmidt (two passes) on standard-normal
// columns, each diagonal factor's sign fixed positive.
inline Matrix orthonormal_sample(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    for (;;) {
        Matrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = nd(rng);
        Matrix q(n);
        bool degenerate = false;
        for (std::size_t j = 0; j < n && !degenerate; ++j) {
            Vec v = a.column(j);
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t i = 0; i < j; ++i) {
                    const Vec qi = q.column(i);
                    const double r = dot(qi, v);
                    for (std::size_t k = 0; k < n; ++k) v[k] -= r * qi[k];
                }
            const double r = norm(v);
            if (r < 1e-8) {
                degenerate = true;
                break;
            }
            const double sign = dot(a.column(j), v) >= 0.0 ? 1.0 : -1.0;
            for (std::size_t k = 0; k < n; ++k) q(k, j) = sign * v[k] / r;
        }
        if (!degenerate) return q;
    }
}

inline bool class_value_ok(double d, DetClass c, double tol) {
    switch (c) {
        case DetClass::GL: return std::abs(d) > tol;
        case DetClass::SL: return std::abs(d - 1.0) <= tol;
        case DetClass::ABS_SL: return std::abs(std::abs(d) - 1.0) <= tol;
        case DetClass::GL_PLUS: return d > tol;
    }
    return false;
}

}  // namespace detail

/// Deviations of g from the lemma's closed form. Small residuals mean
/// membership; the class constraint is reported as 0/1.
inline std::vector<double> membership_residuals(const CentralizerSpec& spec,
                                                const AffineElement& g, double tol) {
    spec.validate();
    const std::size_t n = spec.n;
    if (g.dim() != n) throw std::invalid_argument("membership: dimension mismatch");
    std::vector<double> res;
    const Matrix& a = g.linear;
    switch (spec.lemma) {
        case LemmaId::NEG_IDENTITY: {
            res.push_back(norm(g.translation));
            res.push_back(detail::class_value_ok(det(a), spec.det_class, tol) ? 0.0 : 1.0);
            break;
        }
        case LemmaId::SIGN_FLIP: {
            double trans = 0.0;
            for (std::size_t i = 1; i < n; ++i) trans = std::max(trans, std::abs(g.translation[i]));
            res.push_back(trans);
            double off = 0.0;  // first row gamma and first column beta
            for (std::size_t i = 1; i < n; ++i) {
                off = std::max(off, std::abs(a(0, i)));
                off = std::max(off, std::abs(a(i, 0)));
            }
            res.push_back(off);
            const double lambda = a(0, 0);
            const double ld = lambda * det(a.block(1, 1, n - 1));
            res.push_back(detail::class_value_ok(ld, spec.det_class, tol) ? 0.0 : 1.0);
            break;
        }
        case LemmaId::SCALAR: {
            res.push_back(norm(g.translation));
            const double lambda = a(0, 0);
            res.push_back(distance(a, Matrix::identity(n) * lambda));
            res.push_back(std::abs(lambda) > tol ? 0.0 : 1.0);
            break;
        }
        case LemmaId::J_SL2: {
            res.push_back(norm(g.translation));
            res.push_back(std::abs(a(0, 0) - a(1, 1)));
            res.push_back(std::abs(a(0, 1) + a(1, 0)));
            res.push_back(std::abs(a(0, 0) * a(0, 0) + a(1, 0) * a(1, 0) - 1.0));
            break;
        }
        case LemmaId::BLOCK_M: {
            res.push_back(norm(g.translation));
            double off = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const bool upper = i < 2 && j < 2;
                    const bool lower = i >= 2 && j >= 2;
                    if (!upper && !lower) off = std::max(off, std::abs(a(i, j)));
                }
            res.push_back(off);
            const double lambda = a(2, 2);
            double diag = 0.0;
            for (std::size_t i = 2; i < n; ++i) {
                diag = std::max(diag, std::abs(a(i, i) - lambda));
                for (std::size_t j = 2; j < n; ++j)
                    if (i != j) diag = std::max(diag, std::abs(a(i, j)));
            }
            res.push_back(diag);
            res.push_back(detail::class_value_ok(det(a), spec.det_class, tol) ? 0.0 : 1.0);
            break;
        }
    }
    return res;
}

/// True iff g satisfies the lemma's closed-form description within tol.
inline bool membership(const CentralizerSpec& spec, const AffineElement& g, double tol) {
    for (double r : membership_residuals(spec, g, tol))
        if (r > tol) return false;
    return true;
}

/// The element(s) whose centralizer the lemma characterizes.
inline std::vector<AffineElement> defining_elements(const CentralizerSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n;
    std::vector<AffineElement> out;
    switch (spec.lemma) {
        case LemmaId::NEG_IDENTITY:
            out.push_back(AffineElement::linear_only(Matrix::identity(n) * -1.0));
            break;
        case LemmaId::SIGN_FLIP: {
            Matrix m = Matrix::identity(n) * -1.0;
            m(0, 0) = 1.0;
            out.push_back(AffineElement::linear_only(m));
            break;
        }
        case LemmaId::SCALAR:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j)
                        out.push_back(AffineElement::linear_only(Transvection(i, j, 1.0).embed(n)));
            break;
        case LemmaId::J_SL2:
            out.push_back(AffineElement::linear_only(Matrix{{0.0, -1.0}, {1.0, 0.0}}));
            break;
        case LemmaId::BLOCK_M:
            for (std::size_t i = 2; i < n; ++i)
                for (std::size_t j = 2; j < n; ++j)
                    if (i != j)
                        out.push_back(AffineElement::linear_only(Transvection(i, j, 1.0).embed(n)));
            break;
    }
    return out;
}

/// Parametrized member of the characterized centralizer. Empty params are
/// filled pseudo-randomly from seed; explicit params must satisfy the class
/// constraint.
///
/// Parameter layouts (row-major matrix entries):
///   NEG_IDENTITY: n*n entries of A
///   SIGN_FLIP:    x1, lambda, then (n-1)^2 entries of A
///   SCALAR:       lambda
///   J_SL2:        theta
///   BLOCK_M:      4 entries of the 2x2 block A, then lambda
inline AffineElement sample(const CentralizerSpec& spec, Vec params, std::uint64_t seed) {
    spec.validate();
    const std::size_t n = spec.n;
    const double tol = 1e-9;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const bool generate = params.empty();

    // c * Q with Q orthogonal and |det| = mag, det sign as requested. Keeps
    // the condition number of the sample equal to 1 so that downstream
    // inverses and commutators stay accurate.
    auto scaled_orthogonal = [&](std::size_t m, double mag, bool negative) {
        Matrix q = detail::orthonormal_sample(m, rng);
        if ((det(q) < 0.0) != negative)
            for (std::size_t i = 0; i < m; ++i) q(i, m - 1) = -q(i, m - 1);
        return q * std::pow(mag, 1.0 / static_cast<double>(m));
    };
    // Random matrix a with lambda * det(a) in the spec's determinant class
    // (lambda is the cofactor contributed by the rest of the linear part).
    auto class_matrix = [&](std::size_t m, double lambda) {
        double mag = std::abs(uni(rng)) + 0.5;
        bool negative = uni(rng) < 0.0;
        switch (spec.det_class) {
            case DetClass::GL: break;
            case DetClass::SL:
                mag = 1.0 / std::abs(lambda);
                negative = lambda < 0.0;
                break;
            case DetClass::ABS_SL: mag = 1.0 / std::abs(lambda); break;
            case DetClass::GL_PLUS: negative = lambda < 0.0; break;
        }
        return scaled_orthogonal(m, mag, negative);
    };

    switch (spec.lemma) {
        case LemmaId::NEG_IDENTITY: {
            Matrix a(n);
            if (generate) {
                a = class_matrix(n, 1.0);
            } else {
                if (params.size() != n * n)
                    throw std::invalid_argument("sample NEG_IDENTITY: expected n*n params");
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) a(i, j) = params[i * n + j];
                if (!detail::class_value_ok(det(a), spec.det_class, tol))
                    throw std::invalid_argument("sample NEG_IDENTITY: A violates the class constraint");
            }
            return AffineElement::linear_only(a);
        }
        case LemmaId::SIGN_FLIP: {
            double x1, lambda;
            Matrix a(n - 1);
            if (generate) {
                x1 = uni(rng);
                lambda = uni(rng) + (uni(rng) >= 0.0 ? 1.5 : -1.5);
                a = class_matrix(n - 1, lambda);
            } else {
                if (params.size() != 2 + (n - 1) * (n - 1))
                    throw std::invalid_argument("sample SIGN_FLIP: expected 2 + (n-1)^2 params");
                x1 = params[0];
                lambda = params[1];
                for (std::size_t i = 0; i < n - 1; ++i)
                    for (std::size_t j = 0; j < n - 1; ++j) a(i, j) = params[2 + i * (n - 1) + j];
                if (!detail::class_value_ok(lambda * det(a), spec.det_class, tol))
                    throw std::invalid_argument("sample SIGN_FLIP: lambda*det(A) violates the class constraint");
            }
            Matrix lin = Matrix::identity(n);
            lin(0, 0) = lambda;
            lin.set_block(1, 1, a);
            Vec x(n, 0.0);
            x[0] = x1;
            return AffineElement(std::move(x), std::move(lin));
        }
        case LemmaId::SCALAR: {
            double lambda;
            if (generate) {
                switch (spec.det_class) {
                    case DetClass::GL: lambda = uni(rng) + (uni(rng) >= 0.0 ? 1.5 : -1.5); break;
                    case DetClass::SL: lambda = (n % 2 == 0 && uni(rng) < 0.0) ? -1.0 : 1.0; break;
                    case DetClass::ABS_SL: lambda = uni(rng) < 0.0 ? -1.0 : 1.0; break;
                    case DetClass::GL_PLUS:
                        lambda = std::abs(uni(rng)) + 0.5;
                        if (n % 2 == 0 && uni(rng) < 0.0) lambda = -lambda;
                        break;
                }
            } else {
                if (params.size() != 1) throw std::invalid_argument("sample SCALAR: expected 1 param");
                lambda = params[0];
                double d = 1.0;
                for (std::size_t i = 0; i < n; ++i) d *= lambda;
                if (!detail::class_value_ok(d, spec.det_class, tol))
                    throw std::invalid_argument("sample SCALAR: lambda^n violates the class constraint");
            }
            return AffineElement::linear_only(Matrix::identity(n) * lambda);
        }
        case LemmaId::J_SL2: {
            const double pi = 3.14159265358979323846;
            double theta = generate ? uni(rng) * pi : params.at(0);
            return AffineElement::linear_only(PlanarRotation(0, 1, theta).embed(2));
        }
        case LemmaId::BLOCK_M: {
            Matrix a(2);
            double lambda;
            if (generate) {
                lambda = std::abs(uni(rng)) + 0.5;
                double pw = 1.0;
                for (std::size_t i = 0; i + 2 < n; ++i) pw *= lambda;
                a = class_matrix(2, pw);
            } else {
                if (params.size() != 5) throw std::invalid_argument("sample BLOCK_M: expected 5 params");
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) a(i, j) = params[i * 2 + j];
                lambda = params[4];
                double d = det(a);
                for (std::size_t i = 0; i + 2 < n; ++i) d *= lambda;
                if (!detail::class_value_ok(d, spec.det_class, tol))
                    throw std::invalid_argument("sample BLOCK_M: det violates the class constraint");
            }
            Matrix lin = Matrix::identity(n) * lambda;
            lin.set_block(0, 0, a);
            return AffineElement::linear_only(lin);
        }
    }
    throw std::logic_error("sample: unreachable");
}

/// Basis of {X : XS = SX for every S in the generating set}.
struct CommutantBasis {
    std::size_t dim = 0;
    std::vector<Matrix> basis;
};

/// Linear-solve oracle: XA - AX = 0 stacked over all generators as a
/// homogeneous system in the n^2 entries of X; null space by a symmetric
/// eigen decomposition of the normal matrix with singular-value threshold
/// tol * sigma_max.
inline CommutantBasis commutant_basis(const std::vector<Matrix>& gens, double tol) {
    if (gens.empty()) throw std::invalid_argument("commutant_basis: empty generating set");
    const std::size_t n = gens.front().dim();
    for (const Matrix& a : gens)
        if (a.dim() != n) throw std::invalid_argument("commutant_basis: mixed dimensions");
    const std::size_t nn = n * n;

    // Normal matrix G = sum_A K_A^T K_A where K_A vec(X) = vec(XA - AX).
    Matrix gram(nn);
    Vec row(nn);
    for (const Matrix& a : gens) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::fill(row.begin(), row.end(), 0.0);
                // (XA)_ij = sum_k X(i,k) A(k,j);  (AX)_ij = sum_k A(i,k) X(k,j)
                for (std::size_t k = 0; k < n; ++k) {
                    row[i * n + k] += a(k, j);
                    row[k * n + j] -= a(i, k);
                }
                for (std::size_t p = 0; p < nn; ++p) {
                    if (row[p] == 0.0) continue;
                    for (std::size_t q = 0; q < nn; ++q) gram(p, q) += row[p] * row[q];
                }
            }
    }

    Vec values;
    Matrix vectors(nn);
    symmetric_eigen(gram, values, vectors);
    double lam_max = 0.0;
    for (double v : values) lam_max = std::max(lam_max, v);
    const double sigma_max = std::sqrt(std::max(lam_max, 0.0));
    const double thresh = tol * sigma_max;

    CommutantBasis out;
    for (std::size_t c = 0; c < nn; ++c) {
        const double sigma = std::sqrt(std::max(values[c], 0.0));
        if (sigma_max > 0.0 && sigma > thresh) continue;
        Matrix x(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = vectors(i * n + j, c);
        out.basis.push_back(std::move(x));
    }
    out.dim = out.basis.size();
    return out;
}

/// Constructive maximality witness: a coordinate direction y with
/// ||A y - y|| > 0, so the pure translation (y, I) does not commute with any
/// (x, A). Picks the column of A - I of maximal norm.
inline Vec noncommuting_translation_witness(const Matrix& a, double tol) {
    const std::size_t n = a.dim();
    const Matrix d = a - Matrix::identity(n);
    if (d.frobenius() <= tol)
        throw std::domain_error("noncommuting_translation_witness: A = I within tol, no witness");
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double cn = norm(d.column(j));
        if (cn > best_norm) {
            best_norm = cn;
            best = j;
        }
    }
    return unit_vector(n, best);
}

}  // namespace agk
