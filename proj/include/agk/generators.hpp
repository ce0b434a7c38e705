#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include "agk/affine.hpp"
#include "agk/matrix.hpp"

namespace agk {

/// Identity except the 2x2 rotation R(theta) in the (i, j) coordinate plane.
/// Indices are 0-based with i < j.
struct PlanarRotation {
    std::size_t i = 0;
    std::size_t j = 1;
    double theta = 0.0;

    PlanarRotation() = default;
    PlanarRotation(std::size_t i_, std::size_t j_, double theta_) : i(i_), j(j_), theta(theta_) {
        if (i >= j) throw std::invalid_argument("PlanarRotation: requires i < j");
    }

    Matrix embed(std::size_t n) const {
        if (j >= n) throw std::invalid_argument("PlanarRotation: index out of range");
        Matrix m = Matrix::identity(n);
        const double c = std::cos(theta), s = std::sin(theta);
        m(i, i) = c;
        m(i, j) = -s;
        m(j, i) = s;
        m(j, j) = c;
        return m;
    }

    PlanarRotation inverse() const { return PlanarRotation(i, j, -theta); }
};

/// Shear I + lambda * e_ij, i != j. Determinant exactly 1.
struct Transvection {
    std::size_t i = 0;
    std::size_t j = 1;
    double lambda = 0.0;

    Transvection() = default;
    Transvection(std::size_t i_, std::size_t j_, double lambda_) : i(i_), j(j_), lambda(lambda_) {
        if (i == j) throw std::invalid_argument("Transvection: requires i != j");
    }

    Matrix embed(std::size_t n) const {
        if (i >= n || j >= n) throw std::invalid_argument("Transvection: index out of range");
        Matrix m = Matrix::identity(n);
        m(i, j) = lambda;
        return m;
    }

    Transvection inverse() const { return Transvection(i, j, -lambda); }
};

/// The scalar matrix lambda * I.
struct ScalarDiagonal {
    double lambda = 1.0;

    Matrix embed(std::size_t n) const { return Matrix::identity(n) * lambda; }
};

enum class BlockPosition { UPPER, LOWER };

/// An SL(n-1) block embedded as diag(B, 1) (UPPER, coordinates 1..n-1) or
/// diag(1, B) (LOWER, coordinates 2..n).
struct BlockGenerator {
    BlockPosition position = BlockPosition::LOWER;
    Matrix b;

    BlockGenerator() = default;
    BlockGenerator(BlockPosition p, Matrix block) : position(p), b(std::move(block)) {}

    Matrix embed(std::size_t n) const {
        if (b.dim() + 1 != n) throw std::invalid_argument("BlockGenerator: block must be (n-1) x (n-1)");
        Matrix m = Matrix::identity(n);
        m.set_block(position == BlockPosition::UPPER ? 0 : 1,
                    position == BlockPosition::UPPER ? 0 : 1, b);
        return m;
    }

    BlockGenerator inverted() const { return BlockGenerator(position, agk::inverse(b)); }
};

/// A pair whose commutator [g, h] is the generator being witnessed.
template <typename T>
struct CommutatorPairT {
    T g;
    T h;
};

using CommutatorPair = CommutatorPairT<Matrix>;
using AffineCommutatorPair = CommutatorPairT<AffineElement>;

using GeneratorLetter =
    std::variant<PlanarRotation, BlockGenerator, Transvection, ScalarDiagonal, CommutatorPair>;

inline Matrix letter_matrix(const GeneratorLetter& letter, std::size_t n) {
    return std::visit(
        [n](const auto& l) -> Matrix {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, CommutatorPair>) {
                if (l.g.dim() != n) throw std::invalid_argument("CommutatorPair: dimension mismatch");
                return commutator(l.g, l.h);
            } else {
                return l.embed(n);
            }
        },
        letter);
}

/// Ordered list of tagged generators; evaluation is the left-to-right product
/// of the embedded letters.
struct GeneratorWord {
    std::vector<GeneratorLetter> letters;
    std::size_t target_dim = 0;

    explicit GeneratorWord(std::size_t n = 0) : target_dim(n) {}

    std::size_t size() const { return letters.size(); }

    Matrix evaluate() const {
        Matrix p = Matrix::identity(target_dim);
        for (const auto& l : letters) p = p * letter_matrix(l, target_dim);
        return p;
    }
};

}  // namespace agk
