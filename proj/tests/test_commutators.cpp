#include <catch2/catch_amalgamated.hpp>

#include "agk/commutators.hpp"
#include "agk/harness.hpp"

using namespace agk;

namespace {

Matrix evaluate_transvections(const std::vector<Transvection>& word, std::size_t n) {
    Matrix p = Matrix::identity(n);
    for (const Transvection& t : word) p = p * t.embed(n);
    return p;
}

AffineElement d_element(double x1, const Matrix& d) {
    const std::size_t n = d.dim() + 1;
    Matrix lin = Matrix::identity(n);
    lin.set_block(1, 1, d);
    Vec x(n, 0.0);
    x[0] = x1;
    return AffineElement(std::move(x), std::move(lin));
}

}  // namespace

TEST_CASE("transvection factorization examples") {
    CHECK(transvection_factorize(Matrix::identity(3), 1e-10).empty());

    const auto shear = transvection_factorize(Matrix{{1.0, 1.0}, {0.0, 1.0}}, 1e-10);
    REQUIRE(shear.size() == 1);
    CHECK(shear.front().i == 0);
    CHECK(shear.front().j == 1);
    CHECK(shear.front().lambda == 1.0);

    const auto rot = transvection_factorize(Matrix{{0.0, -1.0}, {1.0, 0.0}}, 1e-10);
    REQUIRE(rot.size() == 3);
    CHECK(rot[0].i == 0);
    CHECK(rot[0].lambda == -1.0);
    CHECK(rot[1].i == 1);
    CHECK(rot[1].lambda == 1.0);
    CHECK(rot[2].i == 0);
    CHECK(rot[2].lambda == -1.0);
    CHECK(distance(evaluate_transvections(rot, 2), Matrix{{0.0, -1.0}, {1.0, 0.0}}) < 1e-15);

    CHECK_THROWS_AS(transvection_factorize(Matrix::diagonal({2.0, 1.0}), 1e-10),
                    std::invalid_argument);
}

TEST_CASE("transvection factorization on random SL(n) with length bound") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const Matrix m = random_element(SampleClass::SL, n, seed);
            const auto word = transvection_factorize(m, 1e-10);
            INFO("n = " << n << " seed = " << seed << " len = " << word.size());
            CHECK(word.size() <= n * n + 4);
            CHECK(distance(evaluate_transvections(word, n), m) / m.frobenius() < 1e-10);
        }
    }
}

TEST_CASE("commutator witnesses for single transvections") {
    {
        const CommutatorPair p = commutator_witness_transvection(0, 1, 0.0, 3);
        CHECK(distance(commutator(p.g, p.h), Matrix::identity(3)) < 1e-15);
    }
    {
        // n = 3: [E13(5), E32(1)] = E12(5)
        const CommutatorPair p = commutator_witness_transvection(0, 1, 5.0, 3);
        CHECK(distance(p.g, Transvection(0, 2, 5.0).embed(3)) == 0.0);
        CHECK(distance(p.h, Transvection(2, 1, 1.0).embed(3)) == 0.0);
        CHECK(distance(commutator(p.g, p.h), Transvection(0, 1, 5.0).embed(3)) < 1e-14);
    }
    {
        // n = 2: conjugation by diag(2, 1/2) scales the shear by 4
        const CommutatorPair p = commutator_witness_transvection(0, 1, 3.0, 2);
        CHECK(distance(p.g, Matrix::diagonal({2.0, 0.5})) == 0.0);
        CHECK(distance(p.h, Transvection(0, 1, 1.0).embed(2)) == 0.0);
        CHECK(distance(commutator(p.g, p.h), Transvection(0, 1, 3.0).embed(2)) < 1e-14);
        const CommutatorPair q = commutator_witness_transvection(1, 0, 3.0, 2);
        CHECK(distance(commutator(q.g, q.h), Transvection(1, 0, 3.0).embed(2)) < 1e-14);
    }
    CHECK_THROWS_AS(commutator_witness_transvection(1, 1, 1.0, 3), std::invalid_argument);
}

TEST_CASE("commutator-product factorization of SL(n)") {
    CHECK(sl_commutator_factorize(Matrix::identity(3), 1e-10).empty());

    const auto one = sl_commutator_factorize(Matrix{{1.0, 1.0}, {0.0, 1.0}}, 1e-10);
    REQUIRE(one.size() == 1);
    CHECK(distance(commutator(one.front().g, one.front().h), Matrix{{1.0, 1.0}, {0.0, 1.0}}) <
          1e-14);

    for (std::size_t n : {2, 3, 5}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Matrix m = random_element(SampleClass::SL, n, seed);
            const auto pairs = sl_commutator_factorize(m, 1e-10);
            CHECK(distance(evaluate(pairs, n), m) / m.frobenius() < 1e-8);
            for (const auto& p : pairs) {
                CHECK(std::abs(det(p.g) - 1.0) < 1e-10);
                CHECK(std::abs(det(p.h) - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("closed-form commutator in the sign-flip centralizer family") {
    const CentralizerSpec spec{LemmaId::SIGN_FLIP, 5, DetClass::SL};
    const AffineElement g = sample(spec, {}, 12);
    CHECK(distance_to_identity(commutator_in_A(g, g)) < 1e-12);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const AffineElement a = sample(spec, {}, seed);
        const AffineElement b = sample(spec, {}, seed + 500);
        CHECK(distance(commutator_in_A(a, b), commutator(a, b)) < 1e-12);
    }
    CHECK_THROWS_AS(
        commutator_in_A(AffineElement(Vec(5, 1.0), Matrix::identity(5)), AffineElement::identity(5)),
        std::invalid_argument);
}

TEST_CASE("translation-and-block element as a product of commutators") {
    CHECK(express_D_element(0.0, Matrix::identity(2), 1e-10).empty());

    // pure translation needs only the half-scaling pair
    const double c = -0.4375;
    const auto pure = express_D_element(c, Matrix::identity(2), 1e-10);
    REQUIRE(pure.size() == 1);
    const AffineElement w = evaluate(pure, 3);
    CHECK(norm(w.translation - Vec{c, 0.0, 0.0}) < 1e-15);
    CHECK(distance(w.linear, Matrix::identity(3)) < 1e-15);

    const Matrix d{{1.0, 1.0}, {0.0, 1.0}};
    const auto pairs = express_D_element(1.0, d, 1e-10);
    CHECK(distance(evaluate(pairs, 3), d_element(1.0, d)) < 1e-10);
    for (const auto& p : pairs) {
        CHECK(std::abs(det(p.g.linear) * det(p.h.linear)) > 1e-10);
        const CentralizerSpec spec{LemmaId::SIGN_FLIP, 3, DetClass::GL};
        CHECK(membership(spec, p.g, 1e-8));
        CHECK(membership(spec, p.h, 1e-8));
    }

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Matrix b = random_element(SampleClass::SL, 4, seed);
        const double x1 = 2.0 * static_cast<double>(seed % 7) - 6.0;
        const auto word = express_D_element(x1, b, 1e-10);
        CHECK(distance(evaluate(word, 5), d_element(x1, b)) < 1e-10);
    }
    CHECK_THROWS_AS(express_D_element(1.0, Matrix::diagonal({2.0, 1.0}), 1e-10),
                    std::invalid_argument);
}

TEST_CASE("commutators of translation-and-block elements have block form") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        const AffineElement g = d_element(u(rng), random_element(SampleClass::SL, 4, seed));
        const AffineElement h = d_element(u(rng), random_element(SampleClass::SL, 4, seed + 99));
        const AffineElement c = commutator(g, h);
        CHECK(norm(c.translation) < 1e-12);
        CHECK(std::abs(c.linear(0, 0) - 1.0) < 1e-12);
        for (std::size_t i = 1; i < 5; ++i) {
            CHECK(std::abs(c.linear(0, i)) < 1e-12);
            CHECK(std::abs(c.linear(i, 0)) < 1e-12);
        }
        CHECK(std::abs(det(c.linear.block(1, 1, 4)) - 1.0) < 1e-10);
    }
}
