#include <catch2/catch_amalgamated.hpp>

#include "agk/affine.hpp"
#include "agk/harness.hpp"
#include "agk/matrix.hpp"

using namespace agk;

TEST_CASE("group law on identity and hand-evaluated products") {
    const AffineElement id = AffineElement::identity(2);
    const AffineElement g(Vec{1.0, 0.0}, Matrix::diagonal({2.0, 0.5}));
    CHECK(distance(mul(id, g), g) == 0.0);
    CHECK(distance(mul(g, id), g) == 0.0);

    // ((1,0), diag(2,1/2)) * ((0,1), I) = ((1,1/2), diag(2,1/2))
    const AffineElement h = AffineElement::translation_only(Vec{0.0, 1.0});
    const AffineElement p = mul(g, h);
    CHECK(p.translation == Vec{1.0, 0.5});
    CHECK(distance(p.linear, Matrix::diagonal({2.0, 0.5})) == 0.0);
}

TEST_CASE("sign-flip matrix acts by negating the tail coordinates") {
    const Matrix s = Matrix::diagonal({1.0, -1.0, -1.0});
    const AffineElement flip = AffineElement::linear_only(s);
    const Vec x{0.7, -0.2, 1.3};
    CHECK(act(flip, x) == Vec{0.7, 0.2, -1.3});

    const Matrix m = random_element(SampleClass::GL, 3, 11);
    const AffineElement g(x, m);
    const AffineElement prod = mul(flip, g);
    CHECK(prod.translation == Vec{0.7, 0.2, -1.3});
    CHECK(distance(prod.linear, s * m) == 0.0);
}

TEST_CASE("inverse closed form and round trip") {
    CHECK(distance_to_identity(inv(AffineElement::identity(3))) == 0.0);

    const AffineElement g(Vec{1.0, 0.0}, Matrix::diagonal({2.0, 0.5}));
    const AffineElement gi = inv(g);
    CHECK(norm(gi.translation - Vec{-0.5, 0.0}) < 1e-15);
    CHECK(distance(gi.linear, Matrix::diagonal({0.5, 2.0})) < 1e-15);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        AffineElement r = random_affine(SampleClass::SPECIAL_ORTHOGONAL, 4, seed, 2.0);
        CHECK(distance_to_identity(mul(r, inv(r))) < 1e-12);
        r = random_affine(SampleClass::GL, 4, seed, 2.0);
        CHECK(distance_to_identity(mul(r, inv(r))) < 1e-10);
    }
}

TEST_CASE("group axioms on random elements") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const AffineElement g = random_affine(SampleClass::SPECIAL_ORTHOGONAL, 3, seed, 1.0);
        const AffineElement h = random_affine(SampleClass::SPECIAL_ORTHOGONAL, 3, seed + 100, 1.0);
        const AffineElement k = random_affine(SampleClass::SPECIAL_ORTHOGONAL, 3, seed + 200, 1.0);
        CHECK(distance(mul(mul(g, h), k), mul(g, mul(h, k))) < 1e-12);
        const Vec p{0.1, -0.5, 0.9};
        CHECK(norm(act(mul(g, h), p) - act(g, act(h, p))) < 1e-12);
    }
}

TEST_CASE("self-commutator is the identity") {
    const AffineElement g = random_affine(SampleClass::GL, 3, 5, 1.0);
    CHECK(distance_to_identity(commutator(g, g)) < 1e-12);
}

TEST_CASE("half-scaling commutator pair produces a pure translation") {
    // lambda = lambda' = 1/2, x = c, x' = -c, A = A' = diag(2, 1):
    // the commutator is ((c, 0, 0), I).
    const double c = 0.8125;
    Matrix lin = Matrix::identity(3);
    lin(0, 0) = 0.5;
    lin(1, 1) = 2.0;
    const AffineElement g(Vec{c, 0.0, 0.0}, lin);
    const AffineElement h(Vec{-c, 0.0, 0.0}, lin);
    const AffineElement w = commutator(g, h);
    CHECK(norm(w.translation - Vec{c, 0.0, 0.0}) < 1e-15);
    CHECK(distance(w.linear, Matrix::identity(3)) < 1e-15);
}

TEST_CASE("determinant classification") {
    const double tol = 1e-9;
    CHECK(classify(Matrix::identity(2), tol) ==
          std::set<DetClass>{DetClass::GL, DetClass::SL, DetClass::ABS_SL, DetClass::GL_PLUS});
    CHECK(classify(Matrix::diagonal({-1.0, 1.0}), tol) ==
          std::set<DetClass>{DetClass::GL, DetClass::ABS_SL});
    CHECK(classify(Matrix::diagonal({2.0, 1.0}), tol) ==
          std::set<DetClass>{DetClass::GL, DetClass::GL_PLUS});
    CHECK_THROWS_AS(classify(Matrix::identity(2), 0.0), std::invalid_argument);
}

TEST_CASE("classification is monotone in tol and respects class inclusions") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Matrix a = random_element(SampleClass::GL, 3, seed);
        const auto tight = classify(a, 1e-12);
        const auto loose = classify(a, 1e-6);
        for (DetClass c : {DetClass::SL, DetClass::ABS_SL}) {
            if (tight.count(c)) CHECK(loose.count(c));
        }
        const auto cls = classify(a, 1e-9);
        if (cls.count(DetClass::SL)) CHECK(cls.count(DetClass::ABS_SL));
        if (cls.count(DetClass::ABS_SL)) CHECK(cls.count(DetClass::GL));
        if (cls.count(DetClass::GL_PLUS)) CHECK(cls.count(DetClass::GL));
    }
}

TEST_CASE("affine action examples") {
    CHECK(act(AffineElement::identity(2), Vec{3.0, -1.0}) == Vec{3.0, -1.0});
    const AffineElement shift(Vec{1.0, 1.0}, Matrix::identity(2));
    CHECK(act(shift, Vec{2.0, 3.0}) == Vec{3.0, 4.0});
    CHECK_THROWS_AS(act(shift, Vec{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("dimension mismatches and singular inputs are rejected") {
    const AffineElement g2 = AffineElement::identity(2);
    const AffineElement g3 = AffineElement::identity(3);
    CHECK_THROWS_AS(mul(g2, g3), std::invalid_argument);
    CHECK_THROWS_AS(inv(AffineElement::linear_only(Matrix(2))), std::domain_error);
    CHECK_THROWS_AS(AffineElement(Vec{1.0}, Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("determinant and inverse oracles") {
    CHECK(det(Matrix::diagonal({2.0, 3.0, 4.0})) == 24.0);
    CHECK(det(Matrix{{0.0, -1.0}, {1.0, 0.0}}) == 1.0);
    CHECK_FALSE(is_invertible(Matrix(3)));
    const Matrix a = random_element(SampleClass::GL, 4, 77);
    CHECK(distance(a * inverse(a), Matrix::identity(4)) < 1e-10);
}
