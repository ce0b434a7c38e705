#include <catch2/catch_amalgamated.hpp>

#include "agk/centralizers.hpp"
#include "agk/harness.hpp"

using namespace agk;

namespace {

bool commutes(const AffineElement& a, const AffineElement& b, double thresh) {
    return distance(mul(a, b), mul(b, a)) <= thresh;
}

}  // namespace

TEST_CASE("spec validation enforces dimension and class constraints") {
    CHECK_NOTHROW((CentralizerSpec{LemmaId::NEG_IDENTITY, 4, DetClass::SL}.validate()));
    CHECK_THROWS_AS((CentralizerSpec{LemmaId::NEG_IDENTITY, 3, DetClass::SL}.validate()),
                    std::invalid_argument);
    CHECK_NOTHROW((CentralizerSpec{LemmaId::NEG_IDENTITY, 3, DetClass::ABS_SL}.validate()));
    CHECK_THROWS_AS((CentralizerSpec{LemmaId::SIGN_FLIP, 4, DetClass::GL}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((CentralizerSpec{LemmaId::J_SL2, 3, DetClass::SL}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((CentralizerSpec{LemmaId::BLOCK_M, 3, DetClass::SL}.validate()),
                    std::invalid_argument);
}

TEST_CASE("membership: centralizer of -I is the zero-translation subgroup") {
    const CentralizerSpec spec{LemmaId::NEG_IDENTITY, 2, DetClass::GL};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Matrix a = random_element(SampleClass::GL, 2, seed);
        CHECK(membership(spec, AffineElement::linear_only(a), 1e-10));
    }
    CHECK_FALSE(membership(spec, AffineElement(Vec{1.0, 0.0}, Matrix::identity(2)), 1e-10));
}

TEST_CASE("membership: sign-flip centralizer closed form") {
    const CentralizerSpec spec{LemmaId::SIGN_FLIP, 3, DetClass::GL};
    CHECK(membership(spec, AffineElement::identity(3), 1e-10));
    // nonzero tail translation breaks membership
    CHECK_FALSE(membership(spec, AffineElement(Vec{0.0, 0.1, 0.0}, Matrix::identity(3)), 1e-10));
    // off-diagonal block breaks membership
    Matrix off = Matrix::identity(3);
    off(0, 2) = 0.5;
    CHECK_FALSE(membership(spec, AffineElement::linear_only(off), 1e-10));
}

TEST_CASE("sampled members pass membership and commute with the defining elements") {
    const std::vector<CentralizerSpec> specs = {
        {LemmaId::NEG_IDENTITY, 3, DetClass::GL}, {LemmaId::SIGN_FLIP, 3, DetClass::SL},
        {LemmaId::SIGN_FLIP, 5, DetClass::GL},    {LemmaId::SCALAR, 3, DetClass::GL},
        {LemmaId::J_SL2, 2, DetClass::SL},        {LemmaId::BLOCK_M, 4, DetClass::SL},
        {LemmaId::BLOCK_M, 5, DetClass::GL_PLUS}};
    for (const auto& spec : specs) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const AffineElement g = sample(spec, {}, seed);
            INFO("lemma " << static_cast<int>(spec.lemma) << " n " << spec.n << " seed " << seed);
            CHECK(membership(spec, g, 1e-8));
            for (const AffineElement& d : defining_elements(spec)) CHECK(commutes(g, d, 1e-10));
        }
    }
}

TEST_CASE("explicit sample parameters") {
    // sign-flip with x1 = 0, lambda = 1, A = I is the identity
    const CentralizerSpec sf{LemmaId::SIGN_FLIP, 3, DetClass::SL};
    const AffineElement id = sample(sf, Vec{0.0, 1.0, 1.0, 0.0, 0.0, 1.0}, 0);
    CHECK(distance_to_identity(id) == 0.0);

    // SL class with lambda = 1/2 requires det(A) = 2
    CHECK_NOTHROW(sample(sf, Vec{0.3, 0.5, 2.0, 0.0, 0.0, 1.0}, 0));
    CHECK_THROWS_AS(sample(sf, Vec{0.3, 0.5, 1.0, 0.0, 0.0, 1.0}, 0), std::invalid_argument);

    // the rotation parametrization of the J centralizer
    const CentralizerSpec j{LemmaId::J_SL2, 2, DetClass::SL};
    const AffineElement rot = sample(j, Vec{0.5}, 0);
    CHECK(std::abs(rot.linear(0, 0) - std::cos(0.5)) < 1e-15);
    CHECK(std::abs(rot.linear(1, 0) - std::sin(0.5)) < 1e-15);
    CHECK(std::abs(rot.linear(0, 1) + std::sin(0.5)) < 1e-15);
}

TEST_CASE("commutant oracle dimensions match the closed forms") {
    // everything commutes with the identity
    for (std::size_t n = 2; n <= 4; ++n)
        CHECK(commutant_basis({Matrix::identity(n)}, 1e-8).dim == n * n);

    // only scalars commute with all transvections
    const CommutantBasis scalar =
        commutant_basis({Transvection(0, 1, 1.0).embed(2), Transvection(1, 0, 1.0).embed(2)}, 1e-8);
    REQUIRE(scalar.dim == 1);
    const Matrix& x = scalar.basis.front();
    CHECK(std::abs(x(0, 0) - x(1, 1)) < 1e-10);
    CHECK(std::abs(x(0, 1)) < 1e-10);
    CHECK(std::abs(x(1, 0)) < 1e-10);

    // the rotation-form commutant of J is two-dimensional
    const Matrix j{{0.0, -1.0}, {1.0, 0.0}};
    const CommutantBasis cj = commutant_basis({j}, 1e-8);
    REQUIRE(cj.dim == 2);
    for (const Matrix& b : cj.basis) {
        CHECK(distance(b * j, j * b) < 1e-8);
        CHECK(std::abs(b(0, 0) - b(1, 1)) < 1e-10);
        CHECK(std::abs(b(0, 1) + b(1, 0)) < 1e-10);
    }
}

TEST_CASE("commutant of the embedded lower-block transvection set has dimension 5") {
    for (std::size_t n = 4; n <= 6; ++n) {
        const CentralizerSpec spec{LemmaId::BLOCK_M, n, DetClass::GL};
        std::vector<Matrix> gens;
        for (const AffineElement& e : defining_elements(spec)) gens.push_back(e.linear);
        const CommutantBasis cb = commutant_basis(gens, 1e-8);
        INFO("n = " << n);
        CHECK(cb.dim == 5);
        for (const Matrix& b : cb.basis)
            for (const Matrix& g : gens) CHECK(distance(b * g, g * b) < 1e-8);
    }
}

TEST_CASE("commutant oracle rejects an empty generating set") {
    CHECK_THROWS_AS(commutant_basis({}, 1e-8), std::invalid_argument);
}

TEST_CASE("non-commuting translation witness") {
    CHECK(noncommuting_translation_witness(Matrix::diagonal({2.0, 1.0}), 1e-10) ==
          unit_vector(2, 0));
    const Vec w = noncommuting_translation_witness(Matrix::identity(2) * -1.0, 1e-10);
    CHECK(w == unit_vector(2, 0));
    CHECK_THROWS_AS(noncommuting_translation_witness(Matrix::identity(2), 1e-10),
                    std::domain_error);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Matrix a = random_element(SampleClass::GL, 3, seed);
        if (distance(a, Matrix::identity(3)) <= 1e-8) continue;
        const Vec y = noncommuting_translation_witness(a, 1e-8);
        CHECK(norm(a * y - y) > 1e-8);
        const AffineElement t = AffineElement::translation_only(y);
        const AffineElement g(Vec{0.1, 0.2, -0.3}, a);
        CHECK(distance_to_identity(commutator(t, g)) > 1e-8);
    }
}

TEST_CASE("membership equivalence with brute-force commutation") {
    const CentralizerSpec spec{LemmaId::SIGN_FLIP, 3, DetClass::GL};
    const AffineElement flip = defining_elements(spec).front();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const AffineElement member = sample(spec, {}, seed);
        CHECK(commutes(member, flip, 1e-10));
        const AffineElement generic = random_affine(SampleClass::GL, 3, seed, 1.0);
        CHECK(membership(spec, generic, 1e-8) == commutes(generic, flip, 1e-8));
    }
}
