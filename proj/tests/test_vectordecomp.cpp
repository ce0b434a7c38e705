#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "agk/factorization.hpp"
#include "agk/vectordecomp.hpp"

using namespace agk;

TEST_CASE("unit sum decomposition boundary and symmetry cases") {
    // on the radius-2 sphere both halves coincide with x/2
    const Vec x2{2.0, 0.0, 0.0};
    const SphereSumWitness b = unit_sum_decompose(x2, 1e-12);
    CHECK(norm(b.y - Vec{1.0, 0.0, 0.0}) < 1e-12);
    CHECK(norm(b.z - Vec{1.0, 0.0, 0.0}) < 1e-12);

    // the origin splits into +/- e1
    const SphereSumWitness o = unit_sum_decompose(Vec{0.0, 0.0}, 1e-12);
    CHECK(o.y == Vec{1.0, 0.0});
    CHECK(o.z == Vec{-1.0, 0.0});
    CHECK(o.radius == 1.0);
}

TEST_CASE("unit sum decomposition closed-form example") {
    // x = (1, 0): a = sqrt(3), v = (0, 1)
    const SphereSumWitness w = unit_sum_decompose(Vec{1.0, 0.0}, 1e-12);
    CHECK(std::abs(w.y[0] - 0.5) < 1e-15);
    CHECK(std::abs(w.y[1] - std::sqrt(3.0) / 2.0) < 1e-15);
    CHECK(std::abs(w.z[0] - 0.5) < 1e-15);
    CHECK(std::abs(w.z[1] + std::sqrt(3.0) / 2.0) < 1e-15);
}

TEST_CASE("unit sum decomposition random sweep") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 300; ++trial) {
            Vec x(n);
            for (double& v : x) v = nd(rng);
            x = (u(rng) / norm(x)) * x;
            const SphereSumWitness w = unit_sum_decompose(x, 1e-12);
            CHECK(std::abs(norm(w.y) - 1.0) < 1e-12);
            CHECK(std::abs(norm(w.z) - 1.0) < 1e-12);
            CHECK(norm(w.y + w.z - x) < 1e-12);
            // y - z is a multiple of the orthogonal direction v
            CHECK(std::abs(dot(w.y - w.z, x)) < 1e-12 * std::max(1.0, norm(x)));
        }
    }
}

TEST_CASE("unit sum decomposition rejects bad input") {
    CHECK_THROWS_AS(unit_sum_decompose(Vec{3.0, 0.0}, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(unit_sum_decompose(Vec{1.0}, 1e-12), std::invalid_argument);
    // slightly-over-the-boundary input is clamped
    CHECK_NOTHROW(unit_sum_decompose(Vec{2.0 + 5e-13, 0.0}, 1e-12));
}

TEST_CASE("ball decomposition scales the sphere form") {
    const SphereSumWitness o = ball_sum_decompose(Vec{0.0, 0.0}, 1.0, 1e-12);
    CHECK(o.y == Vec{0.5, 0.0});
    CHECK(o.z == Vec{-0.5, 0.0});
    CHECK(o.radius == 0.5);

    const Vec x{0.3, 0.4};
    const SphereSumWitness w = ball_sum_decompose(x, 1.0, 1e-12);
    CHECK(std::abs(norm(w.y) - 0.5) < 1e-12);
    CHECK(std::abs(norm(w.z) - 0.5) < 1e-12);
    CHECK(norm(w.y + w.z - x) < 1e-12);

    // boundary: ||x|| = delta gives y = z = x/2
    const SphereSumWitness b = ball_sum_decompose(Vec{0.0, 2.5}, 2.5, 1e-12);
    CHECK(norm(b.y - Vec{0.0, 1.25}) < 1e-12);
    CHECK(norm(b.z - Vec{0.0, 1.25}) < 1e-12);

    CHECK_THROWS_AS(ball_sum_decompose(Vec{3.0, 0.0}, 1.0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(ball_sum_decompose(Vec{0.0, 0.0}, -1.0, 1e-12), std::invalid_argument);
}

TEST_CASE("ball witnesses are reachable from a fixed base point by rotations") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> nd;
    for (double delta : {0.1, 1.0, 10.0}) {
        std::uniform_real_distribution<double> u(0.0, delta);
        for (int trial = 0; trial < 100; ++trial) {
            Vec x(3);
            for (double& v : x) v = nd(rng);
            x = (u(rng) / norm(x)) * x;
            const SphereSumWitness w = ball_sum_decompose(x, delta, 1e-12);
            const Vec x0 = (delta / 2.0) * unit_vector(3, 0);
            const Matrix ry = sphere_orbit_witness(x0, w.y, 1e-11);
            const Matrix rz = sphere_orbit_witness(x0, w.z, 1e-11);
            CHECK(norm(ry * x0 - w.y) < 1e-10 * std::max(1.0, delta));
            CHECK(norm(rz * x0 - w.z) < 1e-10 * std::max(1.0, delta));
        }
    }
}
