#include <doctest.h>

#include "mtcat/ribbon_modular.hpp"
#include "support.hpp"

using namespace mtcat;

TEST_CASE("identity gauge leaves data bit-for-bit unchanged")
{
    for (const auto& data : {support::fibonacci(), support::ising(), support::su2(3)}) {
        CHECK(gauge_transform(data, GaugeTransform{}) == data);
        GaugeTransform g;
        g.blocks[{1, 1, 0}] = MatrixXc::Identity(1, 1);
        CHECK(gauge_transform(data, g) == data);
    }
}

TEST_CASE("random diagonal gauge on Fibonacci keeps the pentagon")
{
    const auto fib = support::fibonacci();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = random_gauge(fib.ring, seed);
        const auto moved = gauge_transform(fib, g);
        CHECK(pentagon_residual(moved).value < 1e-10);
        CHECK(hexagon_residual(moved, BraidDirection::braid).value < 1e-10);
        CHECK(hexagon_residual(moved, BraidDirection::inverse_braid).value < 1e-10);
    }
}

TEST_CASE("random gauges actually move gauge-dependent entries")
{
    const auto fib = support::fibonacci();
    const auto moved = gauge_transform(fib, random_gauge(fib.ring, 7));
    const FKey off{1, 1, 1, 1, 0, 1};
    CHECK(std::abs(moved.F.at(off) - fib.F.at(off)) > 1e-3);
}

TEST_CASE("Ising rigidity scalar is gauge invariant")
{
    const auto is = support::ising();
    const Complex before = rigidity_scalar(is, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto moved = gauge_transform(is, random_gauge(is.ring, seed));
        CHECK(std::abs(rigidity_scalar(moved, 1) - before) < 1e-10);
    }
}

TEST_CASE("gauge invariance of dims, twists and S on catalog entries")
{
    for (const auto& spec : catalog_specs(4, 4)) {
        const auto data = generate(spec);
        const auto moved = gauge_transform(data, random_gauge(data.ring, 42));
        CHECK(support::max_diff(quantum_dimensions(data), quantum_dimensions(moved)) < 1e-9);
        CHECK(support::max_diff(twists_from_braiding(data), twists_from_braiding(moved)) < 1e-9);
        CHECK(support::max_diff(s_matrix_unnormalized(data).entries, s_matrix_unnormalized(moved).entries) < 1e-9);
    }
}

TEST_CASE("random_gauge is deterministic in the seed")
{
    const auto is = support::ising();
    CHECK(gauge_transform(is, random_gauge(is.ring, 3)) == gauge_transform(is, random_gauge(is.ring, 3)));
}

TEST_CASE("gauge_transform rejects bad blocks")
{
    const auto fib = support::fibonacci();
    GaugeTransform unit;
    unit.blocks[{0, 1, 1}] = MatrixXc::Constant(1, 1, Complex(0, 1));
    CHECK_THROWS_AS(gauge_transform(fib, unit), InputError);

    GaugeTransform shape;
    shape.blocks[{1, 1, 1}] = MatrixXc::Identity(2, 2);
    CHECK_THROWS_AS(gauge_transform(fib, shape), InputError);

    GaugeTransform singular;
    singular.blocks[{1, 1, 1}] = MatrixXc::Zero(1, 1);
    CHECK_THROWS_AS(gauge_transform(fib, singular), InputError);
}
