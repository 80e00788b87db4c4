#include <doctest.h>

#include "mtcat/ribbon_modular.hpp"
#include "support.hpp"

using namespace mtcat;
using support::phi;

TEST_CASE("parse_family")
{
    CHECK(parse_family("fibonacci") == Family::fibonacci);
    CHECK(parse_family("su2_level") == Family::su2_level);
    CHECK(std::string(to_string(Family::pointed_zn)) == "pointed_zn");
    CHECK_THROWS_AS(parse_family("e8"), InputError);
}

TEST_CASE("generate rejects unsupported parameters")
{
    CHECK_THROWS_AS(generate({Family::pointed_zn, 3, 1}), InputError);  // q n odd
    CHECK_THROWS_AS(generate({Family::pointed_zn, 0, 0}), InputError);
    CHECK_THROWS_AS(support::su2(13), InputError);
    CHECK_THROWS_AS(support::su2(-1), InputError);
}

TEST_CASE("su2 level 0 is trivial")
{
    const auto d = support::su2(0);
    CHECK(d.rank() == 1);
    CHECK(d.F.size() == 1);
    CHECK(d.R.size() == 1);
}

TEST_CASE("su2 level 1")
{
    const auto d = support::su2(1);
    CHECK(d.rank() == 2);
    const auto dims = quantum_dimensions(d);
    CHECK(std::abs(std::abs(dims[1]) - 1.0) < 1e-12);
    CHECK(std::abs(twist(d, 1) - Complex(0, 1)) < 1e-12);
    CHECK((*d.weights)[1] == doctest::Approx(0.25));
}

TEST_CASE("su2 level 2 has Ising fusion rules")
{
    const auto d = support::su2(2);
    const auto is = support::ising();
    CHECK(d.ring.multiplicities() == is.ring.multiplicities());
    const auto dims = quantum_dimensions(d);
    CHECK(std::abs(std::abs(dims[1]) - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(dims[2] - 1.0) < 1e-12);
}

TEST_CASE("quantum integers")
{
    CHECK(su2::quantum_integer(2, 2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(su2::quantum_integer(3, 3) == doctest::Approx(phi));
    CHECK(su2::quantum_integer(3, 5) == 0.0);
    CHECK(su2::quantum_integer(5, 1) == doctest::Approx(1.0));
}

TEST_CASE("q-Racah 6j symbols")
{
    for (int k = 0; k <= 12; ++k)
        CHECK(su2::q_racah_6j(k, 0, 0, 0, 0, 0, 0) == doctest::Approx(1.0));
    // {1/2 1/2 0; 1/2 1/2 0} = -1/[2]
    CHECK(su2::q_racah_6j(2, 1, 1, 0, 1, 1, 0) == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK_THROWS_AS(su2::q_racah_6j(2, 1, 1, 1, 1, 1, 0), InputError);

    // Unit-unit fusing entries; the spin-1/2 sign is the Frobenius-Schur indicator.
    CHECK(std::abs(su2::fusing_entry(2, 1, 1, 1, 1, 0, 0)) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(su2::fusing_entry(2, 1, 1, 1, 1, 0, 0) == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(su2::fusing_entry(3, 2, 2, 2, 2, 0, 0) == doctest::Approx(1 / phi));
}

TEST_CASE("su2 fusing blocks are orthogonal")
{
    for (int k = 1; k <= 6; ++k) {
        const auto d = support::su2(k);
        for (Label a = 0; a <= k; ++a)
            for (Label b = 0; b <= k; ++b)
                for (Label c = 0; c <= k; ++c)
                    for (Label x = 0; x <= k; ++x) {
                        if (block_layout(d.ring, a, b, c, x).dim == 0)
                            continue;
                        const MatrixXc m = f_matrix(d, a, b, c, x).matrix;
                        CHECK(support::max_diff(m * m.adjoint(), MatrixXc::Identity(m.rows(), m.rows())) < 1e-12);
                    }
    }
}

TEST_CASE("su2 twists match weights up to level 12")
{
    for (int k = 1; k <= 12; ++k) {
        const auto d = support::su2(k);
        const auto t = twists_from_braiding(d);
        for (int j = 0; j <= k; ++j) {
            const double h = j * (j + 2.0) / (4.0 * (k + 2));
            CHECK(std::abs(t[j] - expi(2 * kPi * h)) < 1e-9);
        }
    }
}

TEST_CASE("su2 levels 1..12 are modular")
{
    for (int k = 1; k <= 12; ++k)
        CHECK_MESSAGE(check_modular(support::su2(k)).verdict == Verdict::modular, "level ", k);
}

TEST_CASE("pointed weights and central charge")
{
    // Z3 with q = 2: h = (0, 1/3, 1/3), c = 2.
    const auto z3 = support::pointed(3, 2);
    CHECK((*z3.weights)[1] == doctest::Approx(1.0 / 3));
    CHECK((*z3.weights)[2] == doctest::Approx(1.0 / 3));
    CHECK(*z3.central_charge == doctest::Approx(2.0));
    CHECK(check_modular(z3).verdict == Verdict::modular);
}

TEST_CASE("catalog coherence")
{
    for (const auto& spec : catalog_specs(5, 6)) {
        const auto d = generate(spec);
        INFO(d.name);
        CHECK(pentagon_residual(d).value < 1e-12);
        CHECK(hexagon_residual(d, BraidDirection::braid).value < 1e-12);
        CHECK(hexagon_residual(d, BraidDirection::inverse_braid).value < 1e-12);
        CHECK(triangle_residual(d) < 1e-14);
        CHECK(ribbon_residual(d) < 1e-12);
    }
}
