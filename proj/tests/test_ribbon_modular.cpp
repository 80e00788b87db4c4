#include <doctest.h>

#include "mtcat/ribbon_modular.hpp"
#include "support.hpp"

using namespace mtcat;
using support::phi;

TEST_CASE("quantum dimensions")
{
    CHECK(std::abs(quantum_dimension(support::trivial(), 0) - 1.0) < 1e-15);
    CHECK(std::abs(quantum_dimension(support::fibonacci(), 1) - phi) < 1e-12);
    CHECK(std::abs(quantum_dimension(support::ising(), 1) - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(quantum_dimension(support::ising(), 2) - 1.0) < 1e-12);
    // Frobenius-Schur sign: |d| = FPdim = 1 but d = -1.
    CHECK(std::abs(quantum_dimension(support::semion(), 1) + 1.0) < 1e-12);
}

TEST_CASE("twists")
{
    CHECK(std::abs(twist_from_braiding(support::trivial(), 0) - 1.0) < 1e-15);

    // phi^-1 (R[tau,tau,1] + phi R[tau,tau,tau]) evaluated by hand
    const Complex fib_by_hand = (expi(-4 * kPi / 5) + phi * expi(3 * kPi / 5)) / phi;
    CHECK(std::abs(fib_by_hand - expi(4 * kPi / 5)) < 1e-12);
    CHECK(std::abs(twist_from_braiding(support::fibonacci(), 1) - fib_by_hand) < 1e-12);

    const auto is = support::ising();
    CHECK(std::abs(twist(is, 1) - expi(kPi / 8)) < 1e-12);
    CHECK(std::abs(twist(is, 2) + 1.0) < 1e-12);
    CHECK(std::abs(twist(support::semion(), 1) - Complex(0, -1)) < 1e-12);
}

TEST_CASE("twist cross-checks weights")
{
    auto is = support::ising();
    (*is.weights)[1] = 0.1;
    CHECK_THROWS_AS(twist(is, 1), WeightsInconsistent);
    CHECK_NOTHROW(twist_from_braiding(is, 1));
}

TEST_CASE("monodromy")
{
    const auto fib = support::fibonacci();
    CHECK(std::abs(monodromy(fib, 0, 1, 1)(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(monodromy(fib, 1, 1, 0)(0, 0) - expi(-8 * kPi / 5)) < 1e-12);
    CHECK(std::abs(monodromy(fib, 1, 1, 1)(0, 0) - expi(6 * kPi / 5)) < 1e-12);
}

TEST_CASE("ribbon residual")
{
    CHECK(ribbon_residual(support::trivial()) < 1e-15);
    CHECK(ribbon_residual(support::fibonacci()) < 1e-12);
    VectorXc bad(2);
    bad << 1, 1;
    CHECK(ribbon_residual(support::fibonacci(), bad) >= 0.5);
}

TEST_CASE("S-matrices")
{
    CHECK(support::max_diff(s_matrix_unnormalized(support::trivial()).entries, MatrixXc::Ones(1, 1)) < 1e-15);

    MatrixXc fib(2, 2);
    fib << 1, phi, phi, -1;
    const auto s1 = s_matrix_unnormalized(support::fibonacci());
    const auto s2 = s_matrix_balanced(support::fibonacci());
    CHECK(support::max_diff(s1.entries, fib) < 1e-12);
    CHECK(support::max_diff(s1.entries, s2.entries) < 1e-10);

    const double r2 = std::sqrt(2.0);
    MatrixXc is(3, 3);
    is << 1, r2, 1, r2, 0, -r2, 1, -r2, 1;
    CHECK(support::max_diff(s_matrix_balanced(support::ising()).entries, is) < 1e-12);
    CHECK(support::max_diff(s_matrix_unnormalized(support::ising()).entries, is) < 1e-12);

    CHECK(support::max_diff(s_matrix_unnormalized(support::rep_z2()).entries, MatrixXc::Ones(2, 2)) < 1e-15);

    const auto n = normalize(s1, std::sqrt(1 + phi * phi));
    CHECK(n.normalization == SNormalization::normalized);
    CHECK(support::max_diff(n.entries * n.entries.adjoint(), MatrixXc::Identity(2, 2)) < 1e-12);
}

TEST_CASE("T-matrix")
{
    CHECK(std::abs(t_matrix(support::trivial())[0] - 1.0) < 1e-15);
    const auto t = t_matrix(support::ising());
    const Complex base = expi(-kPi / 24);
    CHECK(std::abs(t[0] - base) < 1e-12);
    CHECK(std::abs(t[1] - base * expi(kPi / 8)) < 1e-12);
    CHECK(std::abs(t[2] - base * expi(kPi)) < 1e-12);
    CHECK(std::abs(t_matrix(support::fibonacci())[0] - expi(-2 * kPi * 14 / 120)) < 1e-12);

    auto no_c = support::ising();
    no_c.central_charge.reset();
    CHECK_THROWS_AS(t_matrix(no_c), InputError);
}

TEST_CASE("charge conjugation")
{
    const MatrixXc c = charge_conjugation(support::pointed(3, 2).ring);
    MatrixXc expect = MatrixXc::Zero(3, 3);
    expect(0, 0) = expect(1, 2) = expect(2, 1) = 1;
    CHECK(support::max_diff(c, expect) == 0.0);
}

TEST_CASE("check_modular verdicts")
{
    const auto fib = check_modular(support::fibonacci());
    CHECK(fib.verdict == Verdict::modular);
    for (const auto& [name, value] : fib.residuals)
        if (name != "rigidity_min_modulus")
            CHECK_MESSAGE(value < 1e-9, name);

    const auto rep = check_modular(support::rep_z2());
    CHECK(rep.verdict == Verdict::degenerate);
    CHECK(std::abs(rep.s_determinant) < 1e-12);

    const auto triv = check_modular(support::trivial());
    CHECK(triv.verdict == Verdict::modular);
    CHECK(support::max_diff(triv.s_norm.entries, MatrixXc::Ones(1, 1)) < 1e-15);

    auto broken = support::fibonacci();
    broken.F[FKey{1, 1, 1, 1, 0, 0}] += 1e-3;
    CHECK(check_modular(broken).verdict == Verdict::incoherent);
}

TEST_CASE("Ising Gauss sums give c = 1/2")
{
    const auto r = check_modular(support::ising());
    CHECK(r.global_dim_sq == doctest::Approx(4.0));
    const Complex p_plus = r.gauss_sums.first;
    CHECK(std::abs(std::abs(p_plus) - 2.0) < 1e-12);
    CHECK(std::abs(p_plus / std::abs(p_plus) - expi(2 * kPi * 0.5 / 8)) < 1e-12);
    CHECK(r.residuals.at("central_charge") < 1e-12);
    CHECK(r.residuals.at("st_cubed") < 1e-12);
    CHECK(r.residuals.at("s_squared_charge_conjugation") < 1e-12);
}
