#include "mtcat/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mtcat {

FusionRing::FusionRing(std::vector<std::string> names, std::vector<Label> dual, std::vector<int> multiplicities)
    : names_(std::move(names)), dual_(std::move(dual)), mult_(std::move(multiplicities))
{
    const auto m = names_.size();
    if (m == 0)
        throw InputError("fusion ring needs at least the unit label");
    if (dual_.size() != m)
        throw InputError("duality permutation has " + std::to_string(dual_.size()) + " entries, expected "
                         + std::to_string(m));
    if (mult_.size() != m * m * m)
        throw InputError("multiplicity tensor has " + std::to_string(mult_.size()) + " entries, expected "
                         + std::to_string(m * m * m));
}

Label FusionRing::checked(Label a) const
{
    if (!contains(a))
        throw InputError("unknown label index " + std::to_string(a) + " (rank " + std::to_string(rank()) + ")");
    return a;
}

int FusionRing::at(Label a, Label b, Label c) const
{
    checked(a);
    checked(b);
    checked(c);
    return N(a, b, c);
}

ValidationReport validate_ring(const FusionRing& ring)
{
    ValidationReport report;
    const int m = ring.rank();
    auto fail = [&](std::string inv, std::vector<int> witness, std::string msg) {
        report.violations.push_back({std::move(inv), std::move(witness), std::move(msg)});
    };

    bool dual_in_range = true;
    for (Label a = 0; a < m; ++a) {
        const Label d = ring.duals()[a];
        if (d < 0 || d >= m) {
            fail("dual_range", {a}, "dual(" + std::to_string(a) + ") = " + std::to_string(d) + " out of range");
            dual_in_range = false;
        }
    }
    if (dual_in_range) {
        if (ring.dual(kUnit) != kUnit)
            fail("dual_unit", {kUnit}, "dual(e) must be e");
        for (Label a = 0; a < m; ++a)
            if (ring.dual(ring.dual(a)) != a)
                fail("dual_involution", {a}, "dual(dual(a)) != a");
    }

    for (std::size_t i = 0; i < ring.multiplicities().size(); ++i) {
        if (ring.multiplicities()[i] < 0) {
            const int a = static_cast<int>(i) / (m * m), b = (static_cast<int>(i) / m) % m, c = static_cast<int>(i) % m;
            fail("nonnegative", {a, b, c}, "negative multiplicity");
        }
    }

    for (Label a = 0; a < m; ++a)
        for (Label c = 0; c < m; ++c) {
            const int expect = a == c ? 1 : 0;
            if (ring.N(kUnit, a, c) != expect)
                fail("unit_left", {a, c}, "N[e,a,c] != delta(a,c)");
            if (ring.N(a, kUnit, c) != expect)
                fail("unit_right", {a, c}, "N[a,e,c] != delta(a,c)");
        }

    if (dual_in_range)
        for (Label a = 0; a < m; ++a)
            for (Label b = 0; b < m; ++b)
                if (ring.N(a, b, kUnit) != (b == ring.dual(a) ? 1 : 0)) {
                    fail("duality", {a}, "N[a,b,e] != delta(b,dual(a)) at b = " + std::to_string(b));
                    break;
                }

    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                for (Label d = 0; d < m; ++d) {
                    long lhs = 0, rhs = 0;
                    for (Label x = 0; x < m; ++x) {
                        lhs += static_cast<long>(ring.N(a, b, x)) * ring.N(x, c, d);
                        rhs += static_cast<long>(ring.N(a, x, d)) * ring.N(b, c, x);
                    }
                    if (lhs != rhs)
                        fail("associativity", {a, b, c, d}, "(ab)c and a(bc) multiplicities differ");
                }
    return report;
}

std::vector<std::pair<Label, int>> fuse(const FusionRing& ring, Label a, Label b)
{
    ring.checked(a);
    ring.checked(b);
    std::vector<std::pair<Label, int>> out;
    for (Label c = 0; c < ring.rank(); ++c)
        if (const int n = ring.N(a, b, c); n > 0)
            out.emplace_back(c, n);
    return out;
}

MatrixXr fusion_matrix(const FusionRing& ring, Label a)
{
    ring.checked(a);
    const int m = ring.rank();
    MatrixXr out(m, m);
    for (Label b = 0; b < m; ++b)
        for (Label c = 0; c < m; ++c)
            out(b, c) = ring.N(a, b, c);
    return out;
}

bool is_commutative(const FusionRing& ring)
{
    const int m = ring.rank();
    for (Label a = 0; a < m; ++a)
        for (Label b = a + 1; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                if (ring.N(a, b, c) != ring.N(b, a, c))
                    return false;
    return true;
}

VectorXr fp_dimensions(const FusionRing& ring)
{
    const int m = ring.rank();
    VectorXr dims(m);
    for (Label a = 0; a < m; ++a) {
        Eigen::EigenSolver<MatrixXr> solver(fusion_matrix(ring, a), false);
        if (solver.info() != Eigen::Success)
            throw ComputationError("eigen-solver failed on fusion matrix of label " + std::to_string(a));
        // The spectral radius of a non-negative matrix is its Perron-Frobenius eigenvalue; other
        // eigenvalues (e.g. -sqrt2 for su2 spin 1/2) may share the modulus.
        dims[a] = solver.eigenvalues().cwiseAbs().maxCoeff();
        if (!(dims[a] > 0))
            throw ComputationError("fusion matrix of label " + std::to_string(a) + " has zero spectral radius");
    }
    return dims;
}

VerlindeResult verlinde_coefficients(const SMatrix& s, Scalar tolerance)
{
    if (s.normalization != SNormalization::normalized)
        throw InputError("Verlinde formula needs the normalized S-matrix");
    const int m = s.rank();
    if (m == 0 || s.entries.cols() != m)
        throw InputError("S-matrix must be square and non-empty");

    Eigen::FullPivLU<MatrixXc> lu(s.entries);
    lu.setThreshold(tolerance);
    if (!lu.isInvertible())
        throw DegenerateSMatrix("S-matrix is singular");
    for (int x = 0; x < m; ++x)
        if (std::abs(s.entries(kUnit, x)) < tolerance)
            throw DegenerateSMatrix("|S[e," + std::to_string(x) + "]| is below tolerance");

    VerlindeResult out;
    out.rank = m;
    out.raw.resize(static_cast<std::size_t>(m) * m * m);
    out.rounded.resize(out.raw.size());
    const auto& S = s.entries;
    std::size_t i = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c, ++i) {
                Complex sum = 0;
                for (int x = 0; x < m; ++x)
                    sum += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(kUnit, x);
                out.raw[i] = sum;
                const Scalar r = std::round(sum.real());
                out.rounded[i] = static_cast<int>(r);
                out.max_rounding_error = std::max(out.max_rounding_error, std::abs(sum - Complex(r, 0)));
            }
    return out;
}

Scalar verlinde_deviation(const VerlindeResult& v, const FusionRing& ring)
{
    if (v.rank != ring.rank())
        throw InputError("Verlinde result and fusion ring have different ranks");
    Scalar dev = 0;
    const int m = ring.rank();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                dev = std::max(dev, std::abs(v.raw_at(a, b, c) - Complex(ring.N(a, b, c), 0)));
    return dev;
}

}  // namespace mtcat
