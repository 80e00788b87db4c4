#include "mtcat/ribbon_modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mtcat {

namespace {

Scalar max_abs(const MatrixXc& m) { return m.size() == 0 ? Scalar{0} : m.cwiseAbs().maxCoeff(); }

VectorXc twists_given_dims(const CategoryData& data, const VectorXc& dims)
{
    const FusionRing& ring = data.ring;
    const int m = ring.rank();
    VectorXc out(m);
    for (Label a = 0; a < m; ++a) {
        Complex sum = 0;
        for (Label c = 0; c < m; ++c)
            if (ring.N(a, a, c) > 0)
                sum += dims[c] * r_matrix(data, a, a, c).trace();
        out[a] = sum / dims[a];
    }
    return out;
}

Scalar ribbon_residual_given(const CategoryData& data, const VectorXc& twists)
{
    const FusionRing& ring = data.ring;
    const int m = ring.rank();
    Scalar worst = 0;
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c) {
                const int n = ring.N(a, b, c);
                if (n == 0)
                    continue;
                const MatrixXc diff
                    = twists[c] * MatrixXc::Identity(n, n) - twists[a] * twists[b] * monodromy(data, a, b, c);
                worst = std::max(worst, max_abs(diff));
            }
    return worst;
}

MatrixXc s_tilde_monodromy(const CategoryData& data, const VectorXc& dims)
{
    const FusionRing& ring = data.ring;
    const int m = ring.rank();
    MatrixXc s = MatrixXc::Zero(m, m);
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                if (ring.N(a, b, c) > 0)
                    s(a, b) += dims[c] * monodromy(data, a, b, c).trace();
    return s;
}

MatrixXc s_tilde_balanced(const FusionRing& ring, const VectorXc& dims, const VectorXc& twists)
{
    const int m = ring.rank();
    MatrixXc s = MatrixXc::Zero(m, m);
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                if (const int n = ring.N(a, b, c); n > 0)
                    s(a, b) += Scalar(n) * dims[c] * twists[c] / (twists[a] * twists[b]);
    return s;
}

Scalar weights_residual(const CategoryData& data, const VectorXc& twists)
{
    Scalar worst = 0;
    for (Label a = 0; a < data.rank(); ++a)
        worst = std::max(worst, std::abs(twists[a] - expi(2 * kPi * (*data.weights)[a])));
    return worst;
}

}  // namespace

Complex quantum_dimension(const CategoryData& data, Label a, Scalar tolerance)
{
    return Scalar{1} / rigidity_scalar(data, a, tolerance);
}

VectorXc quantum_dimensions(const CategoryData& data, Scalar tolerance)
{
    VectorXc d(data.rank());
    for (Label a = 0; a < data.rank(); ++a)
        d[a] = quantum_dimension(data, a, tolerance);
    return d;
}

Complex twist_from_braiding(const CategoryData& data, Label a, Scalar tolerance)
{
    data.ring.checked(a);
    return twists_from_braiding(data, tolerance)[a];
}

VectorXc twists_from_braiding(const CategoryData& data, Scalar tolerance)
{
    return twists_given_dims(data, quantum_dimensions(data, tolerance));
}

Complex twist(const CategoryData& data, Label a, Scalar tolerance)
{
    const Complex theta = twist_from_braiding(data, a, tolerance);
    if (data.weights) {
        const Complex expected = expi(2 * kPi * (*data.weights)[a]);
        if (std::abs(theta - expected) >= tolerance) {
            std::ostringstream os;
            os << "twist of label " << a << " from braiding is " << theta << " but weight h = " << (*data.weights)[a]
               << " gives " << expected;
            throw WeightsInconsistent(os.str());
        }
    }
    return theta;
}

MatrixXc monodromy(const CategoryData& data, Label a, Label b, Label c)
{
    if (data.ring.at(a, b, c) == 0)
        throw InputError("inadmissible channel (" + std::to_string(a) + "," + std::to_string(b) + ","
                         + std::to_string(c) + ")");
    return r_matrix(data, a, b, c) * r_matrix(data, b, a, c);
}

Scalar ribbon_residual(const CategoryData& data) { return ribbon_residual_given(data, twists_from_braiding(data)); }

Scalar ribbon_residual(const CategoryData& data, const VectorXc& twists)
{
    if (twists.size() != data.rank())
        throw InputError("twist vector has the wrong length");
    return ribbon_residual_given(data, twists);
}

SMatrix s_matrix_unnormalized(const CategoryData& data)
{
    return {s_tilde_monodromy(data, quantum_dimensions(data)), SNormalization::unnormalized};
}

SMatrix s_matrix_balanced(const CategoryData& data)
{
    const VectorXc dims = quantum_dimensions(data);
    return {s_tilde_balanced(data.ring, dims, twists_given_dims(data, dims)), SNormalization::unnormalized};
}

SMatrix normalize(const SMatrix& s_tilde, Scalar global_dim)
{
    if (s_tilde.normalization != SNormalization::unnormalized)
        throw InputError("S-matrix is already normalized");
    if (!(global_dim > 0))
        throw InputError("global dimension must be positive");
    return {s_tilde.entries / global_dim, SNormalization::normalized};
}

VectorXc t_matrix(const CategoryData& data)
{
    if (!data.central_charge)
        throw InputError("t_matrix needs a central charge");
    return twists_from_braiding(data) * expi(-2 * kPi * *data.central_charge / 24);
}

MatrixXc charge_conjugation(const FusionRing& ring)
{
    const int m = ring.rank();
    MatrixXc c = MatrixXc::Zero(m, m);
    for (Label a = 0; a < m; ++a)
        c(a, ring.dual(a)) = 1;
    return c;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::modular:
        return "modular";
    case Verdict::degenerate:
        return "degenerate";
    case Verdict::incoherent:
        return "incoherent";
    }
    return "?";
}

ModularReport check_modular(const CategoryData& data, const ModularOptions& options)
{
    ModularReport report;
    auto& res = report.residuals;
    const FusionRing& ring = data.ring;
    const int m = ring.rank();
    const Scalar tol = options.tolerance;
    bool coherent = true;

    // Coherence of the F/R data itself.
    try {
        res["pentagon"] = pentagon_residual(data).value;
        res["hexagon_braid"] = hexagon_residual(data, BraidDirection::braid).value;
        res["hexagon_inverse"] = hexagon_residual(data, BraidDirection::inverse_braid).value;
        res["triangle"] = triangle_residual(data);
    } catch (const Error& e) {
        report.notes.emplace_back(e.what());
        report.verdict = Verdict::incoherent;
        return report;
    }

    try {
        Scalar inverse_unit = 0;
        Scalar min_modulus = std::numeric_limits<Scalar>::infinity();
        for (Label a = 0; a < m; ++a) {
            min_modulus = std::min(min_modulus, std::abs(rigidity_scalar(data, a, 0)));
            inverse_unit = std::max(inverse_unit, f_inverse_unit_check(data, a));
        }
        res["rigidity_inverse_unit"] = inverse_unit;
        res["rigidity_min_modulus"] = min_modulus;
        if (min_modulus < tol) {
            report.notes.emplace_back("a rigidity scalar vanishes");
            report.verdict = Verdict::incoherent;
            return report;
        }

        report.dims = quantum_dimensions(data, tol);
        report.twists = twists_given_dims(data, report.dims);
        res["ribbon"] = ribbon_residual_given(data, report.twists);
        if (data.weights)
            res["weights"] = weights_residual(data, report.twists);

        report.s_tilde = {s_tilde_monodromy(data, report.dims), SNormalization::unnormalized};
        const MatrixXc balanced = s_tilde_balanced(ring, report.dims, report.twists);
        res["s_two_route"] = max_abs(report.s_tilde.entries - balanced);
        res["s_symmetry"] = max_abs(report.s_tilde.entries - report.s_tilde.entries.transpose());
    } catch (const Error& e) {
        report.notes.emplace_back(e.what());
        report.verdict = Verdict::incoherent;
        return report;
    }

    try {
        report.fp_dims = fp_dimensions(ring);
    } catch (const ComputationError& e) {
        report.notes.emplace_back(e.what());
    }

    for (const char* key : {"pentagon", "hexagon_braid", "hexagon_inverse", "triangle", "ribbon", "weights",
                            "s_two_route", "s_symmetry"}) {
        const auto it = res.find(key);
        if (it != res.end() && !(it->second < options.coherence_threshold)) {
            coherent = false;
            report.notes.push_back(std::string(key) + " residual exceeds the coherence threshold");
        }
    }

    const Complex dim_sq = report.dims.squaredNorm() == 0 ? Complex{0} : report.dims.array().square().sum();
    report.global_dim_sq = dim_sq.real();
    if (std::abs(dim_sq.imag()) > tol)
        report.notes.emplace_back("sum of squared dimensions is not real");

    Complex p_plus = 0, p_minus = 0;
    for (Label a = 0; a < m; ++a) {
        p_plus += report.dims[a] * report.dims[a] * report.twists[a];
        p_minus += report.dims[a] * report.dims[a] / report.twists[a];
    }
    report.gauss_sums = {p_plus, p_minus};

    const auto& S = report.s_tilde.entries;
    report.s_determinant = S.determinant();
    Eigen::JacobiSVD<MatrixXc> svd(S);
    const VectorXr sv = svd.singularValues();
    report.s_condition = sv[0] > 0 ? sv[sv.size() - 1] / sv[0] : 0;

    if (!coherent) {
        report.verdict = Verdict::incoherent;
        return report;
    }
    if (report.s_condition < options.degeneracy_threshold) {
        report.verdict = Verdict::degenerate;
        return report;
    }
    if (!(report.global_dim_sq > 0)) {
        report.notes.emplace_back("global dimension squared is not positive; S cannot be normalized");
        report.verdict = Verdict::degenerate;
        return report;
    }
    report.verdict = Verdict::modular;

    const Scalar D = std::sqrt(report.global_dim_sq);
    report.s_norm = normalize(report.s_tilde, D);
    const MatrixXc& s = report.s_norm.entries;
    const MatrixXc C = charge_conjugation(ring);

    try {
        const VerlindeResult v = verlinde_coefficients(report.s_norm, tol);
        res["verlinde"] = verlinde_deviation(v, ring);
    } catch (const Error& e) {
        report.notes.emplace_back(e.what());
        res["verlinde"] = std::numeric_limits<Scalar>::infinity();
    }

    res["s_squared_charge_conjugation"] = max_abs(s * s - C);
    res["gauss_modulus"] = std::abs(std::abs(p_plus * p_minus) - report.global_dim_sq);

    // The modular relation pairs the first index with its dual: S_hat = C s.
    const MatrixXc s_hat = C * s;
    const MatrixXc T = report.twists.asDiagonal();
    const MatrixXc st = s_hat * T;
    res["st_cubed"] = max_abs(st * st * st - (p_plus / D) * s_hat * s_hat);

    if (data.central_charge) {
        const Scalar c = *data.central_charge;
        report.t_diag = report.twists * expi(-2 * kPi * c / 24);
        const MatrixXc t = report.t_diag.asDiagonal();
        const MatrixXc st_norm = s_hat * t;
        res["st_cubed_normalized"] = max_abs(st_norm * st_norm * st_norm - s_hat * s_hat);
        res["central_charge"] = std::abs(p_plus / std::abs(p_plus) - expi(2 * kPi * c / 8));
    }
    return report;
}

}  // namespace mtcat
