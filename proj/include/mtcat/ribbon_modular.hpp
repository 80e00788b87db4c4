#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtcat/category_data.hpp"

namespace mtcat {

/// d_a = 1 / rigidity_scalar(a). Negative values carry the Frobenius-Schur sign.
Complex quantum_dimension(const CategoryData& data, Label a, Scalar tolerance = kDefaultTolerance);
VectorXc quantum_dimensions(const CategoryData& data, Scalar tolerance = kDefaultTolerance);

/// theta_a = d_a^{-1} sum_c d_c tr R[a,a,c], without consulting weights.
Complex twist_from_braiding(const CategoryData& data, Label a, Scalar tolerance = kDefaultTolerance);
VectorXc twists_from_braiding(const CategoryData& data, Scalar tolerance = kDefaultTolerance);

/// twist_from_braiding(), cross-checked against exp(2 pi i h_a) when weights are
/// present. Throws WeightsInconsistent on a mismatch beyond `tolerance`.
Complex twist(const CategoryData& data, Label a, Scalar tolerance = kDefaultTolerance);

/// Double braiding on channel (a,b,c): R[a,b,c] * R[b,a,c], N[a,b,c] x N[a,b,c].
MatrixXc monodromy(const CategoryData& data, Label a, Label b, Label c);

/// max over admissible (a,b,c) of |theta_c Id - theta_a theta_b monodromy(a,b,c)|.
Scalar ribbon_residual(const CategoryData& data);
/// Same, with caller-supplied twists.
Scalar ribbon_residual(const CategoryData& data, const VectorXc& twists);

/// S~[a,b] = sum_c d_c tr monodromy(a,b,c).
SMatrix s_matrix_unnormalized(const CategoryData& data);
/// S~'[a,b] = sum_c N[a,b,c] d_c theta_c / (theta_a theta_b).
SMatrix s_matrix_balanced(const CategoryData& data);
/// S~ / D with D = +sqrt(sum_a d_a^2).
SMatrix normalize(const SMatrix& s_tilde, Scalar global_dim);

/// t[a] = theta_a exp(-2 pi i c / 24). Throws InputError without a central charge.
VectorXc t_matrix(const CategoryData& data);

/// Duality permutation matrix C[a,b] = delta(b, dual(a)).
MatrixXc charge_conjugation(const FusionRing& ring);

enum class Verdict { modular, degenerate, incoherent };
const char* to_string(Verdict v);

struct ModularOptions {
    Scalar tolerance = kDefaultTolerance;
    Scalar coherence_threshold = 1e-7;
    /// Relative smallest singular value of S~ below which it counts as singular.
    Scalar degeneracy_threshold = 1e-8;
};

struct ModularReport {
    VectorXc dims;
    VectorXr fp_dims;
    VectorXc twists;
    SMatrix s_tilde;
    SMatrix s_norm;
    VectorXc t_diag;  // empty without a central charge
    Scalar global_dim_sq = 0;
    std::pair<Complex, Complex> gauss_sums{};
    Complex s_determinant = 0;
    Scalar s_condition = 0;  // sigma_min / sigma_max of S~
    Verdict verdict = Verdict::incoherent;
    std::map<std::string, Scalar> residuals;
    std::vector<std::string> notes;
};

/// Runs every residual check and assembles dims, twists, S and T.
ModularReport check_modular(const CategoryData& data, const ModularOptions& options = {});

}  // namespace mtcat
