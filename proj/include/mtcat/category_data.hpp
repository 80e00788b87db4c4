#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtcat/core.hpp"
#include "mtcat/fusion_ring.hpp"

namespace mtcat {

/// Key of an F-symbol entry.
///
/// For fixed (a,b,c,d) the entries form the fusing matrix whose rows are the
/// a(bc) channels (e, alpha, beta) and whose columns are the (ab)c channels
/// (f, gamma, delta):
///   e     channel of (b,c),  alpha in [0, N[b,c,e])
///                            beta  in [0, N[a,e,d])
///   f     channel of (a,b),  gamma in [0, N[a,b,f])
///                            delta in [0, N[f,c,d])
/// The entry is the coefficient of the a(bc) basis vector (e,alpha,beta) when
/// the (ab)c basis vector (f,gamma,delta) is expanded in the a(bc) basis.
/// Multiplicity indices are zero-based in memory and one-based on disk.
struct FKey {
    Label a, b, c, d, e, f;
    int alpha = 0, beta = 0, gamma = 0, delta = 0;

    auto operator<=>(const FKey&) const = default;
    std::vector<int> as_vector() const { return {a, b, c, d, e, f, alpha, beta, gamma, delta}; }
};

/// Key of an R-symbol entry: (a,b,c) channel, alpha in [0,N[a,b,c]),
/// beta in [0,N[b,a,c]). The N[a,b,c] x N[b,a,c] matrix expresses the
/// b(x)a -> c basis composed with the braiding a(x)b -> b(x)a in the a(x)b -> c basis.
struct RKey {
    Label a, b, c;
    int alpha = 0, beta = 0;

    auto operator<=>(const RKey&) const = default;
    std::vector<int> as_vector() const { return {a, b, c, alpha, beta}; }
};

using FSymbols = std::map<FKey, Complex>;
using RSymbols = std::map<RKey, Complex>;

/// Skeletal data of a braided fusion category.
struct CategoryData {
    std::string name;
    FusionRing ring;
    FSymbols F;
    RSymbols R;
    /// Conformal weights h_a, one per label.
    std::optional<std::vector<Scalar>> weights;
    std::optional<Scalar> central_charge;

    int rank() const noexcept { return ring.rank(); }

    friend bool operator==(const CategoryData&, const CategoryData&) = default;
};

/// Channel offsets inside one fusing block (a,b,c,d).
struct BlockLayout {
    std::vector<int> ab_offset;  // per channel f of (a,b); -1 when absent
    std::vector<int> bc_offset;  // per channel e of (b,c); -1 when absent
    int dim = 0;
};

BlockLayout block_layout(const FusionRing& ring, Label a, Label b, Label c, Label d);

/// A dense matrix together with the (channel, mult, mult) key of each row and column.
struct LabeledMatrix {
    MatrixXc matrix;
    std::vector<std::array<int, 3>> row_keys;
    std::vector<std::array<int, 3>> col_keys;
};

/// Dense fusing matrix over (e,alpha,beta) x (f,gamma,delta) in canonical order.
/// Throws InputError for an inadmissible tuple, IncompleteData for a missing entry.
LabeledMatrix f_matrix(const CategoryData& data, Label a, Label b, Label c, Label d);

/// R-block for channel (a,b,c), N[a,b,c] x N[b,a,c].
MatrixXc r_matrix(const CategoryData& data, Label a, Label b, Label c);

/// Checks that F and R keys are exactly the admissible ones.
ValidationReport validate_symbols(const CategoryData& data);

struct Residual {
    Scalar value = 0;
    std::vector<int> worst;  // empty when nothing was evaluated
};

enum class BraidDirection { braid, inverse_braid };

/// Largest deviation between the two sides of all pentagon instances.
/// Reported tuple: (a,b,c,d,e, f,g,k,l, alpha,beta,gamma, delta,lambda,mu).
Residual pentagon_residual(const CategoryData& data);

/// Largest deviation over all hexagon instances. With inverse_braid every
/// R-block R[a,b,c] is replaced by the inverse of R[b,a,c].
/// Reported tuple: (a,b,c,d, z,kappa,rho, x,alpha,beta).
Residual hexagon_residual(const CategoryData& data, BraidDirection direction);

/// Largest deviation from the identity among fusing matrices with a unit in (a,b,c).
Scalar triangle_residual(const CategoryData& data);

/// Unit-unit entry of f_matrix(a, dual(a), a, a).
/// Throws RigidityDegenerate when its modulus is below `tolerance`.
Complex rigidity_scalar(const CategoryData& data, Label a, Scalar tolerance = kDefaultTolerance);

/// |(F^-1)_{unit,unit} - F_{unit,unit}| for f_matrix(a, dual(a), a, a).
Scalar f_inverse_unit_check(const CategoryData& data, Label a);

/// Basis change on fusion spaces: (a,b,c) -> invertible N[a,b,c] x N[a,b,c]
/// matrix whose columns are the new basis vectors. Missing triples are identity.
struct GaugeTransform {
    std::map<std::array<Label, 3>, MatrixXc> blocks;

    MatrixXc block(const FusionRing& ring, Label a, Label b, Label c) const;
};

/// Conjugates F by the four boundary gauges and R by the two channel gauges.
/// Throws InputError on wrong block shapes, non-invertible blocks, or a
/// non-identity block on a unit triple.
CategoryData gauge_transform(const CategoryData& data, const GaugeTransform& g);

/// Seeded random gauge: unimodular phases on one-dimensional fusion spaces and
/// random unitaries on larger ones; unit triples are left alone.
GaugeTransform random_gauge(const FusionRing& ring, std::uint64_t seed);

}  // namespace mtcat
