#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mtcat/core.hpp"

namespace mtcat {

/// Grothendieck-ring data of a semisimple category with finitely many simples:
/// label names, the duality involution, and the fusion multiplicities N[a,b,c].
///
/// The constructor only checks shapes. Use validate_ring() to check the
/// algebraic invariants; a ring is treated as immutable after that.
class FusionRing {
public:
    FusionRing() = default;

    /// `multiplicities` is row-major over (a,b,c), size rank^3.
    FusionRing(std::vector<std::string> names, std::vector<Label> dual, std::vector<int> multiplicities);

    int rank() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Label a) const { return names_.at(checked(a)); }
    Label dual(Label a) const { return dual_.at(checked(a)); }
    const std::vector<Label>& duals() const noexcept { return dual_; }

    /// Unchecked multiplicity lookup.
    int N(Label a, Label b, Label c) const noexcept { return mult_[index(a, b, c)]; }
    /// Bounds-checked multiplicity lookup; throws InputError.
    int at(Label a, Label b, Label c) const;

    bool contains(Label a) const noexcept { return a >= 0 && a < rank(); }
    Label checked(Label a) const;

    const std::vector<int>& multiplicities() const noexcept { return mult_; }

    friend bool operator==(const FusionRing&, const FusionRing&) = default;

private:
    std::size_t index(Label a, Label b, Label c) const noexcept
    {
        const auto m = static_cast<std::size_t>(rank());
        return (static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)) * m + static_cast<std::size_t>(c);
    }

    std::vector<std::string> names_;
    std::vector<Label> dual_;
    std::vector<int> mult_;
};

struct Violation {
    std::string invariant;
    std::vector<int> witness;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Lists every violated ring invariant with a witnessing index tuple.
ValidationReport validate_ring(const FusionRing& ring);

/// All c with N[a,b,c] > 0, in label order.
std::vector<std::pair<Label, int>> fuse(const FusionRing& ring, Label a, Label b);

/// (N[a,b,c])_{b,c}
MatrixXr fusion_matrix(const FusionRing& ring, Label a);

bool is_commutative(const FusionRing& ring);

/// Perron-Frobenius eigenvalue of each fusion matrix.
VectorXr fp_dimensions(const FusionRing& ring);

enum class SNormalization { unnormalized, normalized };

struct SMatrix {
    MatrixXc entries;
    SNormalization normalization = SNormalization::unnormalized;

    int rank() const noexcept { return static_cast<int>(entries.rows()); }
};

/// Fusion coefficients recovered from a normalized S-matrix, raw and rounded.
struct VerlindeResult {
    int rank = 0;
    std::vector<Complex> raw;  // row-major (a,b,c)
    std::vector<int> rounded;
    Scalar max_rounding_error = 0;

    Complex raw_at(Label a, Label b, Label c) const { return raw[idx(a, b, c)]; }
    int rounded_at(Label a, Label b, Label c) const { return rounded[idx(a, b, c)]; }

private:
    std::size_t idx(Label a, Label b, Label c) const
    {
        return (static_cast<std::size_t>(a) * rank + b) * rank + c;
    }
};

/// N'[a,b,c] = sum_x S[a,x] S[b,x] conj(S[c,x]) / S[e,x].
///
/// Requires a normalized S. Throws DegenerateSMatrix when S is singular or
/// some |S[e,x]| falls below `tolerance`.
VerlindeResult verlinde_coefficients(const SMatrix& s, Scalar tolerance = kDefaultTolerance);

/// Largest |N'[a,b,c] - N[a,b,c]| over all entries; ranks must agree.
Scalar verlinde_deviation(const VerlindeResult& v, const FusionRing& ring);

}  // namespace mtcat
