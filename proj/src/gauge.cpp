#include <random>

#include "blocks.hpp"
#include "mtcat/category_data.hpp"

namespace mtcat {

namespace {

bool is_unit_triple(const FusionRing& ring, Label a, Label b, Label c)
{
    return (a == kUnit && b == c) || (b == kUnit && a == c) || (c == kUnit && b == ring.dual(a));
}

MatrixXc kron(const MatrixXc& outer, const MatrixXc& inner)
{
    MatrixXc out(outer.rows() * inner.rows(), outer.cols() * inner.cols());
    for (Eigen::Index i = 0; i < outer.rows(); ++i)
        for (Eigen::Index j = 0; j < outer.cols(); ++j)
            out.block(i * inner.rows(), j * inner.cols(), inner.rows(), inner.cols()) = outer(i, j) * inner;
    return out;
}

void check_gauge(const FusionRing& ring, const GaugeTransform& g)
{
    for (const auto& [key, block] : g.blocks) {
        const auto [a, b, c] = key;
        if (!ring.contains(a) || !ring.contains(b) || !ring.contains(c))
            throw InputError("gauge block references an unknown label");
        const int n = ring.N(a, b, c);
        if (block.rows() != n || block.cols() != n)
            throw InputError("gauge block (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)
                             + ") has the wrong shape");
        if (n == 0)
            continue;
        Eigen::FullPivLU<MatrixXc> lu(block);
        if (!lu.isInvertible())
            throw InputError("gauge block (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)
                             + ") is not invertible");
        if (is_unit_triple(ring, a, b, c) && (block - MatrixXc::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
            throw InputError("gauge must be the identity on unit triple (" + std::to_string(a) + ","
                             + std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

}  // namespace

CategoryData gauge_transform(const CategoryData& data, const GaugeTransform& g)
{
    const FusionRing& ring = data.ring;
    check_gauge(ring, g);
    const int m = ring.rank();
    CategoryData out = data;

    for (Label a = 0; a < m; ++a)
    for (Label b = 0; b < m; ++b)
    for (Label c = 0; c < m; ++c)
    for (Label d = 0; d < m; ++d) {
        const BlockLayout layout = block_layout(ring, a, b, c, d);
        if (layout.dim == 0)
            continue;
        // Row side: a(bc) vectors, column side: (ab)c vectors.
        MatrixXc row_change = MatrixXc::Zero(layout.dim, layout.dim);
        MatrixXc col_change = MatrixXc::Zero(layout.dim, layout.dim);
        for (Label x = 0; x < m; ++x) {
            if (layout.bc_offset[x] >= 0) {
                const MatrixXc k = kron(g.block(ring, b, c, x), g.block(ring, a, x, d));
                row_change.block(layout.bc_offset[x], layout.bc_offset[x], k.rows(), k.cols()) = k;
            }
            if (layout.ab_offset[x] >= 0) {
                const MatrixXc k = kron(g.block(ring, a, b, x), g.block(ring, x, c, d));
                col_change.block(layout.ab_offset[x], layout.ab_offset[x], k.rows(), k.cols()) = k;
            }
        }
        const LabeledMatrix fm = f_matrix(data, a, b, c, d);
        const MatrixXc updated = detail::checked_inverse(row_change, "gauge") * fm.matrix * col_change;
        for (int i = 0; i < layout.dim; ++i)
            for (int j = 0; j < layout.dim; ++j) {
                const auto& rk = fm.row_keys[i];
                const auto& ck = fm.col_keys[j];
                out.F[FKey{a, b, c, d, rk[0], ck[0], rk[1], rk[2], ck[1], ck[2]}] = updated(i, j);
            }
    }

    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c) {
                if (ring.N(a, b, c) == 0 || ring.N(b, a, c) == 0)
                    continue;
                const MatrixXc updated = detail::checked_inverse(g.block(ring, a, b, c), "gauge")
                                         * r_matrix(data, a, b, c) * g.block(ring, b, a, c);
                for (int i = 0; i < updated.rows(); ++i)
                    for (int j = 0; j < updated.cols(); ++j)
                        out.R[RKey{a, b, c, i, j}] = updated(i, j);
            }
    return out;
}

GaugeTransform random_gauge(const FusionRing& ring, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<Scalar> angle(0, 2 * kPi);
    std::normal_distribution<Scalar> normal;
    GaugeTransform g;
    const int m = ring.rank();
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c) {
                const int n = ring.N(a, b, c);
                if (n == 0 || is_unit_triple(ring, a, b, c))
                    continue;
                MatrixXc block(n, n);
                if (n == 1) {
                    block(0, 0) = expi(angle(rng));
                } else {
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            block(i, j) = Complex(normal(rng), normal(rng));
                    Eigen::HouseholderQR<MatrixXc> qr(block);
                    block = qr.householderQ() * MatrixXc::Identity(n, n);
                }
                g.blocks[{a, b, c}] = block;
            }
    return g;
}

}  // namespace mtcat
