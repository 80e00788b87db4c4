#include <algorithm>

#include "blocks.hpp"
#include "mtcat/category_data.hpp"

namespace mtcat {

namespace {

// Keeps the first (lexicographically smallest, given ordered iteration) maximum.
struct MaxTracker {
    Residual result;
    void offer(Scalar value, std::initializer_list<int> tuple)
    {
        if (result.worst.empty() || value > result.value) {
            result.value = value;
            result.worst.assign(tuple);
        }
    }
};

}  // namespace

Residual pentagon_residual(const CategoryData& data)
{
    const FusionRing& ring = data.ring;
    const detail::FBlocks F(data, false);
    const int m = ring.rank();
    MaxTracker tracker;

    // Both sides re-express the basis vector (((ab)_f c)_g d)_e in the basis
    // (a(b(cd)_l)_k)_e, once through two fusing moves and once through three.
    for (Label a = 0; a < m; ++a)
    for (Label b = 0; b < m; ++b)
    for (Label c = 0; c < m; ++c)
    for (Label d = 0; d < m; ++d)
    for (Label e = 0; e < m; ++e)
    for (Label f = 0; f < m; ++f) {
        if (ring.N(a, b, f) == 0)
            continue;
        for (Label g = 0; g < m; ++g) {
            if (ring.N(f, c, g) == 0 || ring.N(g, d, e) == 0)
                continue;
            for (Label k = 0; k < m; ++k) {
                if (ring.N(a, k, e) == 0)
                    continue;
                for (Label l = 0; l < m; ++l) {
                    if (ring.N(c, d, l) == 0 || ring.N(b, l, k) == 0)
                        continue;
                    for (int alpha = 0; alpha < ring.N(a, b, f); ++alpha)
                    for (int beta = 0; beta < ring.N(f, c, g); ++beta)
                    for (int gamma = 0; gamma < ring.N(g, d, e); ++gamma)
                    for (int delta = 0; delta < ring.N(c, d, l); ++delta)
                    for (int lambda = 0; lambda < ring.N(b, l, k); ++lambda)
                    for (int mu = 0; mu < ring.N(a, k, e); ++mu) {
                        Complex lhs = 0;
                        for (int nu = 0; nu < ring.N(f, l, e); ++nu)
                            lhs += F.tree(f, c, d, e)(F.ab(f, c, d, e, g, beta, gamma), F.bc(f, c, d, e, l, delta, nu))
                                   * F.tree(a, b, l, e)(F.ab(a, b, l, e, f, alpha, nu), F.bc(a, b, l, e, k, lambda, mu));

                        Complex rhs = 0;
                        for (Label h = 0; h < m; ++h) {
                            const int n_bch = ring.N(b, c, h), n_ahg = ring.N(a, h, g), n_hdk = ring.N(h, d, k);
                            if (n_bch == 0 || n_ahg == 0 || n_hdk == 0)
                                continue;
                            for (int sigma = 0; sigma < n_bch; ++sigma)
                            for (int psi = 0; psi < n_ahg; ++psi)
                            for (int rho = 0; rho < n_hdk; ++rho)
                                rhs += F.tree(a, b, c, g)(F.ab(a, b, c, g, f, alpha, beta), F.bc(a, b, c, g, h, sigma, psi))
                                       * F.tree(a, h, d, e)(F.ab(a, h, d, e, g, psi, gamma), F.bc(a, h, d, e, k, rho, mu))
                                       * F.tree(b, c, d, k)(F.ab(b, c, d, k, h, sigma, rho), F.bc(b, c, d, k, l, delta, lambda));
                        }
                        tracker.offer(std::abs(lhs - rhs),
                                      {a, b, c, d, e, f, g, k, l, alpha, beta, gamma, delta, lambda, mu});
                    }
                }
            }
        }
    }
    return tracker.result;
}

Residual hexagon_residual(const CategoryData& data, BraidDirection direction)
{
    const FusionRing& ring = data.ring;
    const detail::FBlocks F(data, true);
    const detail::RBlocks R(data, direction);
    const int m = ring.rank();
    MaxTracker tracker;

    // Coefficient of ((ab)_x c)_d in the basis vector (b(ca)_z)_d pulled back
    // along the braiding of a past (b c), computed both as one braiding of a
    // past the composite and as two elementary braidings.
    for (Label a = 0; a < m; ++a)
    for (Label b = 0; b < m; ++b)
    for (Label c = 0; c < m; ++c)
    for (Label d = 0; d < m; ++d) {
        if (F.layout(a, b, c, d).dim == 0)
            continue;
        const MatrixXc& inv_bca = F.tree_inverse(b, c, a, d);
        const MatrixXc& inv_abc = F.tree_inverse(a, b, c, d);
        const MatrixXc& inv_bac = F.tree_inverse(b, a, c, d);
        for (Label z = 0; z < m; ++z) {
            if (ring.N(c, a, z) == 0 || ring.N(b, z, d) == 0)
                continue;
            for (int kappa = 0; kappa < ring.N(c, a, z); ++kappa)
            for (int rho = 0; rho < ring.N(b, z, d); ++rho)
            for (Label x = 0; x < m; ++x) {
                if (ring.N(a, b, x) == 0 || ring.N(x, c, d) == 0)
                    continue;
                for (int alpha = 0; alpha < ring.N(a, b, x); ++alpha)
                for (int beta = 0; beta < ring.N(x, c, d); ++beta) {
                    Complex lhs = 0;
                    const int row = F.bc(b, c, a, d, z, kappa, rho);
                    const int col = F.ab(a, b, c, d, x, alpha, beta);
                    for (Label y = 0; y < m; ++y) {
                        const int n_bcy = ring.N(b, c, y), n_yad = ring.N(y, a, d), n_ayd = ring.N(a, y, d);
                        if (n_bcy == 0 || n_yad == 0 || n_ayd == 0)
                            continue;
                        const MatrixXc& r_ayd = R(a, y, d);
                        for (int mu = 0; mu < n_bcy; ++mu)
                        for (int nu = 0; nu < n_yad; ++nu)
                        for (int omega = 0; omega < n_ayd; ++omega)
                            lhs += inv_bca(row, F.ab(b, c, a, d, y, mu, nu)) * r_ayd(omega, nu)
                                   * inv_abc(F.bc(a, b, c, d, y, mu, omega), col);
                    }

                    Complex rhs = 0;
                    const MatrixXc& r_acz = R(a, c, z);
                    const MatrixXc& r_abx = R(a, b, x);
                    for (int lambda = 0; lambda < ring.N(a, c, z); ++lambda)
                    for (int sigma = 0; sigma < ring.N(b, a, x); ++sigma)
                        rhs += r_acz(lambda, kappa)
                               * inv_bac(F.bc(b, a, c, d, z, lambda, rho), F.ab(b, a, c, d, x, sigma, beta))
                               * r_abx(alpha, sigma);

                    tracker.offer(std::abs(lhs - rhs), {a, b, c, d, z, kappa, rho, x, alpha, beta});
                }
            }
        }
    }
    return tracker.result;
}

Scalar triangle_residual(const CategoryData& data)
{
    const detail::FBlocks F(data, false);
    const int m = data.ring.rank();
    Scalar worst = 0;
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c) {
                if (a != kUnit && b != kUnit && c != kUnit)
                    continue;
                for (Label d = 0; d < m; ++d) {
                    const MatrixXc& block = F.tree(a, b, c, d);
                    if (block.size() == 0)
                        continue;
                    const MatrixXc diff = block - MatrixXc::Identity(block.rows(), block.cols());
                    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
                }
            }
    return worst;
}

}  // namespace mtcat
