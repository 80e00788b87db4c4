#pragma once

// Dense per-block views of the sparse F/R maps used by the residual and gauge code.

#include <vector>

#include "mtcat/category_data.hpp"

namespace mtcat::detail {

/// All fusing blocks of a category in tree orientation: rows are (ab)c basis
/// vectors (x, alpha in N[a,b,x], beta in N[x,c,d]), columns are a(bc) basis
/// vectors (y, mu in N[b,c,y], nu in N[a,y,d]). This is the transpose of f_matrix().
class FBlocks {
public:
    FBlocks(const CategoryData& data, bool with_inverses);

    const FusionRing& ring() const noexcept { return *ring_; }
    const BlockLayout& layout(Label a, Label b, Label c, Label d) const { return layouts_[idx(a, b, c, d)]; }
    const MatrixXc& tree(Label a, Label b, Label c, Label d) const { return tree_[idx(a, b, c, d)]; }
    const MatrixXc& tree_inverse(Label a, Label b, Label c, Label d) const { return inverse_[idx(a, b, c, d)]; }

    int ab(Label a, Label b, Label c, Label d, Label x, int alpha, int beta) const
    {
        return layout(a, b, c, d).ab_offset[x] + alpha * ring_->N(x, c, d) + beta;
    }
    int bc(Label a, Label b, Label c, Label d, Label y, int mu, int nu) const
    {
        return layout(a, b, c, d).bc_offset[y] + mu * ring_->N(a, y, d) + nu;
    }

private:
    std::size_t idx(Label a, Label b, Label c, Label d) const
    {
        const auto m = static_cast<std::size_t>(ring_->rank());
        return ((static_cast<std::size_t>(a) * m + b) * m + c) * m + d;
    }

    const FusionRing* ring_;
    std::vector<BlockLayout> layouts_;
    std::vector<MatrixXc> tree_;
    std::vector<MatrixXc> inverse_;
};

/// R-blocks per channel, plus the blocks used for the inverse braiding.
class RBlocks {
public:
    RBlocks(const CategoryData& data, BraidDirection direction);

    const MatrixXc& operator()(Label a, Label b, Label c) const { return blocks_[idx(a, b, c)]; }

private:
    std::size_t idx(Label a, Label b, Label c) const
    {
        const auto m = static_cast<std::size_t>(rank_);
        return (static_cast<std::size_t>(a) * m + b) * m + c;
    }

    int rank_;
    std::vector<MatrixXc> blocks_;
};

MatrixXc checked_inverse(const MatrixXc& m, const char* what);

}  // namespace mtcat::detail
