#include "mtcat/category_data.hpp"

#include <sstream>

#include "blocks.hpp"

namespace mtcat {

namespace {

std::string tuple_string(std::initializer_list<int> xs)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int x : xs) {
        if (!first)
            os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

// Fills `out` in f_matrix orientation: rows (e,alpha,beta), columns (f,gamma,delta).
void fill_f_block(const CategoryData& data, Label a, Label b, Label c, Label d, const BlockLayout& layout,
                  MatrixXc& out)
{
    const FusionRing& ring = data.ring;
    const int m = ring.rank();
    out.resize(layout.dim, layout.dim);
    for (Label e = 0; e < m; ++e) {
        if (layout.bc_offset[e] < 0)
            continue;
        const int n_bce = ring.N(b, c, e), n_aed = ring.N(a, e, d);
        for (Label f = 0; f < m; ++f) {
            if (layout.ab_offset[f] < 0)
                continue;
            const int n_abf = ring.N(a, b, f), n_fcd = ring.N(f, c, d);
            for (int alpha = 0; alpha < n_bce; ++alpha)
                for (int beta = 0; beta < n_aed; ++beta)
                    for (int gamma = 0; gamma < n_abf; ++gamma)
                        for (int delta = 0; delta < n_fcd; ++delta) {
                            const FKey key{a, b, c, d, e, f, alpha, beta, gamma, delta};
                            const auto it = data.F.find(key);
                            if (it == data.F.end())
                                throw IncompleteData("missing F-symbol " + tuple_string({a, b, c, d, e, f, alpha, beta, gamma, delta}),
                                                     key.as_vector());
                            out(layout.bc_offset[e] + alpha * n_aed + beta, layout.ab_offset[f] + gamma * n_fcd + delta)
                                = it->second;
                        }
        }
    }
}

}  // namespace

BlockLayout block_layout(const FusionRing& ring, Label a, Label b, Label c, Label d)
{
    const int m = ring.rank();
    BlockLayout out;
    out.ab_offset.assign(m, -1);
    out.bc_offset.assign(m, -1);
    int ab_pos = 0, bc_pos = 0;
    for (Label x = 0; x < m; ++x) {
        if (const int n = ring.N(a, b, x) * ring.N(x, c, d); n > 0) {
            out.ab_offset[x] = ab_pos;
            ab_pos += n;
        }
        if (const int n = ring.N(b, c, x) * ring.N(a, x, d); n > 0) {
            out.bc_offset[x] = bc_pos;
            bc_pos += n;
        }
    }
    if (ab_pos != bc_pos)
        throw InputError("fusion is not associative at " + tuple_string({a, b, c, d}));
    out.dim = ab_pos;
    return out;
}

LabeledMatrix f_matrix(const CategoryData& data, Label a, Label b, Label c, Label d)
{
    const FusionRing& ring = data.ring;
    for (Label x : {a, b, c, d})
        ring.checked(x);
    const BlockLayout layout = block_layout(ring, a, b, c, d);
    if (layout.dim == 0) {
        std::ostringstream os;
        os << "inadmissible tuple " << tuple_string({a, b, c, d}) << ": every channel has an empty fusion space;";
        for (Label e = 0; e < ring.rank(); ++e) {
            if (ring.N(b, c, e) == 0)
                continue;
            os << " N[a," << e << ",d]=0 for (b,c)->" << e << ';';
        }
        if (fuse(ring, b, c).empty())
            os << " N[b,c,*] is empty;";
        throw InputError(os.str());
    }

    LabeledMatrix out;
    fill_f_block(data, a, b, c, d, layout, out.matrix);
    for (Label e = 0; e < ring.rank(); ++e)
        if (layout.bc_offset[e] >= 0)
            for (int alpha = 0; alpha < ring.N(b, c, e); ++alpha)
                for (int beta = 0; beta < ring.N(a, e, d); ++beta)
                    out.row_keys.push_back({e, alpha, beta});
    for (Label f = 0; f < ring.rank(); ++f)
        if (layout.ab_offset[f] >= 0)
            for (int gamma = 0; gamma < ring.N(a, b, f); ++gamma)
                for (int delta = 0; delta < ring.N(f, c, d); ++delta)
                    out.col_keys.push_back({f, gamma, delta});
    return out;
}

MatrixXc r_matrix(const CategoryData& data, Label a, Label b, Label c)
{
    const FusionRing& ring = data.ring;
    const int rows = ring.at(a, b, c), cols = ring.N(b, a, c);
    if (rows == 0 && cols == 0)
        throw InputError("inadmissible braiding channel " + tuple_string({a, b, c}));
    MatrixXc out(rows, cols);
    for (int alpha = 0; alpha < rows; ++alpha)
        for (int beta = 0; beta < cols; ++beta) {
            const RKey key{a, b, c, alpha, beta};
            const auto it = data.R.find(key);
            if (it == data.R.end())
                throw IncompleteData("missing R-symbol " + tuple_string({a, b, c, alpha, beta}), key.as_vector());
            out(alpha, beta) = it->second;
        }
    return out;
}

ValidationReport validate_symbols(const CategoryData& data)
{
    ValidationReport report;
    const FusionRing& ring = data.ring;
    const int m = ring.rank();
    auto in_range = [&](Label x) { return ring.contains(x); };

    for (const auto& [k, v] : data.F) {
        const bool labels_ok = in_range(k.a) && in_range(k.b) && in_range(k.c) && in_range(k.d) && in_range(k.e)
                               && in_range(k.f);
        const bool admissible = labels_ok && k.alpha >= 0 && k.alpha < ring.N(k.b, k.c, k.e) && k.beta >= 0
                                && k.beta < ring.N(k.a, k.e, k.d) && k.gamma >= 0 && k.gamma < ring.N(k.a, k.b, k.f)
                                && k.delta >= 0 && k.delta < ring.N(k.f, k.c, k.d);
        if (!admissible)
            report.violations.push_back({"f_inadmissible", k.as_vector(), "F-symbol key outside the admissible set"});
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            report.violations.push_back({"f_finite", k.as_vector(), "F-symbol is not finite"});
    }
    for (const auto& [k, v] : data.R) {
        const bool admissible = in_range(k.a) && in_range(k.b) && in_range(k.c) && k.alpha >= 0
                                && k.alpha < ring.N(k.a, k.b, k.c) && k.beta >= 0 && k.beta < ring.N(k.b, k.a, k.c);
        if (!admissible)
            report.violations.push_back({"r_inadmissible", k.as_vector(), "R-symbol key outside the admissible set"});
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            report.violations.push_back({"r_finite", k.as_vector(), "R-symbol is not finite"});
    }

    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                for (Label d = 0; d < m; ++d)
                    for (Label e = 0; e < m; ++e)
                        for (Label f = 0; f < m; ++f)
                            for (int alpha = 0; alpha < ring.N(b, c, e); ++alpha)
                                for (int beta = 0; beta < ring.N(a, e, d); ++beta)
                                    for (int gamma = 0; gamma < ring.N(a, b, f); ++gamma)
                                        for (int delta = 0; delta < ring.N(f, c, d); ++delta) {
                                            const FKey key{a, b, c, d, e, f, alpha, beta, gamma, delta};
                                            if (!data.F.contains(key))
                                                report.violations.push_back(
                                                    {"f_missing", key.as_vector(), "admissible F-symbol missing"});
                                        }
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                for (int alpha = 0; alpha < ring.N(a, b, c); ++alpha)
                    for (int beta = 0; beta < ring.N(b, a, c); ++beta) {
                        const RKey key{a, b, c, alpha, beta};
                        if (!data.R.contains(key))
                            report.violations.push_back({"r_missing", key.as_vector(), "admissible R-symbol missing"});
                    }
    return report;
}

Complex rigidity_scalar(const CategoryData& data, Label a, Scalar tolerance)
{
    const Label ad = data.ring.dual(a);
    const LabeledMatrix fm = f_matrix(data, a, ad, a, a);
    const BlockLayout layout = block_layout(data.ring, a, ad, a, a);
    const Complex value = fm.matrix(layout.bc_offset[kUnit], layout.ab_offset[kUnit]);
    if (std::abs(value) < tolerance) {
        std::ostringstream os;
        os << "rigidity scalar of label " << a << " is " << value << ", below tolerance " << tolerance;
        throw RigidityDegenerate(os.str());
    }
    return value;
}

Scalar f_inverse_unit_check(const CategoryData& data, Label a)
{
    const Label ad = data.ring.dual(a);
    const LabeledMatrix fm = f_matrix(data, a, ad, a, a);
    const BlockLayout layout = block_layout(data.ring, a, ad, a, a);
    Eigen::FullPivLU<MatrixXc> lu(fm.matrix);
    if (!lu.isInvertible())
        throw InputError("fusing matrix (a,dual(a),a,a) is singular for label " + std::to_string(a));
    const MatrixXc inv = lu.inverse();
    const int row = layout.bc_offset[kUnit], col = layout.ab_offset[kUnit];
    return std::abs(inv(col, row) - fm.matrix(row, col));
}

MatrixXc GaugeTransform::block(const FusionRing& ring, Label a, Label b, Label c) const
{
    if (const auto it = blocks.find({a, b, c}); it != blocks.end())
        return it->second;
    const int n = ring.N(a, b, c);
    return MatrixXc::Identity(n, n);
}

namespace detail {

MatrixXc checked_inverse(const MatrixXc& m, const char* what)
{
    Eigen::FullPivLU<MatrixXc> lu(m);
    if (m.rows() != m.cols() || !lu.isInvertible())
        throw InputError(std::string(what) + " is not invertible");
    return lu.inverse();
}

FBlocks::FBlocks(const CategoryData& data, bool with_inverses) : ring_(&data.ring)
{
    const int m = ring_->rank();
    const auto total = static_cast<std::size_t>(m) * m * m * m;
    layouts_.resize(total);
    tree_.resize(total);
    if (with_inverses)
        inverse_.resize(total);
    MatrixXc block;
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                for (Label d = 0; d < m; ++d) {
                    const auto i = idx(a, b, c, d);
                    layouts_[i] = block_layout(*ring_, a, b, c, d);
                    if (layouts_[i].dim == 0)
                        continue;
                    fill_f_block(data, a, b, c, d, layouts_[i], block);
                    tree_[i] = block.transpose();
                    if (with_inverses)
                        inverse_[i] = checked_inverse(tree_[i], "fusing matrix");
                }
}

RBlocks::RBlocks(const CategoryData& data, BraidDirection direction) : rank_(data.ring.rank())
{
    const int m = rank_;
    blocks_.resize(static_cast<std::size_t>(m) * m * m);
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c) {
                if (data.ring.N(a, b, c) == 0 && data.ring.N(b, a, c) == 0)
                    continue;
                blocks_[idx(a, b, c)] = direction == BraidDirection::braid
                                            ? r_matrix(data, a, b, c)
                                            : checked_inverse(r_matrix(data, b, a, c), "R-block");
            }
}

}  // namespace detail

}  // namespace mtcat
