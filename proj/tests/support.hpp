#pragma once

#include <cmath>
#include <tuple>
#include <vector>

#include "mtcat/catalog.hpp"

namespace support {

inline const double phi = (1 + std::sqrt(5.0)) / 2;

inline mtcat::CategoryData trivial() { return mtcat::generate({mtcat::Family::trivial}); }
inline mtcat::CategoryData fibonacci() { return mtcat::generate({mtcat::Family::fibonacci}); }
inline mtcat::CategoryData ising() { return mtcat::generate({mtcat::Family::ising}); }
inline mtcat::CategoryData pointed(int n, int q) { return mtcat::generate({mtcat::Family::pointed_zn, n, q}); }
inline mtcat::CategoryData semion() { return pointed(2, 1); }
inline mtcat::CategoryData rep_z2() { return pointed(2, 0); }
inline mtcat::CategoryData su2(int k)
{
    mtcat::CatalogSpec s;
    s.family = mtcat::Family::su2_level;
    s.level = k;
    return mtcat::generate(s);
}

/// Ring from explicit (a,b,c,N) rules.
inline mtcat::FusionRing ring(std::vector<std::string> names, std::vector<mtcat::Label> dual,
                              const std::vector<std::tuple<int, int, int, int>>& rules)
{
    const auto m = names.size();
    std::vector<int> mult(m * m * m, 0);
    for (auto [a, b, c, n] : rules)
        mult[(a * m + b) * m + c] = n;
    return mtcat::FusionRing(std::move(names), std::move(dual), std::move(mult));
}

inline double max_diff(const mtcat::MatrixXc& x, const mtcat::MatrixXc& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace support
