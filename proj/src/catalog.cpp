#include "mtcat/catalog.hpp"

#include <cmath>
#include <functional>

#include "mtcat/ribbon_modular.hpp"

namespace mtcat {

namespace {

using Fusion = std::function<int(Label, Label, Label)>;
// Tree-orientation entry: (ab)c channel x, a(bc) channel y.
using FusingEntry = std::function<Complex(Label, Label, Label, Label, Label, Label)>;
using BraidingEntry = std::function<Complex(Label, Label, Label)>;

FusionRing make_ring(std::vector<std::string> names, std::vector<Label> dual, const Fusion& rule)
{
    const int m = static_cast<int>(names.size());
    std::vector<int> mult(static_cast<std::size_t>(m) * m * m);
    std::size_t i = 0;
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                mult[i++] = rule(a, b, c);
    return FusionRing(std::move(names), std::move(dual), std::move(mult));
}

// Multiplicity-free assembly. Blocks with a unit among (a,b,c) are written as
// exact identities regardless of `fusing`.
void fill_symbols(CategoryData& data, const FusingEntry& fusing, const BraidingEntry& braiding)
{
    const FusionRing& ring = data.ring;
    const int m = ring.rank();
    for (Label a = 0; a < m; ++a)
    for (Label b = 0; b < m; ++b)
    for (Label c = 0; c < m; ++c)
    for (Label d = 0; d < m; ++d) {
        const bool unit_block = a == kUnit || b == kUnit || c == kUnit;
        for (Label e = 0; e < m; ++e) {
            if (ring.N(b, c, e) == 0 || ring.N(a, e, d) == 0)
                continue;
            for (Label f = 0; f < m; ++f) {
                if (ring.N(a, b, f) == 0 || ring.N(f, c, d) == 0)
                    continue;
                const Complex value = unit_block ? Complex{1} : fusing(a, b, c, d, f, e);
                data.F[FKey{a, b, c, d, e, f, 0, 0, 0, 0}] = value;
            }
        }
    }
    for (Label a = 0; a < m; ++a)
        for (Label b = 0; b < m; ++b)
            for (Label c = 0; c < m; ++c)
                if (ring.N(a, b, c) > 0)
                    data.R[RKey{a, b, c, 0, 0}] = (a == kUnit || b == kUnit) ? Complex{1} : braiding(a, b, c);
}

CategoryData trivial()
{
    CategoryData data;
    data.name = "trivial";
    data.ring = make_ring({"1"}, {0}, [](Label, Label, Label) { return 1; });
    fill_symbols(data, nullptr, nullptr);
    data.weights = std::vector<Scalar>{0};
    data.central_charge = 0;
    return data;
}

CategoryData pointed(int n, int q)
{
    if (n < 1)
        throw InputError("pointed_zn needs n >= 1");
    if (q < 0 || q >= 2 * n || (q * n) % 2 != 0)
        throw InputError("pointed_zn needs 0 <= q < 2n with q*n even");

    CategoryData data;
    data.name = "pointed_z" + std::to_string(n) + "_q" + std::to_string(q);
    std::vector<std::string> names;
    std::vector<Label> dual;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        dual.push_back((n - a) % n);
    }
    data.ring = make_ring(std::move(names), std::move(dual),
                          [n](Label a, Label b, Label c) { return (a + b) % n == c ? 1 : 0; });

    // 3-cocycle paired with the quadratic form exp(pi i q a^2 / n).
    const auto fusing = [n, q](Label a, Label b, Label c, Label, Label, Label) {
        const int carry = b + c >= n ? n : 0;
        return expi(kPi * q * a * carry / n);
    };
    const auto braiding = [n, q](Label a, Label b, Label) { return expi(kPi * q * a * b / n); };
    fill_symbols(data, fusing, braiding);

    std::vector<Scalar> weights;
    Complex gauss = 0;
    for (int a = 0; a < n; ++a) {
        // theta_a = d_a^{-1} R[a,a,2a] with d_a = (-1)^{q a}.
        const Scalar h = static_cast<Scalar>(q) * a * a / (2.0 * n) + (q * a % 2) / 2.0;
        weights.push_back(h - std::floor(h));
        gauss += expi(2 * kPi * weights.back());
    }
    data.weights = weights;
    Scalar c = 0;
    if (std::abs(gauss) > 1e-9) {
        c = std::arg(gauss) / (2 * kPi / 8);
        if (c < 0)
            c += 8;
        if (std::abs(c - std::round(c)) < 1e-9)
            c = std::round(c);
        if (c >= 8)
            c -= 8;
    }
    data.central_charge = c;
    return data;
}

CategoryData fibonacci()
{
    constexpr Label tau = 1;
    CategoryData data;
    data.name = "fibonacci";
    data.ring = make_ring({"1", "tau"}, {0, 1}, [](Label a, Label b, Label c) {
        if (a == 0)
            return b == c ? 1 : 0;
        if (b == 0)
            return a == c ? 1 : 0;
        return 1;  // tau x tau = 1 + tau
    });
    const Scalar phi = (1 + std::sqrt(5.0)) / 2;
    const auto fusing = [phi](Label a, Label b, Label c, Label d, Label x, Label y) -> Complex {
        if (a == tau && b == tau && c == tau && d == tau) {
            if (x == 0 && y == 0)
                return 1 / phi;
            if (x == tau && y == tau)
                return -1 / phi;
            return 1 / std::sqrt(phi);
        }
        return 1;
    };
    const auto braiding = [](Label, Label, Label c) { return c == 0 ? expi(-4 * kPi / 5) : expi(3 * kPi / 5); };
    fill_symbols(data, fusing, braiding);
    data.weights = std::vector<Scalar>{0, 2.0 / 5};
    data.central_charge = 14.0 / 5;
    return data;
}

CategoryData ising()
{
    constexpr Label sigma = 1, psi = 2;
    CategoryData data;
    data.name = "ising";
    data.ring = make_ring({"1", "sigma", "psi"}, {0, 1, 2}, [](Label a, Label b, Label c) {
        if (a == 0)
            return b == c ? 1 : 0;
        if (b == 0)
            return a == c ? 1 : 0;
        if (a == sigma && b == sigma)
            return c == 0 || c == psi ? 1 : 0;
        if (a == psi && b == psi)
            return c == 0 ? 1 : 0;
        return c == sigma ? 1 : 0;  // sigma x psi = psi x sigma = sigma
    });
    const auto fusing = [](Label a, Label b, Label c, Label d, Label x, Label y) -> Complex {
        if (a == sigma && b == sigma && c == sigma && d == sigma)
            return (x == psi && y == psi ? -1.0 : 1.0) / std::sqrt(2.0);
        if (a == sigma && b == psi && c == sigma && d == psi)
            return -1;
        if (a == psi && b == sigma && c == psi && d == sigma)
            return -1;
        return 1;
    };
    const auto braiding = [](Label a, Label b, Label c) -> Complex {
        if (a == sigma && b == sigma)
            return c == 0 ? expi(-kPi / 8) : expi(3 * kPi / 8);
        if (a == psi && b == psi)
            return -1;
        return Complex(0, -1);
    };
    fill_symbols(data, fusing, braiding);
    data.weights = std::vector<Scalar>{0, 1.0 / 16, 1.0 / 2};
    data.central_charge = 0.5;
    return data;
}

CategoryData su2_level(int k)
{
    if (k < 0 || k > 12)
        throw InputError("su2_level supports 0 <= k <= 12");
    CategoryData data;
    data.name = "su2_level_" + std::to_string(k);
    std::vector<std::string> names;
    std::vector<Label> dual;
    for (int a = 0; a <= k; ++a) {
        names.push_back(std::to_string(a));
        dual.push_back(a);
    }
    data.ring = make_ring(std::move(names), std::move(dual),
                          [k](Label a, Label b, Label c) { return su2::admissible(k, a, b, c) ? 1 : 0; });

    const auto fusing = [k](Label a, Label b, Label c, Label d, Label x, Label y) -> Complex {
        return su2::fusing_entry(k, a, b, c, d, x, y);
    };
    // Standard braiding times the grading bicharacter (-1)^{ab}, which keeps
    // theta_j = exp(2 pi i h_j) when d_j = 1/F carries the sign (-1)^{2j}.
    const auto braiding = [k](Label a, Label b, Label c) -> Complex {
        const Scalar casimir = (c * (c + 2) - a * (a + 2) - b * (b + 2)) / 4.0;
        const int spin_gap = (c - a - b) / 2;
        const Scalar sign = ((spin_gap + a * b) % 2 == 0) ? 1 : -1;
        return sign * expi(kPi * casimir / (k + 2));
    };
    fill_symbols(data, fusing, braiding);

    std::vector<Scalar> weights;
    for (int a = 0; a <= k; ++a)
        weights.push_back(a * (a + 2) / (4.0 * (k + 2)));
    data.weights = weights;
    data.central_charge = 3.0 * k / (k + 2);
    return data;
}

}  // namespace

Family parse_family(const std::string& name)
{
    if (name == "trivial")
        return Family::trivial;
    if (name == "pointed_zn" || name == "pointed")
        return Family::pointed_zn;
    if (name == "fibonacci")
        return Family::fibonacci;
    if (name == "ising")
        return Family::ising;
    if (name == "su2_level" || name == "su2")
        return Family::su2_level;
    throw InputError("unknown family '" + name + "'");
}

const char* to_string(Family f)
{
    switch (f) {
    case Family::trivial:
        return "trivial";
    case Family::pointed_zn:
        return "pointed_zn";
    case Family::fibonacci:
        return "fibonacci";
    case Family::ising:
        return "ising";
    case Family::su2_level:
        return "su2_level";
    }
    return "?";
}

CategoryData generate(const CatalogSpec& spec)
{
    switch (spec.family) {
    case Family::trivial:
        return trivial();
    case Family::pointed_zn:
        return pointed(spec.n, spec.q);
    case Family::fibonacci:
        return fibonacci();
    case Family::ising:
        return ising();
    case Family::su2_level:
        return su2_level(spec.level);
    }
    throw InputError("unknown family");
}

std::vector<CatalogSpec> catalog_specs(int max_level, int max_n)
{
    std::vector<CatalogSpec> out;
    out.push_back({Family::trivial});
    for (int n = 1; n <= max_n; ++n)
        for (int q = 0; q < 2 * n; ++q)
            if ((q * n) % 2 == 0)
                out.push_back({Family::pointed_zn, n, q});
    out.push_back({Family::fibonacci});
    out.push_back({Family::ising});
    for (int k = 0; k <= max_level; ++k)
        out.push_back({Family::su2_level, 1, 0, k});
    return out;
}

}  // namespace mtcat
