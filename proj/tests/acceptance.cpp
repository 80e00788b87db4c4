// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "mtcat/catalog.hpp"
#include "mtcat/ribbon_modular.hpp"

using namespace mtcat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

double max_diff(const MatrixXc& x, const MatrixXc& y) { return (x - y).cwiseAbs().maxCoeff(); }

std::vector<CategoryData> catalog()
{
    std::vector<CategoryData> out;
    for (const auto& spec : catalog_specs(8, 6))
        out.push_back(generate(spec));
    return out;
}

CategoryData named(Family f, int n = 1, int q = 0, int level = 0) { return generate({f, n, q, level}); }

Outcome coherence_suite(const std::vector<CatalogSpec>& specs)
{
    const auto start = std::chrono::steady_clock::now();
    double worst = 0;
    std::string where;
    for (const auto& spec : specs) {
        const auto d = generate(spec);
        for (double r : {pentagon_residual(d).value, hexagon_residual(d, BraidDirection::braid).value,
                         hexagon_residual(d, BraidDirection::inverse_braid).value, triangle_residual(d),
                         ribbon_residual(d)})
            if (r >= worst) {
                worst = r;
                where = d.name;
            }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst < 1e-7 && secs < 60,
            std::to_string(specs.size()) + " entries, max residual " + sci(worst) + " (" + where + "), "
                + sci(secs) + " s"};
}

Outcome rigidity(const std::vector<CategoryData>& cat)
{
    double min_mod = 1e300, worst_inv = 0;
    for (const auto& d : cat)
        for (Label a = 0; a < d.rank(); ++a) {
            min_mod = std::min(min_mod, std::abs(rigidity_scalar(d, a, 0)));
            worst_inv = std::max(worst_inv, f_inverse_unit_check(d, a));
        }
    return {min_mod > 1e-6 && worst_inv < 1e-9,
            "min |F_a| " + sci(min_mod) + ", max inverse-unit deviation " + sci(worst_inv)};
}

Outcome dimensions()
{
    const double phi = (1 + std::sqrt(5.0)) / 2;
    const double tau = std::abs(quantum_dimension(named(Family::fibonacci), 1) - phi);
    const double sigma = std::abs(quantum_dimension(named(Family::ising), 1) - std::sqrt(2.0));
    const auto semion = named(Family::pointed_zn, 2, 1);
    const double s = std::abs(quantum_dimension(semion, 1) + 1.0);
    const double fp = std::abs(fp_dimensions(semion.ring)[1] - 1.0);
    return {tau < 1e-9 && sigma < 1e-9 && s < 1e-12 && fp < 1e-12,
            "|d_tau - phi| " + sci(tau) + ", |d_sigma - sqrt2| " + sci(sigma) + ", |d_semion + 1| " + sci(s)
                + ", |FPdim_semion - 1| " + sci(fp)};
}

Outcome two_route(const std::vector<CategoryData>& cat)
{
    double worst = 0;
    for (const auto& d : cat)
        worst = std::max(worst, max_diff(s_matrix_unnormalized(d).entries, s_matrix_balanced(d).entries));
    return {worst < 1e-9, "max |S~ - S~'| " + sci(worst)};
}

Outcome nondegeneracy()
{
    std::vector<std::pair<CategoryData, Verdict>> cases;
    cases.emplace_back(named(Family::fibonacci), Verdict::modular);
    cases.emplace_back(named(Family::ising), Verdict::modular);
    for (int k = 1; k <= 8; ++k)
        cases.emplace_back(named(Family::su2_level, 1, 0, k), Verdict::modular);
    for (const auto& spec : catalog_specs(0, 6))
        if (spec.family == Family::pointed_zn)
            cases.emplace_back(generate(spec),
                               std::gcd(spec.q, spec.n) == 1 ? Verdict::modular : Verdict::degenerate);
    int modular = 0, degenerate = 0;
    std::string wrong;
    for (const auto& [d, expect] : cases) {
        const Verdict got = check_modular(d).verdict;
        if (got != expect)
            wrong += " " + d.name + "=" + to_string(got);
        (expect == Verdict::modular ? modular : degenerate)++;
    }
    return {wrong.empty(), std::to_string(modular) + " modular and " + std::to_string(degenerate)
                               + " degenerate verdicts asserted" + (wrong.empty() ? "" : "; wrong:" + wrong)};
}

Outcome verlinde(const std::vector<CategoryData>& cat)
{
    double worst = 0;
    int count = 0;
    for (const auto& d : cat) {
        const auto r = check_modular(d);
        if (r.verdict != Verdict::modular)
            continue;
        ++count;
        worst = std::max(worst, verlinde_deviation(verlinde_coefficients(r.s_norm), d.ring));
    }
    return {worst < 1e-6, std::to_string(count) + " modular entries, max deviation " + sci(worst)};
}

Outcome balancing(const std::vector<CategoryData>& cat)
{
    double ribbon = 0, unit = 0, weights = 0;
    for (const auto& d : cat) {
        ribbon = std::max(ribbon, ribbon_residual(d));
        unit = std::max(unit, std::abs(twist_from_braiding(d, kUnit) - 1.0));
    }
    for (int k = 0; k <= 8; ++k) {
        const auto d = named(Family::su2_level, 1, 0, k);
        const auto t = twists_from_braiding(d);
        for (Label a = 0; a < d.rank(); ++a)
            weights = std::max(weights, std::abs(t[a] - expi(2 * kPi * (*d.weights)[a])));
    }
    return {ribbon < 1e-9 && unit < 1e-12 && weights < 1e-9,
            "ribbon " + sci(ribbon) + ", |theta_e - 1| " + sci(unit) + ", su2 |theta - e^{2 pi i h}| "
                + sci(weights)};
}

Outcome gauge(const std::vector<CategoryData>& cat)
{
    double drift = 0, pent = 0;
    for (const auto& d : cat) {
        const MatrixXc dims = quantum_dimensions(d), twists = twists_from_braiding(d);
        const MatrixXc s = s_matrix_unnormalized(d).entries;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto g = gauge_transform(d, random_gauge(d.ring, seed));
            drift = std::max({drift, max_diff(dims, quantum_dimensions(g)), max_diff(twists, twists_from_braiding(g)),
                              max_diff(s, s_matrix_unnormalized(g).entries)});
            pent = std::max(pent, pentagon_residual(g).value);
        }
    }
    return {drift < 1e-9 && pent < 1e-7,
            "20 gauges x " + std::to_string(cat.size()) + " entries, invariant drift " + sci(drift) + ", pentagon "
                + sci(pent)};
}

Outcome sl2z()
{
    const auto d = named(Family::ising);
    const VectorXc dims = quantum_dimensions(d), theta = twists_from_braiding(d);
    const double D = std::sqrt(dims.squaredNorm());
    const MatrixXc s = s_matrix_unnormalized(d).entries / D;
    const MatrixXc C = charge_conjugation(d.ring);
    const MatrixXc t = theta.asDiagonal();
    Complex p_plus = 0;
    for (Label a = 0; a < d.rank(); ++a)
        p_plus += dims[a] * dims[a] * theta[a];
    const MatrixXc st = s * t;
    const double s2 = max_diff(s * s, C);
    const double st3 = max_diff(st * st * st, (p_plus / D) * s * s);
    const double c = std::abs(p_plus / std::abs(p_plus) - expi(2 * kPi * 0.5 / 8));
    return {s2 < 1e-9 && st3 < 1e-9 && c < 1e-9,
            "|s^2 - C| " + sci(s2) + ", |(st)^3 - (p+/D) s^2| " + sci(st3) + ", |phase - e^{2 pi i c/8}| " + sci(c)};
}

Outcome negative_paths()
{
    const auto fib = named(Family::fibonacci);
    int flipped = 0, total = 0;
    double weakest = 1e300;
    for (const auto& [key, value] : fib.F) {
        auto d = fib;
        d.F[key] += 1e-3;
        const double r = std::max(pentagon_residual(d).value, triangle_residual(d));
        weakest = std::min(weakest, r);
        ++total;
        flipped += r >= 1e-4 && check_modular(d).verdict == Verdict::incoherent;
    }
    for (const auto& [key, value] : fib.R) {
        auto d = fib;
        d.R[key] += 1e-3;
        const double r = std::max(hexagon_residual(d, BraidDirection::braid).value,
                                  hexagon_residual(d, BraidDirection::inverse_braid).value);
        weakest = std::min(weakest, r);
        ++total;
        flipped += r >= 1e-4 && check_modular(d).verdict == Verdict::incoherent;
    }
    return {flipped == total, std::to_string(flipped) + "/" + std::to_string(total)
                                  + " perturbations flagged incoherent, weakest residual " + sci(weakest)};
}

}  // namespace

int main()
{
    const auto specs = catalog_specs(8, 6);
    const auto cat = catalog();

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"coherence suite", [&] { return coherence_suite(specs); }},
        {"rigidity scalar", [&] { return rigidity(cat); }},
        {"dimension theorem", dimensions},
        {"two-route S-matrix", [&] { return two_route(cat); }},
        {"nondegeneracy verdicts", nondegeneracy},
        {"Verlinde round-trip", [&] { return verlinde(cat); }},
        {"balancing axioms", [&] { return balancing(cat); }},
        {"gauge invariance", [&] { return gauge(cat); }},
        {"SL(2,Z) relations", sl2z},
        {"negative paths", negative_paths},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures ? 1 : 0;
}
