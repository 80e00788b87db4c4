// mtcat: verification and modular-data tool for skeletal braided fusion categories.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mtcat/catalog.hpp"
#include "mtcat/category_file.hpp"
#include "mtcat/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

constexpr mtcat::Scalar kVerlindeThreshold = 1e-6;

std::string complex_text(mtcat::Complex z)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "%+.12f%+.12fi", z.real(), z.imag());
    return buf;
}

void print_matrix(const mtcat::MatrixXc& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            std::cout << (j ? "  " : "") << complex_text(m(i, j));
        std::cout << '\n';
    }
}

int cmd_validate(const std::string& path)
{
    const mtcat::CategoryData data = mtcat::load_unvalidated(path);
    auto report = mtcat::validate_ring(data.ring);
    if (report.ok())
        report = mtcat::validate_symbols(data);
    for (const auto& v : report.violations) {
        std::cout << v.invariant << " (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            std::cout << (i ? "," : "") << v.witness[i];
        std::cout << "): " << v.message << '\n';
    }
    if (!report.ok())
        return kExitFail;
    std::cout << data.name << ": " << data.rank() << " labels, " << data.F.size() << " F-symbols, " << data.R.size()
              << " R-symbols, valid\n";
    return kExitPass;
}

int cmd_verify(const std::string& path, const std::string& checks, mtcat::Scalar tol, bool json)
{
    const mtcat::CategoryData data = mtcat::load(path);
    const mtcat::ReportFile report = mtcat::run_report(data, mtcat::parse_checks(checks), tol);
    if (json)
        std::cout << report.to_json().dump(1) << '\n';
    else
        std::cout << report.to_text(data.ring);
    return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_dims(const std::string& path)
{
    const mtcat::CategoryData data = mtcat::load(path);
    const mtcat::VectorXc dims = mtcat::quantum_dimensions(data);
    const mtcat::VectorXc twists = mtcat::twists_from_braiding(data);
    const mtcat::VectorXr fp = mtcat::fp_dimensions(data.ring);
    std::printf("%-12s %-34s %-16s %s\n", "label", "dimension", "fp_dimension", "twist");
    for (mtcat::Label a = 0; a < data.rank(); ++a)
        std::printf("%-12s %-34s %-16.12f %s\n", data.ring.name(a).c_str(), complex_text(dims[a]).c_str(), fp[a],
                    complex_text(twists[a]).c_str());
    return kExitPass;
}

mtcat::SMatrix normalized_s(const mtcat::CategoryData& data)
{
    const mtcat::SMatrix s_tilde = mtcat::s_matrix_unnormalized(data);
    const mtcat::Complex dim_sq = mtcat::quantum_dimensions(data).array().square().sum();
    return mtcat::normalize(s_tilde, std::sqrt(dim_sq.real()));
}

int cmd_smatrix(const std::string& path, bool normalized)
{
    const mtcat::CategoryData data = mtcat::load(path);
    print_matrix(normalized ? normalized_s(data).entries : mtcat::s_matrix_unnormalized(data).entries);
    return kExitPass;
}

int cmd_verlinde(const std::string& path)
{
    const mtcat::CategoryData data = mtcat::load(path);
    mtcat::VerlindeResult v;
    try {
        v = mtcat::verlinde_coefficients(normalized_s(data));
    } catch (const mtcat::DegenerateSMatrix& e) {
        std::cout << "degenerate: " << e.what() << '\n';
        return kExitFail;
    }
    const int m = data.rank();
    for (mtcat::Label a = 0; a < m; ++a)
        for (mtcat::Label b = 0; b < m; ++b)
            for (mtcat::Label c = 0; c < m; ++c)
                if (v.rounded_at(a, b, c) != 0 || data.ring.N(a, b, c) != 0)
                    std::cout << "N[" << data.ring.name(a) << ',' << data.ring.name(b) << ',' << data.ring.name(c)
                              << "] = " << v.rounded_at(a, b, c) << "  raw " << complex_text(v.raw_at(a, b, c))
                              << "  file " << data.ring.N(a, b, c) << '\n';
    const mtcat::Scalar dev = mtcat::verlinde_deviation(v, data.ring);
    std::printf("max rounding error %.3e, max deviation from file %.3e\n", v.max_rounding_error, dev);
    return dev < kVerlindeThreshold ? kExitPass : kExitFail;
}

int cmd_gen(const std::string& family, int level, int n, int q, const std::string& out)
{
    mtcat::CatalogSpec spec;
    spec.family = mtcat::parse_family(family);
    spec.level = level;
    spec.n = n;
    spec.q = q;
    mtcat::save(mtcat::generate(spec), out);
    return kExitPass;
}

int cmd_gauge(const std::string& path, std::uint64_t seed, const std::string& out)
{
    const mtcat::CategoryData data = mtcat::load(path);
    mtcat::save(mtcat::gauge_transform(data, mtcat::random_gauge(data.ring, seed)), out);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification and modular data for braided fusion category files"};
    app.require_subcommand(1);

    std::string file, out, family, checks = "pentagon,hexagon,triangle,ribbon,rigidity,modularity";
    double tol = mtcat::kDefaultTolerance;
    bool json = false, text = false, normalized = false;
    int level = 0, n = 1, q = 0;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "Check the file schema and fusion ring invariants");
    validate->add_option("file", file, "Category file")->required();

    auto* verify = app.add_subcommand("verify", "Run coherence and modularity checks");
    verify->add_option("file", file, "Category file")->required();
    verify->add_option("--checks", checks, "Comma-separated: pentagon,hexagon,triangle,ribbon,rigidity,modularity");
    verify->add_option("--tol", tol, "Absolute tolerance")->check(CLI::PositiveNumber);
    auto* json_flag = verify->add_flag("--json", json, "Emit the JSON report");
    verify->add_flag("--text", text, "Emit the text report (default)")->excludes(json_flag);

    auto* dims = app.add_subcommand("dims", "Print quantum dimensions, FP dimensions and twists");
    dims->add_option("file", file, "Category file")->required();

    auto* smatrix = app.add_subcommand("smatrix", "Print the S-matrix");
    smatrix->add_option("file", file, "Category file")->required();
    smatrix->add_flag("--normalized", normalized, "Divide by the global dimension");

    auto* verlinde = app.add_subcommand("verlinde", "Recover fusion rules from the normalized S-matrix");
    verlinde->add_option("file", file, "Category file")->required();

    auto* gen = app.add_subcommand("gen", "Generate a catalog category");
    gen->add_option("family", family, "trivial | pointed_zn | fibonacci | ising | su2_level")->required();
    gen->add_option("--level", level, "Level k for su2_level");
    gen->add_option("--n", n, "Order n for pointed_zn");
    gen->add_option("--q", q, "Quadratic form exponent for pointed_zn");
    gen->add_option("-o,--output", out, "Output file")->required();

    auto* gauge = app.add_subcommand("gauge", "Apply a seeded random gauge transformation");
    gauge->add_option("file", file, "Category file")->required();
    gauge->add_option("--seed", seed, "Random seed")->required();
    gauge->add_option("-o,--output", out, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (*validate)
            return cmd_validate(file);
        if (*verify)
            return cmd_verify(file, checks, tol, json);
        if (*dims)
            return cmd_dims(file);
        if (*smatrix)
            return cmd_smatrix(file, normalized);
        if (*verlinde)
            return cmd_verlinde(file);
        if (*gen)
            return cmd_gen(family, level, n, q, out);
        if (*gauge)
            return cmd_gauge(file, seed, out);
    } catch (const mtcat::Error& e) {
        std::cerr << "mtcat: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
