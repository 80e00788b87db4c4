#include "mtcat/report.hpp"

#include <cstdio>
#include <sstream>

#include "mtcat/category_file.hpp"

namespace mtcat {

using nlohmann::json;

namespace {

std::optional<Scalar> lookup(const std::map<std::string, Scalar>& m, const std::string& key)
{
    if (const auto it = m.find(key); it != m.end())
        return it->second;
    return std::nullopt;
}

std::optional<Scalar> max_of(const std::map<std::string, Scalar>& m, std::initializer_list<const char*> keys,
                             bool all_required)
{
    std::optional<Scalar> out;
    for (const char* k : keys) {
        const auto v = lookup(m, k);
        if (!v) {
            if (all_required)
                return std::nullopt;
            continue;
        }
        out = out ? std::max(*out, *v) : *v;
    }
    return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const VectorXc& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(complex_json(v[i]));
    return out;
}

json matrix_json(const MatrixXc& m)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(complex_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

std::string fmt(const char* spec, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::string complex_text(Complex z) { return fmt("%+.12f", z.real()) + " " + fmt("%+.12f", z.imag()) + "i"; }

}  // namespace

const char* to_string(Check c)
{
    switch (c) {
    case Check::pentagon:
        return "pentagon";
    case Check::hexagon:
        return "hexagon";
    case Check::triangle:
        return "triangle";
    case Check::ribbon:
        return "ribbon";
    case Check::rigidity:
        return "rigidity";
    case Check::modularity:
        return "modularity";
    }
    return "?";
}

std::set<Check> all_checks()
{
    return {Check::pentagon, Check::hexagon, Check::triangle, Check::ribbon, Check::rigidity, Check::modularity};
}

std::set<Check> parse_checks(const std::string& list)
{
    std::set<Check> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        bool found = false;
        for (Check c : all_checks())
            if (item == to_string(c)) {
                out.insert(c);
                found = true;
            }
        if (!found)
            throw InputError("unknown check '" + item + "'");
    }
    if (out.empty())
        throw InputError("no checks requested");
    return out;
}

ReportFile run_report(const CategoryData& data, const std::set<Check>& checks, Scalar tolerance)
{
    ReportFile report;
    report.tolerance = tolerance;
    report.options.tolerance = tolerance;
    report.input_hash = content_hash(data);
    report.modular = check_modular(data, report.options);
    const auto& res = report.modular.residuals;

    for (Check c : checks) {
        CheckResult r;
        r.threshold = tolerance;
        switch (c) {
        case Check::pentagon:
            r.residual = lookup(res, "pentagon");
            break;
        case Check::hexagon:
            r.residual = max_of(res, {"hexagon_braid", "hexagon_inverse"}, true);
            break;
        case Check::triangle:
            r.residual = lookup(res, "triangle");
            break;
        case Check::ribbon:
            r.residual = lookup(res, "ribbon");
            if (r.residual)
                r.residual = max_of(res, {"ribbon", "weights"}, false);
            break;
        case Check::rigidity:
            r.residual = lookup(res, "rigidity_inverse_unit");
            break;
        case Check::modularity:
            if (report.modular.verdict == Verdict::modular)
                r.residual = max_of(res,
                                    {"verlinde", "s_squared_charge_conjugation", "gauss_modulus", "st_cubed",
                                     "st_cubed_normalized", "central_charge"},
                                    false);
            break;
        }
        r.pass = r.residual.has_value() && *r.residual < r.threshold;
        if (c == Check::rigidity) {
            const auto modulus = lookup(res, "rigidity_min_modulus");
            r.pass = r.pass && modulus && *modulus >= tolerance;
        }
        report.checks[to_string(c)] = r;
    }
    return report;
}

bool ReportFile::all_pass() const
{
    for (const auto& [name, r] : checks)
        if (!r.pass)
            return false;
    return true;
}

json ReportFile::to_json() const
{
    json doc;
    json checks_doc = json::object();
    for (const auto& [name, r] : checks)
        checks_doc[name] = {{"residual", r.residual ? json(*r.residual) : json(nullptr)},
                            {"threshold", r.threshold},
                            {"pass", r.pass}};
    doc["checks"] = std::move(checks_doc);
    doc["verdict"] = to_string(modular.verdict);

    json residuals = json::object();
    for (const auto& [name, v] : modular.residuals)
        residuals[name] = v;
    doc["residuals"] = std::move(residuals);

    json matrices = json::object();
    matrices["dims"] = vector_json(modular.dims);
    json fp = json::array();
    for (Eigen::Index i = 0; i < modular.fp_dims.size(); ++i)
        fp.push_back(modular.fp_dims[i]);
    matrices["fp_dims"] = std::move(fp);
    matrices["twists"] = vector_json(modular.twists);
    matrices["s_tilde"] = matrix_json(modular.s_tilde.entries);
    matrices["s_norm"] = matrix_json(modular.s_norm.entries);
    matrices["t"] = vector_json(modular.t_diag);
    doc["matrices"] = std::move(matrices);

    doc["global_dim_sq"] = modular.global_dim_sq;
    doc["gauss_sums"] = {{"p_plus", complex_json(modular.gauss_sums.first)},
                         {"p_minus", complex_json(modular.gauss_sums.second)}};
    doc["s_condition"] = modular.s_condition;
    doc["notes"] = modular.notes;
    doc["provenance"] = {{"input_hash", "fnv1a64:" + input_hash},
                         {"tool_version", kToolVersion},
                         {"tolerance", tolerance},
                         {"coherence_threshold", options.coherence_threshold},
                         {"degeneracy_threshold", options.degeneracy_threshold}};
    return doc;
}

std::string ReportFile::to_text(const FusionRing& ring) const
{
    std::ostringstream os;
    os << "check        residual          threshold   result\n";
    for (const auto& [name, r] : checks) {
        char line[128];
        std::snprintf(line, sizeof line, "%-12s %-17s %-11.3g %s\n", name.c_str(),
                      r.residual ? fmt("%.6e", *r.residual).c_str() : "n/a", r.threshold, r.pass ? "PASS" : "FAIL");
        os << line;
    }
    os << "\nverdict: " << to_string(modular.verdict) << "\n";
    for (const auto& note : modular.notes)
        os << "note: " << note << "\n";

    if (modular.dims.size() == ring.rank() && modular.twists.size() == ring.rank()) {
        os << "\nlabel        dimension                              twist\n";
        for (Label a = 0; a < ring.rank(); ++a) {
            char line[160];
            std::snprintf(line, sizeof line, "%-12s %-38s %s\n", ring.name(a).c_str(),
                          complex_text(modular.dims[a]).c_str(), complex_text(modular.twists[a]).c_str());
            os << line;
        }
        os << "\nD^2 = " << fmt("%.12f", modular.global_dim_sq) << "\n";
    }
    os << "\ninput " << input_hash << ", " << kToolVersion << ", tol " << fmt("%g", tolerance) << "\n";
    return os.str();
}

}  // namespace mtcat
