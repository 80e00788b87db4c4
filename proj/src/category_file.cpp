#include "mtcat/category_file.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace mtcat {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what)
{
    throw SchemaError(where + ": " + what);
}

const json& require(const json& doc, const char* key)
{
    if (!doc.contains(key))
        schema_fail(key, "missing required field");
    return doc.at(key);
}

int as_int(const json& v, const std::string& where)
{
    if (!v.is_number_integer())
        schema_fail(where, "expected an integer");
    return v.get<int>();
}

Scalar as_real(const json& v, const std::string& where)
{
    if (!v.is_number())
        schema_fail(where, "expected a number");
    return v.get<Scalar>();
}

const json& as_row(const json& v, std::size_t width, const std::string& where)
{
    if (!v.is_array() || v.size() != width)
        schema_fail(where, "expected an array of " + std::to_string(width) + " numbers");
    return v;
}

std::string where(const char* field, std::size_t i) { return std::string(field) + "[" + std::to_string(i) + "]"; }

std::string key_string(const std::vector<int>& key)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < key.size(); ++i)
        os << (i ? "," : "") << key[i];
    os << ')';
    return os.str();
}

std::string summarize(const ValidationReport& report)
{
    std::ostringstream os;
    os << report.violations.size() << " violation(s)";
    const std::size_t shown = std::min<std::size_t>(report.violations.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& v = report.violations[i];
        os << "; " << v.invariant << ' ' << key_string(v.witness) << ": " << v.message;
    }
    return os.str();
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed category file: ") + e.what());
    }
}

CategoryData validated(CategoryData data)
{
    const ValidationReport ring_report = validate_ring(data.ring);
    if (!ring_report.ok())
        throw ValidationError("fusion ring invalid: " + summarize(ring_report), ring_report);
    const ValidationReport symbol_report = validate_symbols(data);
    if (!symbol_report.ok())
        throw ValidationError("symbol tables invalid: " + summarize(symbol_report), symbol_report);
    return data;
}

}  // namespace

json to_json(const CategoryData& data)
{
    const FusionRing& ring = data.ring;
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["name"] = data.name;
    doc["labels"] = ring.names();
    doc["dual"] = ring.duals();

    json fusion = json::array();
    for (Label a = 0; a < ring.rank(); ++a)
        for (Label b = 0; b < ring.rank(); ++b)
            for (Label c = 0; c < ring.rank(); ++c)
                if (const int n = ring.N(a, b, c); n != 0)
                    fusion.push_back({a, b, c, n});
    doc["fusion"] = std::move(fusion);

    json f = json::array();
    for (const auto& [k, v] : data.F)
        f.push_back({k.a, k.b, k.c, k.d, k.e, k.f, k.alpha + 1, k.beta + 1, k.gamma + 1, k.delta + 1, v.real(), v.imag()});
    doc["f_symbols"] = std::move(f);

    json r = json::array();
    for (const auto& [k, v] : data.R)
        r.push_back({k.a, k.b, k.c, k.alpha + 1, k.beta + 1, v.real(), v.imag()});
    doc["r_symbols"] = std::move(r);

    if (data.weights) {
        json w = json::array();
        for (std::size_t a = 0; a < data.weights->size(); ++a)
            w.push_back({a, (*data.weights)[a]});
        doc["weights"] = std::move(w);
    }
    if (data.central_charge)
        doc["central_charge"] = *data.central_charge;
    return doc;
}

CategoryData from_json(const json& doc)
{
    if (!doc.is_object())
        schema_fail("document", "expected a JSON object");
    const int version = as_int(require(doc, "schema_version"), "schema_version");
    if (version != kSchemaVersion)
        schema_fail("schema_version", "unsupported version " + std::to_string(version));

    CategoryData data;
    if (const json& name = require(doc, "name"); name.is_string())
        data.name = name.get<std::string>();
    else
        schema_fail("name", "expected a string");

    const json& labels = require(doc, "labels");
    if (!labels.is_array() || labels.empty())
        schema_fail("labels", "expected a non-empty array of strings");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i].is_string())
            schema_fail(where("labels", i), "expected a string");
        names.push_back(labels[i].get<std::string>());
    }
    const int m = static_cast<int>(names.size());
    auto check_label = [m](const json& v, const std::string& at) {
        const int x = as_int(v, at);
        if (x < 0 || x >= m)
            schema_fail(at, "label index " + std::to_string(x) + " out of range");
        return x;
    };

    const json& dual_doc = require(doc, "dual");
    if (!dual_doc.is_array() || static_cast<int>(dual_doc.size()) != m)
        schema_fail("dual", "expected one entry per label");
    std::vector<Label> dual;
    for (std::size_t i = 0; i < dual_doc.size(); ++i)
        dual.push_back(check_label(dual_doc[i], where("dual", i)));

    const json& fusion = require(doc, "fusion");
    if (!fusion.is_array())
        schema_fail("fusion", "expected an array");
    std::vector<int> mult(static_cast<std::size_t>(m) * m * m, 0);
    std::set<std::array<int, 3>> seen_fusion;
    for (std::size_t i = 0; i < fusion.size(); ++i) {
        const std::string at = where("fusion", i);
        const json& row = as_row(fusion[i], 4, at);
        const int a = check_label(row[0], at), b = check_label(row[1], at), c = check_label(row[2], at);
        const int n = as_int(row[3], at);
        if (n < 0)
            schema_fail(at, "negative multiplicity");
        if (!seen_fusion.insert({a, b, c}).second)
            schema_fail(at, "duplicate fusion key " + key_string({a, b, c}));
        mult[(static_cast<std::size_t>(a) * m + b) * m + c] = n;
    }
    data.ring = FusionRing(std::move(names), std::move(dual), std::move(mult));

    auto multiplicity = [](const json& v, const std::string& at) {
        const int x = as_int(v, at);
        if (x < 1)
            schema_fail(at, "multiplicity indices are one-based");
        return x - 1;
    };

    const json& f_doc = require(doc, "f_symbols");
    if (!f_doc.is_array())
        schema_fail("f_symbols", "expected an array");
    for (std::size_t i = 0; i < f_doc.size(); ++i) {
        const std::string at = where("f_symbols", i);
        const json& row = as_row(f_doc[i], 12, at);
        const FKey key{check_label(row[0], at), check_label(row[1], at), check_label(row[2], at),
                       check_label(row[3], at), check_label(row[4], at), check_label(row[5], at),
                       multiplicity(row[6], at),   multiplicity(row[7], at),   multiplicity(row[8], at),
                       multiplicity(row[9], at)};
        const Complex value(as_real(row[10], at), as_real(row[11], at));
        if (!data.F.emplace(key, value).second)
            schema_fail(at, "duplicate f_symbols key " + key_string(key.as_vector()));
    }

    const json& r_doc = require(doc, "r_symbols");
    if (!r_doc.is_array())
        schema_fail("r_symbols", "expected an array");
    for (std::size_t i = 0; i < r_doc.size(); ++i) {
        const std::string at = where("r_symbols", i);
        const json& row = as_row(r_doc[i], 7, at);
        const RKey key{check_label(row[0], at), check_label(row[1], at), check_label(row[2], at),
                       multiplicity(row[3], at), multiplicity(row[4], at)};
        const Complex value(as_real(row[5], at), as_real(row[6], at));
        if (!data.R.emplace(key, value).second)
            schema_fail(at, "duplicate r_symbols key " + key_string(key.as_vector()));
    }

    if (doc.contains("weights") && !doc.at("weights").is_null()) {
        const json& w_doc = doc.at("weights");
        if (!w_doc.is_array() || static_cast<int>(w_doc.size()) != m)
            schema_fail("weights", "expected one [label, h] pair per label");
        std::vector<Scalar> weights(m, 0);
        std::vector<bool> seen(m, false);
        for (std::size_t i = 0; i < w_doc.size(); ++i) {
            const std::string at = where("weights", i);
            const json& row = as_row(w_doc[i], 2, at);
            const int a = check_label(row[0], at);
            if (seen[a])
                schema_fail(at, "duplicate weight for label " + std::to_string(a));
            seen[a] = true;
            weights[a] = as_real(row[1], at);
        }
        data.weights = std::move(weights);
    }
    if (doc.contains("central_charge") && !doc.at("central_charge").is_null())
        data.central_charge = as_real(doc.at("central_charge"), "central_charge");
    return data;
}

CategoryData parse_category(const std::string& text) { return validated(from_json(parse_text(text))); }

std::string serialize(const CategoryData& data) { return to_json(data).dump(1) + "\n"; }

void save(const CategoryData& data, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << serialize(data);
    if (!out)
        throw InputError("failed writing " + path.string());
}

CategoryData load(const std::filesystem::path& path) { return parse_category(read_file(path)); }

CategoryData load_unvalidated(const std::filesystem::path& path) { return from_json(parse_text(read_file(path))); }

std::string content_hash(const CategoryData& data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : serialize(data)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace mtcat
