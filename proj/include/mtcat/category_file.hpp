#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mtcat/category_data.hpp"

namespace mtcat {

inline constexpr int kSchemaVersion = 1;

/// Malformed JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed JSON that does not follow the category file schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Schema-valid file whose ring or symbol tables break an invariant.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, ValidationReport report) : Error(what), report_(std::move(report)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Category file document:
///   schema_version  1
///   name            string
///   labels          [name, ...]           index 0 is the unit
///   dual            [index, ...]
///   fusion          [[a,b,c,N], ...]      nonzero multiplicities only
///   f_symbols       [[a,b,c,d,e,f,alpha,beta,gamma,delta,re,im], ...]
///   r_symbols       [[a,b,c,alpha,beta,re,im], ...]
///   weights         [[a,h], ...]          optional
///   central_charge  number                optional
/// Multiplicity indices are one-based in the file.
nlohmann::json to_json(const CategoryData& data);

/// Schema-checks a document. Does not validate ring invariants.
CategoryData from_json(const nlohmann::json& doc);

/// from_json() plus ring and symbol validation; throws ValidationError.
CategoryData parse_category(const std::string& text);

void save(const CategoryData& data, const std::filesystem::path& path);
CategoryData load(const std::filesystem::path& path);

/// Reads and schema-checks a file without validating ring invariants.
CategoryData load_unvalidated(const std::filesystem::path& path);

/// Serialized text of the canonical document, as written by save().
std::string serialize(const CategoryData& data);

/// FNV-1a 64-bit hash of serialize(data), as 16 hex digits.
std::string content_hash(const CategoryData& data);

}  // namespace mtcat
