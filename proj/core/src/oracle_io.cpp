#include <string>

#include "frechet/errors.hpp"
#include "frechet/oracle_1d.hpp"
#include "json.hpp"

namespace frechet {

namespace {

constexpr int kFormatVersion = 1;

using nlohmann::json;

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t positive_int(const json& v, const char* name) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw FormatError(std::string("field '") + name + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::string serialize_oracle(const OracleHandle& oracle) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["n"] = oracle.n;
  doc["m"] = oracle.m;
  doc["delta_m"] = oracle.cs.delta_m;
  doc["centers"] = oracle.cs.centers;
  doc["counts"] = oracle.cs.counts;
  doc["signs"] = oracle.cs.signs;
  return doc.dump();
}

OracleHandle deserialize_oracle(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed oracle payload: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("oracle payload must be a JSON object");
  const json& version = field(doc, "format_version");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    throw FormatError("unsupported format_version " + version.dump());
  }
  OracleHandle h;
  try {
    h.n = positive_int(field(doc, "n"), "n");
    h.m = positive_int(field(doc, "m"), "m");
    const json& delta = field(doc, "delta_m");
    if (!delta.is_number()) throw FormatError("field 'delta_m' must be a number");
    h.cs.delta_m = delta.get<double>();
    for (const json& c : field(doc, "centers")) {
      if (!c.is_number()) throw FormatError("centers must be numbers");
      h.cs.centers.push_back(c.get<double>());
    }
    for (const json& c : field(doc, "counts")) h.cs.counts.push_back(positive_int(c, "counts"));
    for (const json& s : field(doc, "signs")) {
      if (!s.is_number_integer()) throw FormatError("signs must be integers");
      h.cs.signs.push_back(s.get<int>());
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed oracle payload: ") + e.what());
  }
  h.cs.validate();
  if (h.cs.runs() > h.m) throw FormatError("more runs than the budget m");
  if (h.cs.expanded_size() > h.n) throw FormatError("expanded curve longer than n");
  return h;
}

}  // namespace frechet
