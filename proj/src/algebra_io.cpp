#include "extlie/algebra_io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace extlie {

using nlohmann::json;

std::string write_algebra(const LieAlgebra& l) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"characteristic\": " << l.field().characteristic() << ",\n";
  out << "  \"dim\": " << l.dim() << ",\n";
  out << "  \"basis\": [";
  for (std::size_t i = 0; i < l.dim(); ++i) out << (i ? ", " : "") << json(l.basis_names()[i]).dump();
  out << "],\n";
  out << "  \"brackets\": [";
  bool first = true;
  for (const auto& [key, terms] : l.table()) {
    out << (first ? "\n" : ",\n");
    first = false;
    out << "    {\"i\": " << key.first << ", \"j\": " << key.second << ", \"terms\": [";
    for (std::size_t t = 0; t < terms.size(); ++t)
      out << (t ? ", " : "") << "[" << terms[t].index << ", " << json(terms[t].coeff.to_string()).dump() << "]";
    out << "]}";
  }
  out << (first ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

namespace {

std::size_t read_index(const json& v, const std::string& what, std::size_t n) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  auto x = v.get<std::int64_t>();
  if (x < 0 || static_cast<std::uint64_t>(x) >= n)
    throw ParseError(what + " out of range: " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

const json& field_of(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

LieAlgebra read_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");

  const json& ch = field_of(doc, "characteristic");
  if (!ch.is_number_integer()) throw ParseError("characteristic must be an integer");
  Field f;
  try {
    f = Field::of(ch.get<std::int64_t>());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }

  const json& dim = field_of(doc, "dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) throw ParseError("dim must be a positive integer");
  const auto n = static_cast<std::size_t>(dim.get<std::int64_t>());

  const json& basis = field_of(doc, "basis");
  if (!basis.is_array() || basis.size() != n) throw ParseError("basis must be an array of dim names");
  std::vector<std::string> names;
  std::set<std::string> seen_names;
  for (const auto& b : basis) {
    if (!b.is_string()) throw ParseError("basis names must be strings");
    if (!seen_names.insert(b.get<std::string>()).second)
      throw ParseError("duplicate basis name '" + b.get<std::string>() + "'");
    names.push_back(b.get<std::string>());
  }

  const json& brackets = field_of(doc, "brackets");
  if (!brackets.is_array()) throw ParseError("brackets must be an array");
  LieAlgebra::Table table;
  for (const auto& entry : brackets) {
    if (!entry.is_object()) throw ParseError("bracket entries must be objects");
    std::size_t i = read_index(field_of(entry, "i"), "bracket index i", n);
    std::size_t j = read_index(field_of(entry, "j"), "bracket index j", n);
    if (i >= j) throw ParseError("bracket entry needs i < j, got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    if (table.count({i, j})) throw ParseError("duplicate bracket entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    const json& terms = field_of(entry, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    std::vector<Term> out;
    std::set<std::size_t> seen;
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 2) throw ParseError("each term must be [k, \"coeff\"]");
      std::size_t k = read_index(t[0], "term index", n);
      if (!seen.insert(k).second) throw ParseError("duplicate term index " + std::to_string(k));
      if (!t[1].is_string()) throw ParseError("coefficients must be strings");
      Scalar c = Scalar::parse(f, t[1].get<std::string>());
      if (c.is_zero()) throw ParseError("zero coefficient in bracket (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      out.push_back({k, c});
    }
    table[{i, j}] = std::move(out);
  }
  return LieAlgebra(f, std::move(names), table);
}

}  // namespace extlie
