#include "repkit/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace repkit::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
}

const ordered_json& need(const ordered_json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string need_string(const ordered_json& doc, const char* key) {
  const auto& v = need(doc, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

// -- field descriptors ---------------------------------------------------------

ordered_json field_to_json(const Field& field) {
  ordered_json out;
  switch (field.kind()) {
    case Field::Kind::rational:
      out["kind"] = "rational";
      break;
    case Field::Kind::prime:
      out["kind"] = "prime";
      out["p"] = field.prime_modulus();
      break;
    case Field::Kind::cyclotomic:
      out["kind"] = "cyclotomic";
      out["n"] = field.conductor();
      break;
  }
  return out;
}

Field field_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("field descriptor must be an object");
  std::string kind = need_string(doc, "kind");
  try {
    if (kind == "rational") return Field::rationals();
    if (kind == "prime") {
      const auto& p = need(doc, "p");
      if (!p.is_number_unsigned()) throw ParseError("prime modulus must be a positive integer");
      return Field::prime(p.get<std::uint64_t>());
    }
    if (kind == "cyclotomic") {
      const auto& n = need(doc, "n");
      if (!n.is_number_unsigned()) throw ParseError("conductor must be a positive integer");
      return Field::cyclotomic(n.get<unsigned>());
    }
  } catch (const ValidationError& e) {
    throw ParseError(std::string("bad field descriptor: ") + e.what());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

// -- field-element entries -------------------------------------------------------

ordered_json entry_to_json(const FieldElement& value) {
  switch (value.field().kind()) {
    case Field::Kind::rational:
      return rational_to_string(value.rational_value());
    case Field::Kind::prime:
      return std::to_string(value.residue());
    case Field::Kind::cyclotomic: {
      ordered_json out = ordered_json::array();
      for (const auto& c : value.coordinates()) out.push_back(rational_to_string(c));
      return out;
    }
  }
  throw Error("unreachable field kind");
}

mpq_class rational_from_json(const ordered_json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  throw ParseError("expected a rational string, got " + v.dump());
}

FieldElement entry_from_json(const Field& field, const ordered_json& v) {
  switch (field.kind()) {
    case Field::Kind::rational:
      return field.from_rational(rational_from_json(v));
    case Field::Kind::prime: {
      mpq_class q = rational_from_json(v);
      return field.from_rational(q);
    }
    case Field::Kind::cyclotomic: {
      if (!v.is_array()) {
        throw ParseError("cyclotomic entry must be an array of " +
                         std::to_string(field.extension_degree()) + " rationals, got " + v.dump());
      }
      if (v.size() != field.extension_degree()) {
        throw ParseError("cyclotomic entry needs " + std::to_string(field.extension_degree()) +
                         " coordinates, got " + std::to_string(v.size()));
      }
      std::vector<mpq_class> coords;
      coords.reserve(v.size());
      for (const auto& c : v) coords.push_back(rational_from_json(c));
      return field.from_coordinates(std::move(coords));
    }
  }
  throw Error("unreachable field kind");
}

// -- groups ----------------------------------------------------------------------

ordered_json group_to_json(const FiniteGroup& g) {
  ordered_json out;
  out["name"] = g.name();
  out["elements"] = g.labels();
  out["identity"] = g.label(g.identity());
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < g.order(); ++j) row.push_back(g.label(g.multiply(i, j)));
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  return out;
}

FiniteGroup group_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("group document must be an object");
  std::string name = doc.contains("name") ? need_string(doc, "name") : "";
  const auto& elements = need(doc, "elements");
  if (!elements.is_array() || elements.empty()) {
    throw ParseError("'elements' must be a nonempty array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& e : elements) {
    if (!e.is_string()) throw ParseError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  auto index_of = [&](const std::string& label) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return i;
    }
    throw ParseError("unknown element label '" + label + "'");
  };
  std::size_t identity = index_of(need_string(doc, "identity"));
  const auto& table_json = need(doc, "table");
  if (!table_json.is_array() || table_json.size() != labels.size()) {
    throw ParseError("'table' must be an array with one row per element");
  }
  std::vector<std::vector<std::size_t>> table;
  table.reserve(labels.size());
  for (const auto& row : table_json) {
    if (!row.is_array() || row.size() != labels.size()) {
      throw ParseError("each table row must list one label per element");
    }
    std::vector<std::size_t> out_row;
    out_row.reserve(labels.size());
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError("table entries must be element labels");
      out_row.push_back(index_of(cell.get<std::string>()));
    }
    table.push_back(std::move(out_row));
  }
  return FiniteGroup::create(std::move(labels), std::move(table), identity, std::move(name));
}

FiniteGroup group_from_ref(const ordered_json& ref, const std::string& base_dir) {
  if (ref.is_object()) return group_from_json(ref);
  if (ref.is_string()) {
    std::filesystem::path path(ref.get<std::string>());
    if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
    return parse_group(read_file(path.string()));
  }
  throw ParseError("'group' must be an inline object or a file path");
}

// -- matrices ---------------------------------------------------------------------

ordered_json matrix_rows_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_rows_from_json(const Field& field, const ordered_json& rows, std::size_t expect_rows,
                             std::size_t expect_cols) {
  if (!rows.is_array() || rows.size() != expect_rows) {
    throw ParseError("matrix needs " + std::to_string(expect_rows) + " rows");
  }
  Matrix out(field, expect_rows, expect_cols);
  for (std::size_t i = 0; i < expect_rows; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != expect_cols) {
      throw ParseError("matrix row " + std::to_string(i) + " needs " +
                       std::to_string(expect_cols) + " entries");
    }
    for (std::size_t j = 0; j < expect_cols; ++j) out.at(i, j) = entry_from_json(field, row[j]);
  }
  return out;
}

}  // namespace

// -- public API ---------------------------------------------------------------------

Field parse_field(const std::string& text) { return field_from_json(parse_text(text)); }

FiniteGroup parse_group(const std::string& text, const std::string&) {
  return group_from_json(parse_text(text));
}

Representation parse_rep(const std::string& text, const std::string& base_dir) {
  ordered_json doc = parse_text(text);
  if (!doc.is_object()) throw ParseError("representation document must be an object");
  FiniteGroup group = group_from_ref(need(doc, "group"), base_dir);
  Field field = field_from_json(need(doc, "field"));
  const auto& degree_json = need(doc, "degree");
  if (!degree_json.is_number_unsigned() || degree_json.get<std::size_t>() == 0) {
    throw ParseError("'degree' must be a positive integer");
  }
  std::size_t degree = degree_json.get<std::size_t>();
  const auto& matrices = need(doc, "matrices");
  if (!matrices.is_object()) throw ParseError("'matrices' must map element labels to matrices");
  std::vector<Matrix> mats;
  mats.reserve(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) {
    auto it = matrices.find(group.label(x));
    if (it == matrices.end()) {
      throw ParseError("missing matrix for element '" + group.label(x) + "'");
    }
    mats.push_back(matrix_rows_from_json(field, *it, degree, degree));
  }
  if (matrices.size() != group.order()) {
    throw ParseError("matrices listed for labels outside the group");
  }
  return Representation::create(std::move(group), std::move(field), std::move(mats));
}

GroupFunction parse_function(const std::string& text, const std::string& base_dir) {
  ordered_json doc = parse_text(text);
  if (!doc.is_object()) throw ParseError("function document must be an object");
  FiniteGroup group = group_from_ref(need(doc, "group"), base_dir);
  Field field = field_from_json(need(doc, "field"));
  const auto& values = need(doc, "values");
  if (!values.is_object()) throw ParseError("'values' must map element labels to entries");
  std::vector<FieldElement> out;
  out.reserve(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) {
    auto it = values.find(group.label(x));
    if (it == values.end()) throw ParseError("missing value for element '" + group.label(x) + "'");
    out.push_back(entry_from_json(field, *it));
  }
  if (values.size() != group.order()) {
    throw ParseError("values listed for labels outside the group");
  }
  return GroupFunction(std::move(group), std::move(field), std::move(out));
}

namespace {

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string serialize(const Field& field) { return dump(field_to_json(field)); }

std::string serialize(const FiniteGroup& group) { return dump(group_to_json(group)); }

std::string serialize(const Representation& rep) {
  ordered_json out;
  out["group"] = group_to_json(rep.group());
  out["field"] = field_to_json(rep.field());
  out["degree"] = rep.degree();
  ordered_json matrices = ordered_json::object();
  for (std::size_t x = 0; x < rep.group().order(); ++x) {
    matrices[rep.group().label(x)] = matrix_rows_to_json(rep[x]);
  }
  out["matrices"] = std::move(matrices);
  return dump(out);
}

std::string serialize(const GroupFunction& function) {
  ordered_json out;
  out["group"] = group_to_json(function.group());
  out["field"] = field_to_json(function.field());
  ordered_json values = ordered_json::object();
  for (std::size_t x = 0; x < function.group().order(); ++x) {
    values[function.group().label(x)] = entry_to_json(function.value(x));
  }
  out["values"] = std::move(values);
  return dump(out);
}

std::string serialize(const Character& character) {
  ordered_json out;
  out["field"] = field_to_json(character.field());
  ordered_json values = ordered_json::object();
  for (std::size_t x = 0; x < character.group().order(); ++x) {
    values[character.group().label(x)] = entry_to_json(character.value(x));
  }
  out["values"] = std::move(values);
  ordered_json classes = ordered_json::array();
  for (const auto& cls : character.group().conjugacy_classes()) {
    ordered_json labels = ordered_json::array();
    for (std::size_t x : cls) labels.push_back(character.group().label(x));
    classes.push_back(std::move(labels));
  }
  out["classes"] = std::move(classes);
  ordered_json class_values = ordered_json::array();
  for (const auto& v : character.class_values()) class_values.push_back(entry_to_json(v));
  out["class_values"] = std::move(class_values);
  return dump(out);
}

std::string serialize(const Matrix& matrix) {
  ordered_json out;
  out["field"] = field_to_json(matrix.field());
  out["rows"] = matrix.rows();
  out["cols"] = matrix.cols();
  out["entries"] = matrix_rows_to_json(matrix);
  return dump(out);
}

std::string serialize(const DecompositionResult& result) {
  ordered_json out;
  out["field"] = field_to_json(result.field_used);
  auto degrees = result.block_degrees();
  std::sort(degrees.begin(), degrees.end());
  out["degrees"] = degrees;
  out["base_change"] = matrix_rows_to_json(result.base_change);
  ordered_json blocks = ordered_json::array();
  for (std::size_t i = 0; i < result.blocks.size(); ++i) {
    const Representation& block = result.blocks[i];
    ordered_json entry;
    entry["degree"] = block.degree();
    entry["certificate"] = result.certificates[i] == BlockCertificate::absolutely_irreducible
                               ? "absolutely_irreducible"
                               : "irreducible_over_field";
    ordered_json matrices = ordered_json::object();
    for (std::size_t x = 0; x < block.group().order(); ++x) {
      matrices[block.group().label(x)] = matrix_rows_to_json(block[x]);
    }
    entry["matrices"] = std::move(matrices);
    ordered_json character = ordered_json::object();
    Character chi(block);
    for (std::size_t x = 0; x < block.group().order(); ++x) {
      character[block.group().label(x)] = entry_to_json(chi.value(x));
    }
    entry["character"] = std::move(character);
    blocks.push_back(std::move(entry));
  }
  out["blocks"] = std::move(blocks);
  out["iso_classes"] = result.iso_classes;
  ordered_json multiplicities = ordered_json::array();
  for (const auto& cls : result.iso_classes) multiplicities.push_back(cls.size());
  out["multiplicities"] = std::move(multiplicities);
  return dump(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

FiniteGroup load_group(const std::string& path) { return parse_group(read_file(path)); }

Representation load_rep(const std::string& path) {
  return parse_rep(read_file(path), std::filesystem::path(path).parent_path().string());
}

GroupFunction load_function(const std::string& path) {
  return parse_function(read_file(path), std::filesystem::path(path).parent_path().string());
}

}  // namespace repkit::io
