#pragma once

// Canonical JSON document formats for groups, representations, group
// functions, and computed results. Parsing validates through the owning
// module (so domain failures surface as ValidationError), while syntax
// problems, unknown labels, and encoding mismatches throw ParseError.
// serialize(parse(doc)) is the identity on canonical documents.

#include <string>

#include "repkit/decompose.hpp"
#include "repkit/group_algebra.hpp"

namespace repkit::io {

Field parse_field(const std::string& text);
/// base_dir resolves relative "group": "<path>" references.
FiniteGroup parse_group(const std::string& text, const std::string& base_dir = "");
Representation parse_rep(const std::string& text, const std::string& base_dir = "");
GroupFunction parse_function(const std::string& text, const std::string& base_dir = "");

std::string serialize(const Field& field);
std::string serialize(const FiniteGroup& group);
std::string serialize(const Representation& rep);
std::string serialize(const GroupFunction& function);
std::string serialize(const Character& character);
std::string serialize(const Matrix& matrix);
std::string serialize(const DecompositionResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

FiniteGroup load_group(const std::string& path);
Representation load_rep(const std::string& path);
GroupFunction load_function(const std::string& path);

}  // namespace repkit::io
