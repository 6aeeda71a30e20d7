// repkit: exact finite-group representation calculator.
//
// Subcommands read the JSON documents described in the README, compute, and
// print a JSON document on stdout (or to --output). Exit codes: 0 success,
// 1 domain validation failure, 2 parse or usage error.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "repkit/decompose.hpp"
#include "repkit/io.hpp"

using namespace repkit;

namespace {

struct Output {
  std::string path;  // empty: stdout
  void emit(const std::string& document) const {
    if (path.empty()) {
      std::cout << document;
    } else {
      io::write_file(path, document);
    }
  }
};

std::string json_line(std::initializer_list<std::pair<std::string, std::string>> fields) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + key + "\": " + value;
  }
  return out + "}\n";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void cmd_group_validate(const std::string& file, const Output& out) {
  FiniteGroup g = io::load_group(file);
  out.emit(json_line({{"valid", "true"},
                      {"name", quoted(g.name())},
                      {"order", std::to_string(g.order())}}));
}

void cmd_group_info(const std::string& file, const Output& out) {
  FiniteGroup g = io::load_group(file);
  std::string orders = "[";
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x) orders += ", ";
    orders += std::to_string(g.element_order(x));
  }
  orders += "]";
  out.emit(json_line({{"name", quoted(g.name())},
                      {"order", std::to_string(g.order())},
                      {"abelian", g.is_abelian() ? "true" : "false"},
                      {"exponent", std::to_string(g.exponent())},
                      {"class_count", std::to_string(g.conjugacy_classes().size())},
                      {"element_orders", orders}}));
}

void cmd_group_classes(const std::string& file, const Output& out) {
  FiniteGroup g = io::load_group(file);
  std::string classes = "[";
  std::string sizes = "[";
  auto partition = g.conjugacy_classes();
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (c) {
      classes += ", ";
      sizes += ", ";
    }
    classes += "[";
    for (std::size_t i = 0; i < partition[c].size(); ++i) {
      if (i) classes += ", ";
      classes += quoted(g.label(partition[c][i]));
    }
    classes += "]";
    sizes += std::to_string(partition[c].size());
  }
  classes += "]";
  sizes += "]";
  out.emit(json_line({{"classes", classes}, {"sizes", sizes}}));
}

void cmd_rep_validate(const std::string& file, const Output& out) {
  Representation rep = io::load_rep(file);
  out.emit(json_line({{"valid", "true"},
                      {"group", quoted(rep.group().name())},
                      {"degree", std::to_string(rep.degree())},
                      {"field", quoted(rep.field().to_string())}}));
}

void cmd_rep_character(const std::string& file, const Output& out) {
  Representation rep = io::load_rep(file);
  out.emit(io::serialize(Character(rep)));
}

void cmd_rep_decompose(const std::string& file, bool extend, const Output& out) {
  Representation rep = io::load_rep(file);
  out.emit(io::serialize(decompose(rep, extend)));
}

void cmd_rep_pair(const std::string& left, const std::string& right, bool tensor,
                  const Output& out) {
  Representation a = io::load_rep(left);
  Representation b = io::load_rep(right);
  out.emit(io::serialize(tensor ? tensor_product(a, b) : direct_sum(a, b)));
}

void cmd_rep_dual(const std::string& file, const Output& out) {
  out.emit(io::serialize(dual(io::load_rep(file))));
}

void cmd_rep_restrict(const std::string& file, const std::vector<std::string>& generator_labels,
                      const Output& out) {
  Representation rep = io::load_rep(file);
  std::vector<std::size_t> generators;
  for (const auto& label : generator_labels) {
    auto index = rep.group().index_of(label);
    if (!index) throw ParseError("unknown element label '" + label + "'");
    generators.push_back(*index);
  }
  auto closure = subgroup_closure(rep.group(), generators);
  SubgroupView view = subgroup_as_group(rep.group(), closure.elements);
  out.emit(io::serialize(restrict_to(rep, view)));
}

void cmd_rep_change_field(const std::string& file, const std::string& descriptor,
                          const Output& out) {
  Representation rep = io::load_rep(file);
  Field target = io::parse_field(descriptor);
  Representation changed = [&]() {
    switch (target.kind()) {
      case Field::Kind::prime:
        return reduce_mod(rep, target.prime_modulus());
      case Field::Kind::rational:
        if (rep.field().is_cyclotomic()) return restrict_scalars(rep);
        return extend_field(rep, target);  // identity copy for Q -> Q
      case Field::Kind::cyclotomic:
        return extend_field(rep, target);
    }
    throw Error("unreachable field kind");
  }();
  out.emit(io::serialize(changed));
}

void cmd_algebra_convolve(const std::string& left, const std::string& right, const Output& out) {
  out.emit(io::serialize(convolve(io::load_function(left), io::load_function(right))));
}

void cmd_algebra_operator(const std::string& function_file, const std::string& rep_file,
                          const Output& out) {
  GroupFunction f = io::load_function(function_file);
  Representation rep = io::load_rep(rep_file);
  out.emit(io::serialize(rep_operator(f, rep)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repkit: exact computations with finite-group representations"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--output", out.path, "Write the result document to a file instead of stdout");

  std::string file, second;
  std::string field_descriptor;
  std::vector<std::string> labels;
  bool extend = false;

  auto* group = app.add_subcommand("group", "Group documents");
  group->require_subcommand(1);
  auto* g_validate = group->add_subcommand("validate", "Check the group axioms");
  g_validate->add_option("file", file, "group document")->required();
  auto* g_info = group->add_subcommand("info", "Order, exponent, abelianness, class count");
  g_info->add_option("file", file, "group document")->required();
  auto* g_classes = group->add_subcommand("classes", "Conjugacy classes");
  g_classes->add_option("file", file, "group document")->required();

  auto* rep = app.add_subcommand("rep", "Representation documents");
  rep->require_subcommand(1);
  auto* r_validate = rep->add_subcommand("validate", "Check the homomorphism property");
  r_validate->add_option("file", file, "representation document")->required();
  auto* r_character = rep->add_subcommand("character", "Character and its class values");
  r_character->add_option("file", file, "representation document")->required();
  auto* r_decompose = rep->add_subcommand("decompose", "Certified decomposition into irreducibles");
  r_decompose->add_option("file", file, "representation document")->required();
  r_decompose->add_flag("--extend", extend, "Allow extension to the splitting cyclotomic field");
  auto* r_tensor = rep->add_subcommand("tensor", "Tensor product of two representations");
  r_tensor->add_option("left", file, "representation document")->required();
  r_tensor->add_option("right", second, "representation document")->required();
  auto* r_dsum = rep->add_subcommand("direct-sum", "Direct sum of two representations");
  r_dsum->add_option("left", file, "representation document")->required();
  r_dsum->add_option("right", second, "representation document")->required();
  auto* r_dual = rep->add_subcommand("dual", "Dual representation");
  r_dual->add_option("file", file, "representation document")->required();
  auto* r_restrict = rep->add_subcommand("restrict", "Restrict to the subgroup generated by elements");
  r_restrict->add_option("file", file, "representation document")->required();
  r_restrict->add_option("generators", labels, "generator element labels")->required();
  auto* r_change = rep->add_subcommand("change-field", "Extend, restrict scalars, or reduce mod p");
  r_change->add_option("file", file, "representation document")->required();
  r_change->add_option("--field", field_descriptor, "target field descriptor (JSON)")->required();

  auto* algebra = app.add_subcommand("algebra", "Group-algebra documents");
  algebra->require_subcommand(1);
  auto* a_convolve = algebra->add_subcommand("convolve", "Convolution of two group functions");
  a_convolve->add_option("left", file, "function document")->required();
  a_convolve->add_option("right", second, "function document")->required();
  auto* a_operator = algebra->add_subcommand("operator", "Matrix of T_f on a representation");
  a_operator->add_option("function", file, "function document")->required();
  a_operator->add_option("rep", second, "representation document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (g_validate->parsed()) cmd_group_validate(file, out);
    if (g_info->parsed()) cmd_group_info(file, out);
    if (g_classes->parsed()) cmd_group_classes(file, out);
    if (r_validate->parsed()) cmd_rep_validate(file, out);
    if (r_character->parsed()) cmd_rep_character(file, out);
    if (r_decompose->parsed()) cmd_rep_decompose(file, extend, out);
    if (r_tensor->parsed()) cmd_rep_pair(file, second, true, out);
    if (r_dsum->parsed()) cmd_rep_pair(file, second, false, out);
    if (r_dual->parsed()) cmd_rep_dual(file, out);
    if (r_restrict->parsed()) cmd_rep_restrict(file, labels, out);
    if (r_change->parsed()) cmd_rep_change_field(file, field_descriptor, out);
    if (a_convolve->parsed()) cmd_algebra_convolve(file, second, out);
    if (a_operator->parsed()) cmd_algebra_operator(file, second, out);
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
