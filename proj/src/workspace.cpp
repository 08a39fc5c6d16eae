#include "hopflab/workspace.hpp"

#include <filesystem>

#include "hopflab/cocycle.hpp"
#include "hopflab/errors.hpp"

namespace hopflab {

// Defined in the generated builtin_instances.cpp.
extern const char* const kBuiltinA2;
extern const char* const kBuiltinTaft;

std::vector<std::string> builtin_instance_names() { return {"a2", "taft"}; }

const std::string& builtin_instance_text(const std::string& name) {
  static const std::map<std::string, std::string> texts{{"a2", kBuiltinA2}, {"taft", kBuiltinTaft}};
  const auto it = texts.find(name);
  if (it == texts.end()) throw HopflabError(ErrorKind::Input, "unknown built-in instance " + name);
  return it->second;
}

InstanceSpec resolve_instance(const std::string& name_or_path) {
  for (const auto& n : builtin_instance_names())
    if (n == name_or_path) return parse_instance(builtin_instance_text(n));
  if (!std::filesystem::exists(name_or_path))
    throw HopflabError(ErrorKind::Input, "no built-in instance or file named " + name_or_path);
  return parse_instance_file(name_or_path);
}

std::map<std::string, Rational> Workspace::binding(const std::vector<Rational>& values) const {
  const auto& names = inst.space->names();
  if (values.size() != names.size())
    throw HopflabError(ErrorKind::Input, "expected " + std::to_string(names.size()) + " parameter values, got " +
                                             std::to_string(values.size()));
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = values[i];
  return out;
}

Workspace load_workspace(const InstanceSpec& spec, std::optional<int> q12, Exec exec) {
  Workspace w;
  w.inst = lower(spec, q12);
  w.b = std::make_shared<const BraidedBialgebra>(build_from_presentation(w.inst.algebra, exec));
  w.t = make_tables(*w.b);
  if (!w.inst.group_orders.empty()) {
    w.group = diagonal_realization(w.b->q, w.inst.group_orders);
    w.group->validate(w.b->q);
  }
  if (w.inst.cleft) {
    w.cleft = build_cleft(*w.inst.cleft, w.b, exec);
    if (w.group) check_cleft_realization(*w.group, *w.inst.cleft, w.b->q);
    w.gamma = solve_section(*w.cleft).gamma;
    w.gamma_inv = convolution_inverse_map(w.gamma, *w.cleft);
    w.sigma = cocycle_from_section_braided(w.gamma, w.gamma_inv, *w.cleft);
  }
  return w;
}

std::vector<std::vector<Scalar>> functional_matrix(const Functional& f) {
  const std::size_t n = f.dim();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = f.at(i, j);
  return m;
}

std::vector<std::vector<Scalar>> map_matrix(const ComoduleMap& f, std::size_t cols) {
  std::vector<std::vector<Scalar>> m(f.image.size(), std::vector<Scalar>(cols));
  for (std::size_t i = 0; i < f.image.size(); ++i)
    for (const auto& [k, c] : f.image[i]) m[i][k] = c;
  return m;
}

}  // namespace hopflab
