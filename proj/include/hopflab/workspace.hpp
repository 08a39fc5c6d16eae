// An instance loaded end to end: algebra, tables, cleft object, realization,
// section and its cocycle.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hopflab/bosonization.hpp"
#include "hopflab/cleft.hpp"
#include "hopflab/dsl.hpp"
#include "hopflab/functional.hpp"

namespace hopflab {

// "a2", "taft", or a path to an instance file.
InstanceSpec resolve_instance(const std::string& name_or_path);
std::vector<std::string> builtin_instance_names();
const std::string& builtin_instance_text(const std::string& name);

struct Workspace {
  Instance inst;
  std::shared_ptr<const BraidedBialgebra> b;
  Tables t;
  std::optional<CleftAlgebra> cleft;
  std::optional<GroupData> group;
  ComoduleMap gamma, gamma_inv;
  Functional sigma;  // symbolic in the instance parameters; empty without a cleft block

  bool has_cleft() const { return cleft.has_value(); }
  // Binds every parameter; `values` in declaration order.
  std::map<std::string, Rational> binding(const std::vector<Rational>& values) const;
};

Workspace load_workspace(const InstanceSpec& spec, std::optional<int> q12 = std::nullopt, Exec exec = Exec::Parallel);

std::vector<std::vector<Scalar>> functional_matrix(const Functional& f);
std::vector<std::vector<Scalar>> map_matrix(const ComoduleMap& m, std::size_t cols);

}  // namespace hopflab
