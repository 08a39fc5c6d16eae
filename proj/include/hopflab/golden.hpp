// Reference tables shipped with the built-in instances. Entries are text in
// the instance's parameters plus q12 and q21 = -q12, evaluated per sign.
#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "hopflab/scalar.hpp"

namespace hopflab {

struct GoldenTable {
  std::string instance;
  std::string name;                 // "sigma", "gamma", "gamma_inv", "exp_cobordant"
  std::vector<std::string> params;  // parameter list the entries are written in
  std::vector<std::string> rows, cols;
  std::vector<std::tuple<std::string, std::string, std::string>> entries;  // unlisted entries are 0
};

const std::vector<GoldenTable>& golden_tables();
const GoldenTable& golden_table(const std::string& instance, const std::string& name);

// Dense [row][col] matrix at the given sign.
std::vector<std::vector<Scalar>> golden_matrix(const GoldenTable& t, const SpacePtr& space, int q12);

struct MatrixDiff {
  bool equal = true;
  std::size_t row = 0, col = 0;
  Scalar expected, actual;
};
MatrixDiff compare_matrix(const std::vector<std::vector<Scalar>>& expected, const std::vector<std::vector<Scalar>>& actual);

}  // namespace hopflab
