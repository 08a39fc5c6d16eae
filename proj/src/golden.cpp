#include "hopflab/golden.hpp"

#include "hopflab/dsl.hpp"
#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

const std::vector<std::string> a2_b{"1", "x1", "x2", "x12", "x2x1", "x2x12", "x12x1", "x2x12x1"};
const std::vector<std::string> a2_e{"1", "y1", "y2", "y12", "y2y1", "y2y12", "y12y1", "y2y12y1"};

std::vector<GoldenTable> build() {
  std::vector<GoldenTable> out;
  out.push_back({"a2",
                 "sigma",
                 {"l1", "l2", "l12"},
                 a2_b,
                 a2_b,
                 {{"1", "1", "1"},
                  {"x1", "x1", "l1"},
                  {"x1", "x2x12", "l12"},
                  {"x2", "x2", "l2"},
                  {"x2", "x12x1", "2*q12*l1*l2"},
                  {"x12", "x12", "l12"},
                  {"x2x1", "x2x1", "q12*l1*l2"},
                  {"x2x12", "x2x12", "-q12*l2*l12"},
                  {"x12x1", "x2", "2*q12*l1*l2 + l12"},
                  {"x12x1", "x12x1", "q12*l12*l1 + 4*l1^2*l2"},
                  {"x2x12x1", "x2x12x1", "q12*l2*l12*l1"}}});
  out.push_back({"a2",
                 "gamma",
                 {"l1", "l2", "l12"},
                 a2_b,
                 a2_e,
                 {{"1", "1", "1"},
                  {"x1", "y1", "1"},
                  {"x2", "y2", "1"},
                  {"x12", "y12", "1"},
                  {"x2x1", "y2y1", "1"},
                  {"x2x12", "y2y12", "1"},
                  {"x12x1", "y12y1", "1"},
                  {"x12x1", "y2", "-2*q21*l1"},
                  {"x2x12x1", "y2y12y1", "1"}}});
  out.push_back({"a2",
                 "gamma_inv",
                 {"l1", "l2", "l12"},
                 a2_b,
                 a2_e,
                 {{"1", "1", "1"},
                  {"x1", "y1", "-1"},
                  {"x2", "y2", "-1"},
                  {"x12", "y12", "1"},
                  {"x12", "y2y1", "2*q12"},
                  {"x2x1", "y12", "q21"},
                  {"x2x1", "y2y1", "-1"},
                  {"x12x1", "y12y1", "-1"},
                  {"x12x1", "y2", "2*q21*l1"},
                  {"x2x12", "y2y12", "-1"},
                  {"x2x12x1", "y2y12y1", "1"},
                  {"x2x12x1", "1", "-l12"}}});
  // e^eta for eta = eta1 xi^1_1 + eta121 (xi121 - xi212).
  out.push_back({"a2",
                 "exp_cobordant",
                 {"eta1", "eta121"},
                 a2_b,
                 a2_b,
                 {{"1", "1", "1"},
                  {"x1", "x1", "eta1"},
                  {"x1", "x2x12", "-eta121"},
                  {"x2", "x12x1", "eta121"},
                  {"x12", "x2x1", "-q12*eta121"},
                  {"x2x1", "x12", "-q12*eta121"},
                  {"x2x1", "x2x1", "eta121"},
                  {"x2x12", "x1", "eta121"},
                  {"x12x1", "x2", "-eta121"},
                  {"x2x12x1", "x2x12x1", "-eta121^2"}}});
  out.push_back({"taft", "sigma", {"l"}, {"1", "x"}, {"1", "x"}, {{"1", "1", "1"}, {"x", "x", "l"}}});
  out.push_back({"taft", "gamma", {"l"}, {"1", "x"}, {"1", "y"}, {{"1", "1", "1"}, {"x", "y", "1"}}});
  out.push_back({"taft", "gamma_inv", {"l"}, {"1", "x"}, {"1", "y"}, {{"1", "1", "1"}, {"x", "y", "-1"}}});
  return out;
}

std::size_t position(const std::vector<std::string>& names, const std::string& n) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  throw HopflabError(ErrorKind::Internal, "golden table names unknown basis element " + n);
}

}  // namespace

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = build();
  return tables;
}

const GoldenTable& golden_table(const std::string& instance, const std::string& name) {
  for (const auto& t : golden_tables())
    if (t.instance == instance && t.name == name) return t;
  throw HopflabError(ErrorKind::Input, "no golden table " + name + " for instance " + instance);
}

std::vector<std::vector<Scalar>> golden_matrix(const GoldenTable& t, const SpacePtr& space, int q12) {
  std::vector<std::vector<Scalar>> m(t.rows.size(), std::vector<Scalar>(t.cols.size()));
  const std::map<std::string, Rational> signs{{"q12", Rational(q12)}, {"q21", Rational(-q12)}};
  for (const auto& [r, c, text] : t.entries) m[position(t.rows, r)][position(t.cols, c)] = parse_scalar(text, space, signs);
  return m;
}

MatrixDiff compare_matrix(const std::vector<std::vector<Scalar>>& expected, const std::vector<std::vector<Scalar>>& actual) {
  MatrixDiff d;
  if (expected.size() != actual.size()) throw HopflabError(ErrorKind::Internal, "matrix shapes differ");
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = 0; j < expected[i].size(); ++j)
      if (expected[i][j] != actual[i][j]) return {false, i, j, expected[i][j], actual[i][j]};
  return d;
}

}  // namespace hopflab
