#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "../app/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hopflab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = hopflab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("purity verdicts on the command line") {
  const auto pure = run({"purity", "--lambda", "1,0,1"});
  CHECK(pure.code == 0);
  CHECK(contains(pure.out, "PURE (violates λ₁·(λ₁₂+2q₁₂λ₁λ₂)=0)"));
  const auto expo = run({"purity", "--lambda", "0,1,0", "--q12", "-1", "--format", "json"});
  CHECK(expo.code == 0);
  const auto j = nlohmann::json::parse(expo.out);
  CHECK(j["tag"] == "Exponential");
  CHECK(j["witness_verified"] == true);
  CHECK(j["q12"] == -1);
  CHECK(contains(run({"purity", "--lambda", "0,0,0"}).out, "TRIVIAL"));
}

TEST_CASE("cocycle table in every format") {
  const auto js = run({"cocycle-table", "--q12", "-1", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["instance"] == "a2");
  CHECK(j["basis"].size() == 8);
  CHECK(j["table"].size() == 8);
  // sigma(x2, x12x1) = 2 q12 l1 l2 at q12 = -1.
  CHECK(j["table"][2][6] == "-2*l1*l2");
  CHECK(j["table"][6][2] == "-2*l1*l2 + l12");
  // Re-serialization is stable.
  CHECK(nlohmann::json::parse(j.dump(2)).dump(2) + "\n" == js.out);

  const auto csv = run({"cocycle-table", "--lambda", "1,2,3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(contains(csv.out, "x12x1,0,0,7,0,0,0,11,0"));
  const auto md = run({"cocycle-table", "--format", "md"});
  CHECK(contains(md.out, "| x2x12x1 |"));
}

TEST_CASE("verification commands pass on the built-in instances") {
  for (const char* inst : {"a2", "taft"}) {
    CHECK(run({"--instance", inst, "check"}).code == 0);
    CHECK(run({"--instance", inst, "golden"}).code == 0);
    CHECK(run({"--instance", inst, "deform"}).code == 0);
    CHECK(run({"--instance", inst, "hochschild", "--invariant"}).code == 0);
    CHECK(run({"--instance", inst, "section"}).code == 0);
  }
  const auto h = nlohmann::json::parse(run({"hochschild", "--invariant", "--format", "json"}).out);
  CHECK(h["dim_Z2"] == 9);
  CHECK(h["dim_B2"] == 6);
  CHECK(h["dim_Z2_invariant"] == 5);
  CHECK(h["change_of_basis"] == true);
  const auto e = nlohmann::json::parse(run({"exp", "--eta", "0,1,0,1,-1", "--format", "json"}).out);
  CHECK(e["conm1"] == false);
  CHECK(e["hopf_cocycle"] == true);
  CHECK(e["in_Cbar"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--instance", "missing.alg", "check"}).code == 2);
  CHECK(run({"cocycle-table", "--lambda", "1,2"}).code == 2);
  CHECK(run({"cocycle-table", "--format", "xml"}).code == 2);
  CHECK(run({"--q12", "3", "check"}).code == 2);
  CHECK(run({"--instance", "taft", "purity", "--lambda", "1"}).code == 2);

  // A syntax error in a user file reports its location.
  const std::string path = "cli_bad_instance.alg";
  std::ofstream(path) << "algebra t {\n  generators x[1]\n}\n";
  const auto bad = run({"--instance", path, "check"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "3:1:"));

  // An inconsistent presentation is a verification failure.
  const std::string inconsistent = "cli_inconsistent.alg";
  std::ofstream(inconsistent) << "algebra t { generators x1[1]; braiding [[-1]]; relations { x1^3 = 0; } dimension 2; }\n";
  CHECK(run({"--instance", inconsistent, "check"}).code == 1);

  // A wrong golden entry is caught: a file with a perturbed cleft relation.
  const std::string wrong = "cli_wrong.alg";
  std::ofstream(wrong) << "algebra taft { params l; generators x[1]; braiding [[-1]]; relations { x^2 = 0; }\n"
                          "basis { 1 = 1; x = x; } dimension 2;\n"
                          "cleft { generators y; relations { y^2 = 2*l; } basis { 1 = 1; y = y; } }\n"
                          "realization group (Z/2); }\n";
  const auto g = run({"--instance", wrong, "golden"});
  CHECK(g.code == 1);
  CHECK(contains(g.err, "sigma"));
}
