#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "logenergy/cli.hpp"
#include "logenergy/errors.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "logenergy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = logenergy::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == name) return j;
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("n lists") {
  using logenergy::cli::parse_n_list;
  CHECK(parse_n_list("1..4") == std::vector<unsigned>{1, 2, 3, 4});
  CHECK(parse_n_list("1,2,4,8") == std::vector<unsigned>{1, 2, 4, 8});
  CHECK(parse_n_list("1..3, 10") == std::vector<unsigned>{1, 2, 3, 10});
  CHECK_THROWS_AS(parse_n_list("x"), logenergy::DomainError);
  CHECK_THROWS_AS(parse_n_list("4..2"), logenergy::DomainError);
  CHECK_THROWS_AS(parse_n_list("-1"), logenergy::DomainError);
  CHECK_THROWS_AS(parse_n_list(""), logenergy::DomainError);
}

TEST_CASE("closed-form tables") {
  auto r = invoke({"closed-form", "--ensemble", "gue", "--n", "1..10"});
  REQUIRE(r.code == 0);
  auto t = csv(r.out);
  REQUIRE(t.size() == 11);
  CHECK(t[0] == std::vector<std::string>{"n", "raw", "moment", "penalized", "delta", "delta2"});
  const auto pc = column(t[0], "penalized");
  for (std::size_t i = 2; i < t.size(); ++i) CHECK(std::stod(t[i][pc]) < std::stod(t[i - 1][pc]));
  CHECK(t[1][column(t[0], "delta2")].empty());

  auto gue5 = csv(invoke({"closed-form", "--ensemble", "gue", "--n", "5"}).out);
  auto lue5 = csv(invoke({"closed-form", "--ensemble", "LUE", "--n", "5"}).out);
  CHECK(std::stod(lue5[1][pc]) == 2 * std::stod(gue5[1][pc]));

  auto gin1 = csv(invoke({"closed-form", "--ensemble", "ginibre", "--n", "1"}).out);
  auto gue1 = csv(invoke({"closed-form", "--ensemble", "gue", "--n", "1"}).out);
  CHECK(std::stod(gin1[1][pc]) - std::stod(gue1[1][pc]) == doctest::Approx((1 - std::log(2.0)) / 2).epsilon(1e-12));
}

TEST_CASE("json output round trips the csv table") {
  auto c = invoke({"closed-form", "--ensemble", "ginibre", "--n", "1..4"});
  auto j = invoke({"closed-form", "--ensemble", "ginibre", "--n", "1..4", "--format", "json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  auto t = csv(c.out);
  CHECK(doc["command"] == "closed-form");
  REQUIRE(doc["rows"].size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < t[0].size(); ++k) {
      const auto& v = doc["rows"][i][t[0][k]];
      if (v.is_null())
        CHECK(t[i + 1][k].empty());
      else
        CHECK(v.get<double>() == std::stod(t[i + 1][k]));
    }
}

TEST_CASE("quadrature-check") {
  for (const char* e : {"gue", "ginibre", "lue"}) {
    auto r = invoke({"quadrature-check", "--ensemble", e, "--n", "1..5"});
    CHECK(r.code == 0);
    auto t = csv(r.out);
    REQUIRE(t.size() == 6);
    for (std::size_t i = 1; i < t.size(); ++i) {
      CHECK(t[i][column(t[0], "pass")] == "true");
      CHECK(std::stod(t[i][column(t[0], "abs_diff")]) < 1e-6);
    }
  }
  CHECK(invoke({"quadrature-check", "--ensemble", "gue", "--n", "2", "--tol", "1e-30"}).code == 3);
  CHECK(invoke({"quadrature-check", "--ensemble", "gue", "--n", "13"}).code == 2);
}

TEST_CASE("identities") {
  auto r = invoke({"identities", "--only", "calcul-gue", "--n-max", "30"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["verdict"] == "pass");
    CHECK(j["identity"] == "calcul_gue");
    ++lines;
  }
  CHECK(lines == 30);

  auto lue = invoke({"identities", "--only", "lue-integrals"});
  CHECK(lue.code == 0);
  bool two_log2 = false;
  std::istringstream lin(lue.out);
  while (std::getline(lin, line)) {
    auto j = nlohmann::json::parse(line);
    if (j["params"].contains("part") && j["params"]["part"] == 1)
      two_log2 = std::abs(j["rhs"].get<double>() - 2 * std::log(2.0)) < 1e-15;
  }
  CHECK(two_log2);

  auto c = invoke({"identities", "--only", "pk", "--n-max", "5", "--format", "csv"});
  CHECK(csv(c.out).size() == 6);
  CHECK(invoke({"identities", "--only", "nothing"}).code == 2);
}

TEST_CASE("mc is reproducible bit for bit") {
  const std::vector<std::string> args{"mc", "--model", "wigner", "--dist", "rademacher", "--n", "1,2,4,8",
                                      "--replicas", "2000", "--seed", "7"};
  auto a = invoke(args);
  auto b_args = args;
  b_args.insert(b_args.end(), {"--threads", "1"});
  auto b = invoke(b_args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto t = csv(a.out);
  CHECK(t[0] == std::vector<std::string>{"model", "dist", "n", "estimate", "stderr", "rejected", "moment", "penalized",
                                         "reference"});
  CHECK(t.size() == 5);
  auto other = args;
  other.back() = "8";
  CHECK(invoke(other).out != a.out);
}

TEST_CASE("mc beta-hermite against the closed form") {
  auto r = invoke({"mc", "--model", "beta-hermite", "--beta", "2", "--n", "4", "--replicas", "5000", "--format", "json"});
  REQUIRE(r.code == 0);
  auto row = nlohmann::json::parse(r.out)["rows"][0];
  const double diff = row["penalized"].get<double>() - row["reference"].get<double>();
  CHECK(std::abs(diff) <= 3 * row["penalized_stderr"].get<double>());
}

TEST_CASE("mc notes and warnings") {
  auto r = invoke({"mc", "--model", "iid", "--dist", "sgg", "--d", "1", "--p", "2", "--n", "2", "--replicas", "200"});
  CHECK(r.code == 0);
  CHECK(r.err.find("real Ginibre ensemble") != std::string::npos);
  auto h = invoke({"mc", "--model", "wigner", "--dist", "heavy", "--alpha", "3", "--n", "2", "--replicas", "20"});
  CHECK(h.code == 0);
  CHECK(h.err.find("warning") != std::string::npos);
  auto g = invoke({"mc", "--model", "gue", "--n", "3", "--replicas", "20"});
  CHECK(!csv(g.out)[1].back().empty());
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"closed-form", "--ensemble", "goe", "--n", "2"}).code == 2);
  CHECK(invoke({"closed-form", "--n", "3,2"}).code == 2);
  CHECK(invoke({"closed-form"}).code == 2);
  CHECK(invoke({"closed-form", "--n", "2", "--format", "xml"}).code == 2);
  CHECK(invoke({"mc", "--n", "2", "--replicas", "3"}).code == 2);
  CHECK(invoke({"mc", "--model", "wigner", "--n", "2"}).code == 2);
  CHECK(invoke({"mc", "--model", "gue", "--dist", "rademacher", "--n", "2"}).code == 2);
  CHECK(invoke({"mc", "--model", "iid", "--dist", "heavy", "--alpha", "1.5", "--n", "2"}).code == 2);
  CHECK(invoke({"closed-form", "--help"}).code == 0);
}

TEST_CASE("config file and output file") {
  const std::string cfg = "test_cli_config.json";
  const std::string out = "test_cli_out.csv";
  {
    std::ofstream f(cfg);
    f << R"({"ensemble": "lue", "n": [1, 2, 3], "format": "json"})";
  }
  auto r = invoke({"closed-form", "--config", cfg, "--format", "csv", "--output", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream text;
  text << f.rdbuf();
  auto t = csv(text.str());
  REQUIRE(t.size() == 4);
  auto lue2 = csv(invoke({"closed-form", "--ensemble", "lue", "--n", "2"}).out);
  CHECK(t[2] == lue2[1]);
  {
    std::ofstream bad(cfg);
    bad << R"({"colour": 1})";
  }
  CHECK(invoke({"closed-form", "--config", cfg}).code == 2);
  {
    std::ofstream bad(cfg);
    bad << "{";
  }
  CHECK(invoke({"closed-form", "--config", cfg}).code == 2);
  CHECK(invoke({"closed-form", "--config", "missing.json"}).code == 2);
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}
