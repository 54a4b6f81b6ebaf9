#include "doctest.h"
#include "test_support.hpp"
#include "zetalab/cli.hpp"
#include "zetalab/mellin.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zetalab;
using zetalab::testing::R;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zetalab");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::stringstream ss(text);
  std::string l;
  while (std::getline(ss, l)) v.push_back(l);
  return v;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("zetalab_test_" + name);
}

}  // namespace

TEST_CASE("csv and json rendering") {
  cli::Table t{{"a", "b"}, {{"1", "x,y"}, {"2", "say \"hi\""}}};
  CHECK(cli::render_csv(t) == "a,b\n1,\"x,y\"\n2,\"say \"\"hi\"\"\"\n");
  const auto j = nlohmann::json::parse(cli::render_json(t));
  REQUIRE(j.is_array());
  CHECK(j[0]["b"] == "x,y");
  CHECK(j[1]["a"] == "2");
  CHECK(cli::render_json(cli::Table{{"a"}, {}}) == "[]\n");
}

TEST_CASE("grid parsing") {
  Precision p(30);
  const auto g = cli::parse_grid(" 0.5,14.1347 ; 0.25 ;");
  REQUIRE(g.size() == 2);
  CHECK(g[0].im == R("14.1347"));
  CHECK(g[1].re == R("0.25"));
  CHECK_THROWS_AS(cli::parse_grid(";"), ConfigError);
  CHECK_THROWS_AS(cli::parse_grid("x,1"), ConfigError);
}

TEST_CASE("qpoly: exact coefficients and roots") {
  Outcome o = invoke({"qpoly", "--family", "Q", "--m", "2"});
  CHECK(o.code == 0);
  auto l = lines(o.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "family,m,kind,j,num,den,re,im,residual,precision");
  CHECK(l[1].rfind("Q,2,coeff,0,1,1,", 0) == 0);
  CHECK(l[2].rfind("Q,2,coeff,1,-4,3,", 0) == 0);
  CHECK(l[3].rfind("Q,2,coeff,2,4,3,", 0) == 0);

  o = invoke({"qpoly", "--family", "q", "--m", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["num"] == "1");
  CHECK(j[1]["num"] == "-2");
  CHECK(j[1]["den"] == "1");

  o = invoke({"qpoly", "--m", "2", "--roots", "--format", "json"});
  const auto r = nlohmann::json::parse(o.out);
  REQUIRE(r.size() == 5);
  Precision p(60);
  for (int k : {3, 4}) {
    CHECK(r[k]["kind"] == "root");
    CHECK(abs(abs(Real(r[k]["im"].get<std::string>())) - sqrt(Real(2)) / 2) < tol(2));
    CHECK(Real(r[k]["residual"].get<std::string>()) < tol(10));
  }
}

TEST_CASE("coeffs: alpha table as json, single row, determinism") {
  Outcome o = invoke({"coeffs", "--max-m", "8", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 9);
  CHECK(j[0]["m"] == "0");
  CHECK(j[0]["alpha_2m"].get<std::string>().rfind("-9.135651887866919854", 0) == 0);
  o = invoke({"coeffs", "--max-m", "0"});
  CHECK(lines(o.out).size() == 2);
  CHECK(o.out.find('\r') == std::string::npos);
  const Outcome a = invoke({"coeffs", "--max-m", "3", "--precision", "40"});
  const Outcome b = invoke({"coeffs", "--max-m", "3", "--precision", "40"});
  CHECK(a.out == b.out);
  CHECK(invoke({"coeffs", "--max-m", "51"}).code == 2);
}

TEST_CASE("config file with command-line override") {
  const auto path = temp_file("config.ini");
  {
    std::ofstream f(path);
    f << "# comment\nprecision=40\nmax-m=3\n";
  }
  Outcome o = invoke({"coeffs", "--config", path.string()});
  CHECK(o.code == 0);
  CHECK(lines(o.out).size() == 5);
  CHECK(lines(o.out)[1].find(",40,") != std::string::npos);
  o = invoke({"coeffs", "--config", path.string(), "--max-m", "1"});
  CHECK(lines(o.out).size() == 3);
  {
    std::ofstream f(path);
    f << "no_such_key=1\n";
  }
  CHECK(invoke({"coeffs", "--config", path.string()}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"coeffs", "--precision", "20"}).code == 2);
  CHECK(invoke({"coeffs", "--format", "xml"}).code == 2);
  CHECK(invoke({"conjecture", "--grid", "1.5,0"}).code == 2);
  CHECK(invoke({"conjecture", "--abel", "1.5"}).code == 2);
  CHECK(invoke({"coeffs", "--abel", "0.9"}).code == 2);
  const Outcome o = invoke({"qpoly", "--m", "61", "--roots"});
  CHECK(o.code == 2);
  CHECK(o.err.rfind("config error", 0) == 0);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verify: pass and forced failure") {
  Outcome o = invoke({"verify", "--precision", "30"});
  CHECK(o.code == 0);
  CHECK(o.out.find(",fail,") == std::string::npos);
  CHECK(lines(o.out).size() > 30);
  o = invoke({"verify", "--precision", "30", "--tolerance-scale", "0"});
  CHECK(o.code == 1);
  CHECK(o.err.rfind("check failed: ", 0) == 0);
}

TEST_CASE("conjecture: residual curves on the default grid") {
  Outcome o = invoke({"conjecture", "--precision", "30", "--max-m", "16"});
  REQUIRE(o.code == 0);
  auto l = lines(o.out);
  // 9 points x orders {1,2,4,8,16} x three series
  CHECK(l.size() == 1 + 9 * 5 * 3);
  CHECK(l[0].find("abel") == std::string::npos);
  Precision p(30);
  bool near_zero = false;
  for (size_t i = 1; i < l.size(); ++i) {
    std::vector<std::string> f;
    std::stringstream ss(l[i]);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    REQUIRE(f.size() == 10);
    if (Real(f[2]) > 14 && Real(f[1]) == R("0.5")) {
      const Cx ref{Real(f[6]), Real(f[7])};
      near_zero = near_zero || abs(ref) < Real(1e-6);
    }
  }
  CHECK(near_zero);
  o = invoke({"conjecture", "--precision", "30", "--max-m", "4", "--grid", "0.5,0", "--abel",
              "0.99", "--format", "json"});
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 9);
  CHECK(j[0].contains("abel_residual"));
  CHECK(j[0]["series"] == "theta");
  CHECK(j[0]["M"] == "1");
  CHECK(j[2]["M"] == "4");
  CHECK(j[8]["series"] == "pi_over_sin");
  const Real got(j[8]["re_partial"].get<std::string>());
  CHECK(abs(got - pi_over_sin_expansion(Cx(R("0.5")), 4).partial.re) < tol(5));
  // r = 1 reproduces the undamped sum
  o = invoke({"conjecture", "--precision", "30", "--max-m", "2", "--grid", "0.3,1", "--abel", "1",
              "--format", "json"});
  for (const auto& row : nlohmann::json::parse(o.out))
    CHECK(row["re_partial"] == row["re_abel"]);
}

TEST_CASE("laguerre and appendix commands") {
  Outcome o = invoke({"laguerre", "--precision", "30", "--max-m", "16"});
  CHECK(o.code == 0);
  CHECK(lines(o.out).size() == 18);
  o = invoke({"appendix", "--precision", "30", "--max-m", "12"});
  CHECK(o.code == 0);
  auto l = lines(o.out);
  REQUIRE(l.size() == 14);
  CHECK(l[2].find(",zero,pass,") != std::string::npos);
  CHECK(l[5].find(",nonzero,pass,") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = temp_file("out.csv");
  const Outcome a = invoke({"qpoly", "--m", "5"});
  const Outcome b = invoke({"qpoly", "--m", "5", "--out", path.string()});
  CHECK(b.code == 0);
  CHECK(b.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  std::filesystem::remove(path);
  CHECK(invoke({"qpoly", "--out", "/nonexistent/dir/x.csv"}).code == 2);
}
