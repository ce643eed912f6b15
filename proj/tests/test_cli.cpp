#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "squeezelab/cli.hpp"

using namespace squeezelab::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("variance of a squeezed vacuum") {
  const auto res = invoke({"variance", "--family", "svs", "--r", "1"});
  CHECK(res.code == 0);
  const auto l = lines(res.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "family,var_x,var_p,principal_variance,principal_angle,squeezed");
  CHECK(l[1].rfind("svs,0.0338338208", 0) == 0);
}

TEST_CASE("validation errors exit with 2") {
  auto res = invoke({"variance", "--r", "4"});
  CHECK(res.code == 2);
  CHECK(res.err.find("error=RTooLarge") != std::string::npos);
  res = invoke({"variance", "--family", "coherent", "--alpha", "25"});
  CHECK(res.code == 2);
  CHECK(res.err.find("error=AlphaTooLarge") != std::string::npos);
  res = invoke({"variance", "--family", "nope"});
  CHECK(res.code == 2);
  res = invoke({"frobnicate"});
  CHECK(res.code == 2);
  res = invoke({"energy", "--family", "tmsv"});
  CHECK(res.code == 2);
  CHECK(res.out.empty());
}

TEST_CASE("numeric errors exit with 3") {
  const auto res = invoke({"variance", "--family", "coherent", "--alpha", "3", "--cutoff", "5"});
  CHECK(res.code == 3);
  CHECK(res.err.find("error=CutoffTooSmall") != std::string::npos);
  const auto deg = invoke({"state", "--family", "odd-cat", "--alpha", "0"});
  CHECK(deg.code == 3);
  CHECK(deg.err.find("error=ZeroState") != std::string::npos);
}

TEST_CASE("unwritable output exits with 1") {
  const auto res = invoke({"variance", "-o", "/nonexistent-dir/x.csv"});
  CHECK(res.code == 1);
  CHECK(res.err.find("error=IoError") != std::string::npos);
}

TEST_CASE("empty energy grid gives a header") {
  const auto res = invoke({"energy", "--family", "svs", "--grid", "0"});
  CHECK(res.code == 0);
  CHECK(res.out == "theta,t00\n");
}

TEST_CASE("energy rows") {
  const auto res = invoke({"energy", "--family", "even-cat", "--alpha", "1", "--grid", "4"});
  CHECK(res.code == 0);
  const auto l = lines(res.out);
  REQUIRE(l.size() == 5);
  CHECK(l[1].rfind("0,-0.47681", 0) == 0);
}

TEST_CASE("json output carries metadata") {
  const auto res = invoke({"higher-order", "--family", "svs", "--r", "0.5", "--format", "json", "--seed", "4"});
  REQUIRE(res.code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["meta"]["command"] == "higher-order");
  CHECK(doc["meta"]["seed"] == 4);
  CHECK(doc["meta"]["tool_version"] == kToolVersion);
  CHECK(doc["data"].size() == 5);
  CHECK(doc["data"][0]["criterion"] == "hong_mandel");
}

TEST_CASE("state listing of a two-mode state") {
  const auto res = invoke({"state", "--family", "tmsv", "--r", "0.3"});
  REQUIRE(res.code == 0);
  const auto l = lines(res.out);
  CHECK(l[0] == "n,m,re,im,probability");
  CHECK(l[1].rfind("0,0,", 0) == 0);
}

TEST_CASE("generalized family needs matching lists") {
  CHECK(invoke({"variance", "--family", "generalized-svs", "--r-list", "0.5,1"}).code == 2);
  const auto ok = invoke({"variance", "--family", "generalized-svs", "--r-list", "0.5,1", "--weights", "-0.32678,1"});
  CHECK(ok.code == 0);
  CHECK(lines(ok.out)[1].find(",0.02688") != std::string::npos);
}

TEST_CASE("csv round trip") {
  const auto res = invoke({"state", "--family", "svs", "--r", "0.5"});
  REQUIRE(res.code == 0);
  double total = 0.0;
  const auto l = lines(res.out);
  for (std::size_t i = 1; i < l.size(); ++i) {
    std::istringstream row(l[i]);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 4);
    const double re = std::stod(cells[1]), im = std::stod(cells[2]);
    CHECK(std::stod(cells[3]) == doctest::Approx(re * re + im * im).epsilon(1e-10));
    total += std::stod(cells[3]);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("config file supplies options") {
  const auto path = std::filesystem::temp_directory_path() / "squeezelab_test.ini";
  {
    std::ofstream f(path);
    f << "family=svs\nr=0.5\nformat=json\n";
  }
  const auto res = invoke({"variance", "--config", path.string()});
  std::filesystem::remove(path);
  REQUIRE(res.code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["meta"]["parameters"]["r"] == "0.5");
}

TEST_CASE("optimize reports both methods") {
  const auto res = invoke({"optimize", "--r-list", "0.5,1", "--restarts", "4"});
  REQUIRE(res.code == 0);
  const auto l = lines(res.out);
  REQUIRE(l.size() == 3);
  CHECK(l[1].rfind("simplex,", 0) == 0);
  CHECK(l[2].rfind("eigen,", 0) == 0);
}

TEST_CASE("output file matches stdout") {
  const auto path = std::filesystem::temp_directory_path() / "squeezelab_test.csv";
  const auto a = invoke({"variance", "--family", "pacs", "--alpha", "1.5", "--m", "2", "-o", path.string()});
  REQUIRE(a.code == 0);
  CHECK(a.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::filesystem::remove(path);
  const auto b = invoke({"variance", "--family", "pacs", "--alpha", "1.5", "--m", "2"});
  CHECK(buf.str() == b.out);
}

TEST_CASE("table1 as json") {
  const auto res = invoke({"table1", "--format", "json", "--restarts", "2"});
  REQUIRE(res.code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  REQUIRE(doc["data"].size() == 4);
  CHECK(doc["data"][0]["row"] == 1);
  CHECK(doc["data"][1]["pass"] == true);
}
