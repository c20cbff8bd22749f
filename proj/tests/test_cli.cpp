#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "egc/cli.hpp"
#include "oracles.hpp"

using namespace egc;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
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

std::string cell(const Json& v) { return v.is_null() ? "" : v.get<std::string>(); }

int significant_digits(const std::string& s) {
  int n = 0;
  bool leading = true;
  for (char c : s) {
    if (c == 'e') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("delta to 50 digits") {
  const auto r = call({"delta", "--digits", "50", "--method", "cross"});
  CHECK(r.code == 0);
  const BigFloat want = exp(BigFloat(400, 1L)) * oracle::e1_at_one(400);
  CHECK(r.out.find("delta = " + want.to_string(50) + "\n") == 0);
}

TEST_CASE("approx JSON example") {
  const auto r = call({"approx", "--corollary", "1", "--r", "0", "--max-m", "3",
                       "--digits", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "approx");
  CHECK(j["corollary"] == 1);
  CHECK(j["r"] == 0);
  CHECK(j["digits"] == 10);
  CHECK(j["target_sign"] == "+");
  const auto& rows = j["rows"];
  REQUIRE(rows.size() == 3);
  const char* want[3][2] = {{"1", "2"}, {"4", "7"}, {"20", "34"}};
  for (int i = 0; i < 3; ++i) {
    CHECK(rows[i]["m"] == i + 1);
    CHECK(rows[i]["a"] == want[i][0]);
    CHECK(rows[i]["b"] == want[i][1]);
    CHECK(rows[i]["ratio"].is_string());
    CHECK(significant_digits(rows[i]["ratio"]) == 10);
    CHECK(significant_digits(rows[i]["abs_error"]) == 10);
  }
  CHECK(rows[1]["ratio"] == "0.5714285714");
}

TEST_CASE("approx CSV and JSON carry the same rows") {
  const std::vector<std::string> base{"approx", "--corollary", "2", "--r", "2",
                                      "--max-m", "12", "--digits", "15"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto csv = csv_rows(call(csv_args).out);
  const Json j = Json::parse(call(json_args).out);
  REQUIRE(csv.front() == std::vector<std::string>{"m", "a", "b", "ratio",
                                                  "abs_error", "target_sign"});
  REQUIRE(csv.size() == j["rows"].size() + 1);
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    const auto& row = j["rows"][i];
    const auto& c = csv[i + 1];
    REQUIRE(c.size() == 6);
    CHECK(c[0] == std::to_string(row["m"].get<long>()));
    CHECK(c[1] == cell(row["a"]));
    CHECK(c[2] == cell(row["b"]));
    CHECK(c[3] == cell(row["ratio"]));
    CHECK(c[4] == cell(row["abs_error"]));
    CHECK(c[5] == j["target_sign"]);
  }
  // m = r = 2 has b = 0.
  CHECK(j["rows"][0]["ratio"].is_null());
  CHECK(csv[1][3].empty());
}

TEST_CASE("identities CSV and JSON agree, and the negative control fails") {
  const auto csv_out = call({"identities", "--max-m", "4", "--max-m2", "5",
                             "--max-m-gauss", "5", "--exact-only", "--format", "csv"});
  const auto json_out = call({"identities", "--max-m", "4", "--max-m2", "5",
                              "--max-m-gauss", "5", "--exact-only", "--format", "json"});
  CHECK(csv_out.code == 0);
  CHECK(json_out.code == 0);
  const auto csv = csv_rows(csv_out.out);
  const Json j = Json::parse(json_out.out);
  REQUIRE(csv.front() ==
          std::vector<std::string>{"identity", "params", "verdict", "residual"});
  REQUIRE(csv.size() == j["reports"].size() + 1);
  for (std::size_t i = 0; i < j["reports"].size(); ++i) {
    const auto& rep = j["reports"][i];
    CHECK(csv[i + 1][0] == rep["identity"]);
    CHECK(csv[i + 1][1] == rep["params"]);
    CHECK(csv[i + 1][2] == rep["verdict"]);
    CHECK(csv[i + 1][3] == cell(rep["residual"]));
  }

  const auto bad = call({"identities", "--max-m", "12", "--exact-only", "--corrupt"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL gauss_terminating") != std::string::npos);
}

TEST_CASE("theorem and conjecture outputs") {
  const auto t = call({"theorem", "--u", "1/2", "--max-m", "4", "--format", "json"});
  REQUIRE(t.code == 0);
  const Json tj = Json::parse(t.out);
  CHECK(tj["u"] == "1/2");
  CHECK(tj["rows"].size() == 5);
  const auto dec = call({"theorem", "--u", "0.5", "--max-m", "4", "--format", "json"});
  CHECK(dec.out == t.out);

  const auto c = call({"conjecture", "--u", "2", "--max-m", "3", "--digits", "12",
                       "--format", "json"});
  REQUIRE(c.code == 0);
  const Json cj = Json::parse(c.out);
  CHECK(cj["rows"].size() == 6);
  CHECK((cj["calibrated_convention"] == "plus" || cj["calibrated_convention"] == "minus"));
  CHECK(cj["notes"].size() == 3);
}

TEST_CASE("usage errors exit 2 and name the flag") {
  auto r = call({"delta", "--digits", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--digits") != std::string::npos);
  CHECK(r.err.find("10") != std::string::npos);
  CHECK(call({"delta", "--digits", "1001"}).code == 2);
  CHECK(call({"delta", "--format", "xml"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  r = call({"theorem", "--u", "1/x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--u") != std::string::npos);
  CHECK(call({"theorem", "--u", "-1"}).code == 2);
  CHECK(call({"conjecture", "--u", "0"}).code == 2);
  CHECK(call({"approx", "--corollary", "3"}).code == 2);
  CHECK(call({"approx", "--corollary", "2", "--r", "0"}).code == 2);
  CHECK(call({"approx", "--r", "5", "--max-m", "3"}).code == 2);
  CHECK(call({"approx", "--max-m", "201"}).code == 2);
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("approx") != std::string::npos);
}

TEST_CASE("defaults") {
  std::ostringstream sink;
  auto cfg = cli::parse_args({"approx", "--corollary", "2"}, sink);
  REQUIRE(cfg);
  CHECK(*cfg->r == 1);
  CHECK(*cfg->max_m == 40);
  CHECK(cfg->digits == 30);
  CHECK(cfg->format == cli::Format::kText);
  cfg = cli::parse_args({"theorem", "--u", "0.25"}, sink);
  CHECK(cfg->u == BigRat(1, 4));
  CHECK(*cfg->max_m == 30);
}

TEST_CASE("--out writes the file atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "egc_cli_test";
  fs::create_directories(dir);
  const fs::path file = dir / "table.csv";
  fs::remove(file);
  const auto r = call({"approx", "--max-m", "5", "--format", "csv", "--out",
                       file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(file);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == call({"approx", "--max-m", "5", "--format", "csv"}).out);
  long entries = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 1);
  fs::remove_all(dir);
  CHECK(call({"approx", "--out", "/nonexistent-dir/x.csv"}).code == 1);
}

TEST_CASE("output does not depend on the thread count") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"approx", "--max-m", "25", "--format", "json"},
           {"theorem", "--u", "3/2", "--max-m", "8", "--format", "csv"},
           {"conjecture", "--max-m", "5", "--digits", "15"}}) {
    auto one = args;
    one.insert(one.end(), {"--threads", "1"});
    auto four = args;
    four.insert(four.end(), {"--threads", "4"});
    const auto a = call(one);
    const auto b = call(four);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == call(args).out);
  }
}

}  // TEST_SUITE
