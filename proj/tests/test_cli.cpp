#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = grent::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("series") {
  auto s = run({"series", "symmetric", "8"});
  CHECK(s.code == 0);
  CHECK(lines(s.out).back().find("2.7179") != std::string::npos);

  auto a = run({"series", "alternating", "8"});
  CHECK(lines(a.out).back().find("2.7357") != std::string::npos);

  auto c = run({"series", "cyclic", "30", "--format", "csv"});
  auto rows = lines(c.out);
  CHECK(rows[0] == "n,series_value_exact,series_value_float,is_prime");
  CHECK(rows[5] == "5,9/5,1.8,1");
  CHECK(rows.size() == 31);

  auto d = run({"--format", "json", "series", "dihedral", "5"});
  auto j = json::parse(d.out);
  CHECK(j["series"].size() == 3);
  CHECK(j["series"][0]["n"] == 3);
}

TEST_CASE("table-a1") {
  auto r = run({"table-a1"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[1] == "1S\t1\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t\t1\t1.0000");
  CHECK(rows[10].rfind("5A\t1\t0\t20\t15\t0\t0\t24\t", 0) == 0);
  CHECK(rows[10].find("\t60\t2.2333") != std::string::npos);
  CHECK(rows[11].rfind("6S\t1\t15\t40\t45\t90\t120\t144\t15\t90\t40\t120\t", 0) == 0);
  CHECK(rows[15].find("\t40320\t2.7179") != std::string::npos);
  CHECK(rows[16].find("\t20160\t2.7357") != std::string::npos);

  CHECK(run({"table-a1", "10"}).code == 3);
}

TEST_CASE("poly") {
  auto r = run({"poly", "symmetric", "4"});
  CHECK(r.out == "x^4 + 6x^3 + 11x^2 + 6x\n");
  auto q = run({"poly", "symmetric", "4", "transposition", "--format", "csv"});
  CHECK(q.out == "x^0,x^1,x^2,x^3,x^4\n1,6,11,6,0\n");
  auto sb = run({"poly", "sb4"});
  CHECK(sb.out == "x^4 + 4x^3 + 11x^2 + 6x\n");

  auto path = temp_file("grent_c5_gen.txt", "# generator of C_5\n(1 2 3 4 5)\n");
  auto gen = run({"poly", "--file", path.string(), "--generated"});
  CHECK(gen.out == "x^5 + 4x\n");
  auto single = run({"poly", "--file", path.string()});
  CHECK(single.out == "x\n");
  std::filesystem::remove(path);
}

TEST_CASE("roots") {
  auto r = run({"roots", "cyclic", "5"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["roots"].size() == 5);
  CHECK(j["identity_checks"]["root_sum_cycles"]["value"].get<double>() == doctest::Approx(1.8));
  CHECK(j["identity_checks"]["root_sum_cycles"]["expected"].get<double>() == 1.8);
  CHECK(j["identity_checks"]["reciprocity"]["passed"] == true);
}

TEST_CASE("entropy") {
  auto r = run({"--format", "json", "entropy", "alternating", "3,3,5,5", "--search", "4"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["search"]["query_is_argmax"] == true);
  CHECK(j["search"]["argmax"] == json::array({5, 5, 3, 3}));

  auto t = run({"entropy", "symmetric", "1,1"});
  CHECK(t.out.find("J = 1/2") != std::string::npos);

  auto bits = run({"--log-base", "2", "entropy", "symmetric", "1,1"});
  CHECK(bits.out.find("I = 1.000000 bits") != std::string::npos);
}

TEST_CASE("converge") {
  auto r = run({"converge", "1,3"});
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "scale,N,J,I,abs_diff");
  CHECK(rows[4].rfind("1000,4000,", 0) == 0);
  CHECK(run({"converge", "1,3"}).out == r.out);
}

TEST_CASE("balanced") {
  auto r = run({"--format", "json", "balanced", "4"});
  auto j = json::parse(r.out);
  CHECK(j["minimal_deletions"] == 2);
  CHECK(j["solutions"][0]["cycle_polynomial"] == "x^4 + 4x^3 + 11x^2 + 6x");
  CHECK(j["solutions"][0]["report"]["is_group"] == false);

  auto path = temp_file("grent_s2.txt", "()\n(1 2)\n");
  auto check = run({"--format", "json", "balanced", "check", "--file", path.string()});
  auto c = json::parse(check.out);
  CHECK(c["expected_cycles"] == "3/2");
  CHECK(c["is_balanced"] == false);
  CHECK(c["is_group"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  auto r = run({"verify", "all", "8"});
  CHECK(r.code == 0);
  auto roots = run({"--format", "json", "verify", "rootsums", "12"});
  CHECK(roots.code == 0);
  auto bounds = run({"--format", "json", "verify", "bounds", "9"});
  CHECK(json::parse(bounds.out)["passed"] == true);
}

TEST_CASE("errors are reported as JSON") {
  auto bad = run({"series", "klein", "4"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.err).contains("error"));
  CHECK(run({"poly", "dihedral", "2"}).code == 2);
  CHECK(run({"entropy", "symmetric", "3,0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--format", "xml", "series", "symmetric", "3"}).code == 2);
  CHECK(run({"poly", "--file", "/nonexistent/perms.txt"}).code == 2);
}

TEST_CASE("--out writes to a file") {
  auto path = std::filesystem::temp_directory_path() / "grent_out.csv";
  auto r = run({"--out", path.string(), "--format", "csv", "series", "symmetric", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,series_value_exact,series_value_float");
  std::filesystem::remove(path);
}

TEST_CASE("table-a1 helpers") {
  auto cols = grent::cli::table_a1_columns(8);
  CHECK(cols.size() == 22);
  CHECK(cols.front().empty());
  CHECK(cols.back() == std::vector<grent::Point>{8});
  auto rows = grent::cli::table_a1_rows(8);
  CHECK(rows.size() == 16);
}
