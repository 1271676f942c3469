#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace dualgr;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dualgr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, Degrees) {
  Result r = run_cli({"degrees", "--k", "3", "--N", "8"});
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["total"], 15);
  EXPECT_EQ(j["degrees"], json::array({15}));
  EXPECT_EQ(j["version"], version());
}

TEST(Cli, InputErrorsExitTwo) {
  std::string bad = temp_file("bad.json", "{\"k\":3}");
  Result r = run_cli({"det", "--input", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(json::parse(r.err).contains("error"));
  EXPECT_EQ(run_cli({"det", "--input", temp_file("broken.json", "{")}).code, 2);
  EXPECT_EQ(run_cli({"det", "--input", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"degrees", "--k", "x", "--N", "8"}).code, 2);
  EXPECT_EQ(run_cli({"verify-certificates", "--id", "nope"}).code, 2);
}

TEST(Cli, UnsortedArrayRejected) {
  std::string path = temp_file("unsorted.json", R"({"k":2,"N":4,"entries":[{"I":[2,1],"c":"1"}]})");
  EXPECT_EQ(run_cli({"det", "--input", path}).code, 2);
  std::string dup = temp_file("dup.json", R"({"k":2,"N":4,"entries":[{"I":[1,3],"c":"1"},{"I":[1,3],"c":"2"}]})");
  EXPECT_EQ(run_cli({"hessian", "--input", dup}).code, 2);
}

TEST(Cli, DeterminantOfArray) {
  std::string path = temp_file("arr.json", R"({"k":2,"N":4,"entries":[{"I":[3,4],"c":"5"}]})");
  Result r = run_cli({"det", "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  // H(2,4) = [[0, S], [-S, 0]] with S = [[0, 5], [-5, 0]], so det = 5^4.
  EXPECT_EQ(json::parse(r.out)["det"], "625");
}

TEST(Cli, VerifyCertificates) {
  Result one = run_cli({"verify-certificates", "--id", "corank-4-8"});
  EXPECT_EQ(one.code, 0);
  json j = json::parse(one.out);
  EXPECT_EQ(j["rank"], 15);
  EXPECT_EQ(j["checksums"]["corank-4-8"], checksum_hex(embedded_checksum("corank-4-8")));
  Result all = run_cli({"verify-certificates"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(std::count(all.out.begin(), all.out.end(), '\n'), 10);
}

TEST(Cli, ExportImportAndCorruption) {
  Result ex = run_cli({"export-certificate", "--id", "corank-3-10"});
  ASSERT_EQ(ex.code, 0);
  std::string path = temp_file("c.json", ex.out);
  EXPECT_EQ(run_cli({"verify-certificates", "--input", path}).code, 0);
  json j = json::parse(ex.out);
  j.erase("checksum");
  j["blocks"]["A23"][2][3] = j["blocks"]["A23"][2][3].get<int>() + 1;
  std::string bad = temp_file("c_bad.json", j.dump());
  Result r = run_cli({"verify-certificates", "--input", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("A23[3][4]"), std::string::npos);
}

TEST(Cli, SeededRunsAreByteIdentical) {
  std::vector<std::string> args = {"identity-h36", "--skip-symbolic", "--trials", "3", "--lines", "2", "--seed", "7"};
  Result a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Result c = run_cli({"duality", "--k", "3", "--N", "7", "--trials", "2", "--seed", "3"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, run_cli({"duality", "--k", "3", "--N", "7", "--trials", "2", "--seed", "3"}).out);
}

TEST(Cli, TextFormat) {
  Result r = run_cli({"--format", "text", "degrees", "--k", "3", "--N", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("degrees: [3,6,9]"), std::string::npos);
}

TEST(Cli, IrreducibleTrace) {
  Result r = run_cli({"irreducible", "--k", "3", "--N", "11"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["results"][0]["irreducible"], true);
  EXPECT_FALSE(j["steps"].empty());
}

TEST(Cli, NodeAndVerifyNode) {
  Result r = run_cli({"node", "--k", "3", "--N", "7", "--J", "1,6,7", "--T", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["spans_equal"], true);
  EXPECT_EQ(j["x"][0][4], "1/2");
  EXPECT_EQ(run_cli({"node", "--k", "3", "--N", "7", "--J", "1,4,7"}).code, 2);
  EXPECT_EQ(run_cli({"verify-node", "--id", "node-3-11"}).code, 0);
  EXPECT_EQ(run_cli({"verify-node", "--id", "corank-3-9"}).code, 2);
}

TEST(Cli, CriticalAndSpecialize) {
  std::string arr = temp_file("crit.json", R"({"k":2,"N":4,"entries":[{"I":[3,4],"c":"1"}]})");
  Result r = run_cli({"critical", "--input", arr});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["critical_at_origin"], true);
  EXPECT_EQ(j["cusp"], false);
  Result h = run_cli({"hessian", "--input", arr});
  ASSERT_EQ(h.code, 0);
  std::string hp = temp_file("h.json", h.out);
  Result s = run_cli({"specialize", "--left", hp, "--right", hp});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json::parse(s.out)["det"], "1");
}

TEST(Cli, BuildCertificate) {
  Result r = run_cli({"build-certificate", "--k", "3", "--N", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["corank"], 1);
}
