#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using dzeta::cli::run_cli;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "dzeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dzeta_test_" + name);
}

}  // namespace

TEST(CliParse, Curves) {
  auto e = dzeta::cli::parse_curve("elliptic:q=2,a=0");
  EXPECT_EQ(e.q, 2);
  EXPECT_EQ(e.trace, 0);
  auto j = dzeta::cli::parse_curve(R"({"label":"x","q":2,"genus":2,"point_counts":[3,5]})");
  EXPECT_EQ(j.genus, 2);
  EXPECT_EQ(j.label, "x");
  auto n = dzeta::cli::parse_curve(R"({"label":"n","q":2,"genus":1,"numerator":["1/1","0/1","2/1"]})");
  EXPECT_EQ(n.numerator.size(), 3u);
  auto c = dzeta::cli::parse_curve("catalog:y^2+y=x^5/F2");
  EXPECT_EQ(c.point_counts, (std::vector<long>{3, 5}));
  EXPECT_THROW(dzeta::cli::parse_curve("elliptic:q=2"), dzeta::cli::UsageError);
  EXPECT_THROW(dzeta::cli::parse_curve("/nonexistent/curve.json"), dzeta::cli::UsageError);
}

TEST(CliParse, TuplesAndTolerance) {
  EXPECT_EQ(dzeta::cli::parse_tuple("2,3"), (std::vector<int>{2, 3}));
  EXPECT_THROW(dzeta::cli::parse_tuple("0"), dzeta::cli::UsageError);
  EXPECT_THROW(dzeta::cli::parse_tuple("2,x"), dzeta::cli::UsageError);
  EXPECT_EQ(dzeta::cli::parse_tuples("2;3;2,2"), (std::vector<std::vector<int>>{{2}, {3}, {2, 2}}));
  EXPECT_EQ(dzeta::cli::parse_tolerance_exp("1e-30"), 30);
  EXPECT_EQ(dzeta::cli::parse_tolerance_exp("12"), 12);
  EXPECT_THROW(dzeta::cli::parse_tolerance_exp("0.5"), dzeta::cli::UsageError);
}

TEST(CliParse, Sha256) {
  EXPECT_EQ(dzeta::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CliDerive, TwoLevels) {
  CliRun r = run({"derive", "--curve", "elliptic:q=2,a=0", "--tuple", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["levels"].size(), 2u);
  EXPECT_EQ(j["levels"][0]["Q"], "4/1");
  EXPECT_EQ(j["levels"][1]["Q"], "64/1");
  EXPECT_EQ(j["levels"][1]["numerator"], Json({"378/5", "2808/5", "24192/5"}));
  EXPECT_NE(r.err.find("level (2,3): Q=64/1"), std::string::npos);
}

TEST(CliDerive, TupleOneIsIdentity) {
  CliRun r = run({"derive", "--curve", "elliptic:q=3,a=1", "--tuple", "1"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["levels"][0]["zeta"], j["base"]["zeta"]);
  EXPECT_EQ(j["levels"][0]["numerator"], j["base"]["numerator"]);
}

TEST(CliDerive, OutputFileAndDeterminism) {
  auto path = temp_file("derive.json");
  CliRun a = run({"derive", "--curve", "elliptic:q=2,a=1", "--tuple", "2,2", "--normalize", "-o", path.string()});
  ASSERT_EQ(a.code, 0) << a.err;
  std::ifstream f1(path);
  std::stringstream s1;
  s1 << f1.rdbuf();
  CliRun b = run({"derive", "--curve", "elliptic:q=2,a=1", "--tuple", "2,2", "--normalize"});
  EXPECT_EQ(s1.str(), b.out);
  EXPECT_NE(a.out.find("level (2)"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliDerive, Errors) {
  EXPECT_EQ(run({"derive", "--curve", "/no/such/file.json", "--tuple", "2"}).code, 2);
  EXPECT_EQ(run({"derive", "--curve", "elliptic:q=2,a=4", "--tuple", "2"}).code, 2);
  EXPECT_EQ(run({"derive", "--curve", "elliptic:q=6,a=0", "--tuple", "2"}).code, 2);
  CliRun cap = run({"derive", "--curve", "elliptic:q=2,a=0", "--tuple", "9,9"});
  EXPECT_EQ(cap.code, 2);
  EXPECT_NE(cap.err.find("cap"), std::string::npos);
  EXPECT_EQ(run({"derive", "--curve", "elliptic:q=2,a=0", "--tuple", "3,3", "--max-product", "8"}).code, 2);
  EXPECT_EQ(run({"derive", "--curve", "elliptic:q=2,a=0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliDerive, CurveFile) {
  auto path = temp_file("curve.json");
  {
    std::ofstream f(path);
    f << R"({"label": "file-curve", "q": 2, "genus": 1, "trace": 0})";
  }
  CliRun r = run({"derive", "--curve", path.string(), "--tuple", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["curve"], "file-curve");
  std::filesystem::remove(path);
}

TEST(CliInvariants, ReportShape) {
  CliRun r = run({"invariants", "--curve", "elliptic:q=2,a=0", "--tuple", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["curve"], "elliptic:q=2,a=0");
  EXPECT_EQ(j[0]["tuple"], Json({2}));
  EXPECT_EQ(j[0]["Q"], "4/1");
  EXPECT_EQ(j[0]["alphas"], Json({"3/1"}));
  EXPECT_EQ(j[0]["beta"], "6/1");
  EXPECT_EQ(j[0]["positivity"], true);
  EXPECT_TRUE(j[0]["gamma_signs"].contains("2"));
}

TEST(CliInvariants, CsvAndBadTuple) {
  CliRun r = run({"invariants", "--curve", "elliptic:q=2,a=0", "--tuple", "2,2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "curve,tuple,Q,genus,alphas,beta,positivity");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(run({"invariants", "--curve", "elliptic:q=2,a=0", "--tuple", "0"}).code, 2);
  EXPECT_EQ(run({"invariants", "--curve", "elliptic:q=2,a=0", "--tuple", "2", "--format", "xml"}).code, 2);
}

TEST(CliRhCheck, ExactGenus1) {
  CliRun r = run({"rh-check", "--curve", "elliptic:q=2,a=0", "--tuple", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"]["method"], "exact_g1");
  EXPECT_EQ(j["verdict"]["status"], "holds");
}

TEST(CliRhCheck, NumericGenus2) {
  CliRun r = run({"rh-check", "--curve", "catalog:y^2+y=x^5/F2", "--tuple", "2", "--tolerance", "1e-30"});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"]["method"], "numeric");
  EXPECT_EQ(j["verdict"]["tolerance"], "1e-30");
  EXPECT_EQ(j["verdict"]["deviations"].size(), 4u);
}

TEST(CliRhCheck, FailingNumeratorExitsOne) {
  // Symmetric numerator with a^2 = 25 > 4q.
  CliRun r = run({"rh-check", "--curve", R"({"label":"bad","q":4,"genus":1,"numerator":["1","5","4"]})", "--numeric"});
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_EQ(Json::parse(r.out)["verdict"]["status"], "fails");
}

TEST(CliRhCheck, PrecisionFromEnvironment) {
  setenv("DZETA_PRECISION_BITS", "128", 1);
  CliRun r = run({"rh-check", "--curve", "elliptic:q=2,a=0", "--numeric"});
  unsetenv("DZETA_PRECISION_BITS");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["verdict"]["precision_bits"], 128);
}

TEST(CliSweep, BuiltinEllipticReport) {
  CliRun r = run({"sweep", "--grid", "builtin-elliptic", "--tuples", "2;3;2,2", "--checks", "positivity,rh,miracle,beta_routes", "--jobs", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["config_hash"].get<std::string>().size(), 64u);
  EXPECT_EQ(j["cells"].size(), 3u * 30u);
  EXPECT_EQ(j["summary"]["rh"]["pass"], 90);
  EXPECT_EQ(j["summary"]["errors"], 0);
  EXPECT_EQ(j["cells"][0]["checks"]["rh"], "pass");
  EXPECT_EQ(j["cells"][0]["data"]["rh"]["method"], "exact_g1");
}

TEST(CliSweep, AllChecksReportsInterlacingFailure) {
  CliRun r = run({"sweep", "--curve", "elliptic:q=2,a=0", "--tuples", "2", "--checks", "all"});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["cells"][0]["checks"]["interlacing"], "fail");
  EXPECT_EQ(j["cells"][0]["checks"]["positivity"], "pass");
}

TEST(CliSweep, DeterministicBytes) {
  std::vector<std::string> args = {"sweep", "--grid", "builtin-catalog", "--tuples", "2;2,2", "--checks", "positivity,rh,beta_routes"};
  CliRun a = run(args);
  args.push_back("--jobs");
  args.push_back("3");
  CliRun b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSweep, CsvRatioAndErrors) {
  auto ratio = temp_file("ratio.csv");
  CliRun r = run({"sweep", "--curve", "elliptic:q=2,a=0", "--curve", "elliptic:q=3,a=1", "--tuples", "2", "--checks",
               "positivity", "--format", "csv", "--ratio-csv", ratio.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "curve,tuple,positivity,error");
  std::ifstream f(ratio);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "curve,Q,n,beta,b_n,ratio,bound_ok");
  std::string first;
  std::getline(f, first);
  EXPECT_EQ(first, "\"elliptic:q=2,a=0\",2/1,1,3/1,3/1,3/1,true");
  std::filesystem::remove(ratio);

  EXPECT_EQ(run({"sweep", "--curve", "elliptic:q=2,a=0", "--tuples", "2", "--checks", "bogus"}).code, 2);
  EXPECT_EQ(run({"sweep", "--grid", "nope", "--tuples", "2"}).code, 2);
  EXPECT_EQ(run({"sweep", "--curve", "elliptic:q=2,a=0", "--tuples", "2;0"}).code, 2);
}

TEST(CliSweep, EmptyGrid) {
  CliRun r = run({"sweep", "--tuples", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["cells"].empty());
}

TEST(CliCatalog, Lists) {
  CliRun r = run({"catalog"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.size(), 5u);
  EXPECT_EQ(j[0]["point_counts"][0], 3);
}
