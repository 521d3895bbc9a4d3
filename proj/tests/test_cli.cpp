#include "cli.hpp"

#include "fixture_files.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace bomc::cli {
namespace {

using Json = nlohmann::ordered_json;

RunConfig config(const std::string& command, const std::string& instance = "") {
  RunConfig cfg;
  cfg.command = command;
  cfg.instance = instance;
  return cfg;
}

int invoke(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "bomc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

TEST(Cli, SolveC4) {
  const RunOutput r = run(config("solve", "FIX-C4"));
  ASSERT_EQ(r.exit_code, kOk) << r.error;
  const Json j = Json::parse(r.report);
  EXPECT_EQ(j["lp_value"], "4/1");
  EXPECT_EQ(j["ratio_R"], "1/1");
  const auto best = j["best"].get<std::size_t>();
  EXPECT_EQ(j["tours"][best]["length"], "4/1");
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "instance", "lp_value", "x_star",
                                            "active_constraints", "combo", "tours", "best",
                                            "ratio_R"}));
}

TEST(Cli, CertifyTrianglePath) {
  RunConfig cfg = config("certify", "FIX-TRI-PATH");
  cfg.beta = Rat(4, 9);
  const RunOutput r = run(cfg);
  ASSERT_EQ(r.exit_code, kOk) << r.error;
  const Json j = Json::parse(r.report);
  EXPECT_TRUE(j["certificate"]["all_pass"].get<bool>());
  EXPECT_EQ(j["certificate"]["beta"], "4/9");
  EXPECT_EQ(j["certificate"]["checks"].size(), 13U);
}

TEST(Cli, CertifyFixtureFiles) {
  for (const auto& frozen : testing::kFrozen) {
    const RunOutput r = run(config("certify", testing::fixture_path(frozen.file)));
    EXPECT_EQ(r.exit_code, kOk) << frozen.file << " " << r.error;
  }
}

TEST(Cli, ConstantsRow) {
  const RunOutput r = run(config("constants"));
  ASSERT_EQ(r.exit_code, kOk) << r.error;
  const Json j = Json::parse(r.report);
  EXPECT_EQ(j["exact"]["omega"], "1/2");
  EXPECT_EQ(j["exact"]["f_of_beta"], "1/9");
  EXPECT_EQ(j["exact"]["epsilon"], "1/10");
  EXPECT_EQ(j["exact"]["expectation_coefficient"], "3/5");
  EXPECT_EQ(j["exact"]["ratio"], "8/5");
  EXPECT_LE(j["mixed_minimum"]["y"].get<double>(), 1e-4);
}

TEST(Cli, OracleCommand) {
  const RunOutput r = run(config("oracle", testing::fixture_path("gap-n6-t4.txt")));
  ASSERT_EQ(r.exit_code, kOk) << r.error;
  const Json j = Json::parse(r.report);
  EXPECT_EQ(j["opt_length"], "43/4");
  EXPECT_EQ(j["lp_value"], "125/12");
  EXPECT_TRUE(j["all_pass"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run(config("solve", "no-such-file.txt")).exit_code, kParseError);
  RunConfig caps = config("solve", "FIX-C4");
  caps.caps.partition_enum = 2;
  EXPECT_EQ(run(caps).exit_code, kCapacityError);
  RunConfig beta = config("certify", "FIX-C4");
  beta.beta = Rat(1, 2);
  EXPECT_EQ(run(beta).exit_code, kParseError);
  RunConfig fig = config("gen");
  fig.family = "lowerbound-figure2";
  EXPECT_EQ(run(fig).exit_code, kFailure);
  RunConfig fmt = config("solve", "FIX-C4");
  fmt.format = "xml";
  EXPECT_EQ(run(fmt).exit_code, kParseError);
  EXPECT_EQ(run(config("bogus")).exit_code, kParseError);
}

TEST(Cli, MalformedInstanceFile) {
  const auto path = std::filesystem::temp_directory_path() / "bomc_bad_instance.txt";
  {
    std::ofstream f(path);
    f << "3 2 2\n0 2\n0 1 1\n";
  }
  const RunOutput r = run(config("solve", path.string()));
  EXPECT_EQ(r.exit_code, kParseError);
  EXPECT_NE(r.error.find("line"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ArgumentParsing) {
  std::string text;
  EXPECT_EQ(invoke({"certify", "FIX-EDGE", "--beta", "4/9", "--format", "text"}, &text), kOk);
  EXPECT_NE(text.find("certificate PASS"), std::string::npos);
  EXPECT_EQ(invoke({"certify", "FIX-EDGE", "--beta", "four"}), kParseError);
  EXPECT_EQ(invoke({"solve"}), kParseError);
  EXPECT_EQ(invoke({"solve", "FIX-C4", "--cap-matching", "0"}), kParseError);
  EXPECT_EQ(invoke({"gen", "--n", "5", "--m", "3"}), kParseError);
  EXPECT_EQ(invoke({"gen", "lowerbound-figure2"}), kFailure);
  EXPECT_EQ(invoke({"solve", "FIX-C4", "--cap-bruteforce-edges", "1"}), kOk);
}

TEST(Cli, GenWritesParsableInstance) {
  std::string text;
  ASSERT_EQ(invoke({"gen", "--n", "5", "--m", "7", "--t-size", "2", "--seed", "4"}, &text), kOk);
  std::string again;
  invoke({"gen", "--n", "5", "--m", "7", "--t-size", "2", "--seed", "4"}, &again);
  EXPECT_EQ(text, again);
  const Instance inst = parse_instance(text);
  EXPECT_EQ(inst.graph().edge_count(), 7);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "bomc_cli_out.json";
  ASSERT_EQ(invoke({"solve", "FIX-TRI-TOUR", "--out", path.string()}), kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(Json::parse(buf.str())["lp_value"], "3/1");
  std::filesystem::remove(path);
}

TEST(Cli, ByteIdenticalReports) {
  for (const char* cmd : {"solve", "certify", "oracle"}) {
    const RunOutput a = run(config(cmd, testing::fixture_path("rand-n6-t4.txt")));
    const RunOutput b = run(config(cmd, testing::fixture_path("rand-n6-t4.txt")));
    ASSERT_EQ(a.exit_code, kOk) << cmd;
    EXPECT_EQ(a.report, b.report) << cmd;
  }
  EXPECT_EQ(run(config("constants")).report, run(config("constants")).report);
}

}  // namespace
}  // namespace bomc::cli
