// Copyright 2026 The reachpipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <gtest/gtest.h>
#include <json.hpp>

#include "reachpipe/cli/commands.hpp"

namespace fs = std::filesystem;

namespace reachpipe::cli {
namespace {

const std::string kModels = REACHPIPE_MODELS_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("reachpipe_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return path(name);
  }

  fs::path dir_;
};

const std::string kModel = kModels + "/cruise.xml";
const std::string kConfig = kModels + "/cruise.cfg";

TEST_F(CliTest, CheckBundledVerified) {
  const Result r = run_cli({"check", kModel, kConfig});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count(r.out, "Verified"), 2u) << r.out;
  EXPECT_EQ(count(r.out, "\n"), 2u) << r.out;
  EXPECT_NE(r.err.find("accuracy"), std::string::npos);
}

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(run_cli({"check", kModel, kModels + "/cruise_falsify.cfg"}).code, kExitFalsified);
  EXPECT_EQ(run_cli({"check", kModel, kModels + "/cruise_unknown.cfg"}).code, kExitUnknown);
  // Falsified outranks Unknown.
  const std::string both = write("both.cfg", slurp(kModels + "/cruise_unknown.cfg") +
                                                 "check.rise_time = v, 0.9, 1\n");
  EXPECT_EQ(run_cli({"check", kModel, both}).code, kExitFalsified);
  const std::string none = write("none.cfg", "system = cruise_control\ninitially = \"v==0 & q==0\"\n"
                                             "time-horizon = 1\n");
  EXPECT_EQ(run_cli({"check", kModel, none}).code, kExitInputError);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run_cli({"reach", path("missing.xml"), kConfig}).code, kExitInputError);
  EXPECT_EQ(run_cli({"reach", kModel}).code, kExitInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"reach", kModel, kConfig, "--delta", "abc"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"reach", kModel, kConfig, "--delta", "20"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"reach", kModel, kConfig, "--plot", "time", "zz"}).code, kExitInputError);

  const std::string bad = write("bad.xml", "<?xml version=\"1.0\"?>\n<sspaceex>\n<component id=\"a\">\n</sspaceex>\n");
  const Result r = run_cli({"info", bad});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("bad.xml:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

TEST_F(CliTest, NumericFailure) {
  const std::string model = write("blowup.xml", R"(<?xml version="1.0"?>
<sspaceex version="0.2">
  <component id="blowup">
    <param name="x" type="real" local="false" dynamics="any"/>
    <location id="1"><flow>x' == 50*x</flow></location>
  </component>
</sspaceex>
)");
  const std::string cfg = write("blowup.cfg", "system = blowup\ninitially = \"1 <= x <= 2\"\ntime-horizon = 20\n");
  const Result r = run_cli({"reach", model, cfg});
  EXPECT_EQ(r.code, kExitNumericError) << r.err;
}

TEST_F(CliTest, ReachArtifactsAreDeterministic) {
  const Result a = run_cli({"reach", kModel, kConfig, "--output", path("a.csv"), "--plot", "time", "v",
                            "--svg", path("a.svg"), "--report", path("a.json"), "--no-timing"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const Result b = run_cli({"reach", kModel, kConfig, "--output", path("b.csv"), "--plot", "time", "v",
                            "--svg", path("b.svg"), "--report", path("b.json"), "--no-timing"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg")));
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos) << entry.path();
  }
}

TEST_F(CliTest, FlowpipeCsvLayout) {
  ASSERT_EQ(run_cli({"reach", kModel, kConfig, "--output", path("fp.csv")}).code, kExitOk);
  const std::string csv = slurp(path("fp.csv"));
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "step,t_lo,t_hi,v_lo,v_hi,q_lo,q_hi");
  EXPECT_EQ(count(csv, "\n"), 401u);
  EXPECT_NE(csv.find("\n1,0.025000000000000001,0.050000000000000003,"), std::string::npos);
}

TEST_F(CliTest, SvgHasOnePolygonPerSegment) {
  ASSERT_EQ(run_cli({"reach", kModel, kConfig, "--plot", "v", "q", "--svg", path("vq.svg")}).code, kExitOk);
  const std::string svg = slurp(path("vq.svg"));
  EXPECT_EQ(count(svg, "<polygon"), 400u);
  boost::property_tree::ptree tree;
  std::istringstream in(svg);
  EXPECT_NO_THROW(boost::property_tree::read_xml(in, tree));
  EXPECT_NE(svg.find(">v</text>"), std::string::npos);

  ASSERT_EQ(run_cli({"reach", kModel, kConfig, "--plot", "time", "v", "--output", path("run.csv")}).code,
            kExitOk);
  EXPECT_TRUE(fs::exists(path("run_time_v.svg")));
  EXPECT_NE(slurp(path("run_time_v.svg")).find("t [s]"), std::string::npos);
}

TEST_F(CliTest, ReportContents) {
  ASSERT_EQ(run_cli({"reach", kModel, kConfig, "--delta", "0.1", "--report", path("r.json")}).code, kExitOk);
  const auto j = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "reach");
  EXPECT_EQ(j["config"]["sampling_time"], 0.1);
  EXPECT_EQ(j["config"]["scenario"], "stc");
  EXPECT_EQ(j["variables"], (nlohmann::json{"v", "q"}));
  ASSERT_EQ(j["verdicts"].size(), 2u);
  for (const auto& v : j["verdicts"]) EXPECT_EQ(v["outcome"], "Verified");
  EXPECT_EQ(j["flowpipe"]["steps"], 100);
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_DOUBLE_EQ(j["dynamics"]["a"][0][0].get<double>(), -0.85);

  ASSERT_EQ(run_cli({"check", kModel, kConfig, "--no-timing", "--report", path("c.json")}).code, kExitOk);
  EXPECT_FALSE(nlohmann::json::parse(slurp(path("c.json"))).contains("timing_ms"));
}

TEST_F(CliTest, OutputFormatJson) {
  const std::string cfg = write("j.cfg", slurp(kConfig) + "output-format = json\n");
  ASSERT_EQ(run_cli({"reach", kModel, cfg, "--output", path("fp.json")}).code, kExitOk);
  const auto j = nlohmann::json::parse(slurp(path("fp.json")));
  EXPECT_EQ(j["segments"].size(), 400u);
}

TEST_F(CliTest, SimFromIdle) {
  const Result r = run_cli({"sim", kModel, kConfig, "--x0", "v=0,q=0", "--delta", "0.001",
                            "--output", path("t.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count(r.out, "Verified"), 2u) << r.out;
  EXPECT_NE(r.out.find("v(10) = 14.995"), std::string::npos) << r.out;
  const std::string csv = slurp(path("t.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,v,q");
  EXPECT_EQ(count(csv, "\n"), 10002u);
}

TEST_F(CliTest, SimAtEquilibriumAndShortHorizon) {
  const Result r = run_cli({"sim", kModel, kConfig, "--x0", "v=15,q=18.75", "--output", path("e.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("v(10) = 15\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("q(10) = 18.75\n"), std::string::npos) << r.out;

  ASSERT_EQ(run_cli({"sim", kModel, kConfig, "--horizon", "0.05", "--delta", "0.05", "--output",
                     path("s.csv")}).code,
            kExitOk);
  EXPECT_EQ(count(slurp(path("s.csv")), "\n"), 3u);
  EXPECT_EQ(run_cli({"sim", kModel, kConfig, "--x0", "w=1"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"sim", kModel, kConfig, "--x0", "v"}).code, kExitInputError);
}

TEST_F(CliTest, InfoBundled) {
  const Result r = run_cli({"info", kModel});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("components: 12 base, 2 network"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("A = [[-0.85, 0.04], [-1, 0]]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("b = [12, 15]"), std::string::npos) << r.out;
}

TEST_F(CliTest, InfoSingleComponent) {
  const std::string model = write("one.xml", R"(<?xml version="1.0"?>
<sspaceex version="0.2">
  <component id="decay">
    <param name="v" type="real" local="false" dynamics="any"/>
    <location id="1"><flow>v' == -0.05*v</flow></location>
  </component>
</sspaceex>
)");
  const Result r = run_cli({"info", model});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("components: 1 base, 0 network\ndecay (base)\nstates: v\n"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("A = [[-0.05]]"), std::string::npos) << r.out;
}

TEST_F(CliTest, VersionAndHelp) {
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  const Result v = run_cli({"--version"});
  EXPECT_EQ(v.code, kExitOk);
}

}  // namespace
}  // namespace reachpipe::cli
