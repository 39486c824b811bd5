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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "expr_gen.hpp"

#include "reachpipe/error.hpp"
#include "reachpipe/parser.hpp"

namespace reachpipe {
namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(REACHPIPE_MODELS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- linear expressions ----

TEST(ParseLinearExpr, PlantFlow) {
  const LinearExpression e = parse_linear_expr("-0.05*v + 0.001*u");
  EXPECT_DOUBLE_EQ(e.coefficient("v"), -0.05);
  EXPECT_DOUBLE_EQ(e.coefficient("u"), 0.001);
  EXPECT_EQ(e.constant, 0.0);
  EXPECT_EQ(e.coefficients.size(), 2u);
}

TEST(ParseLinearExpr, Constant) {
  const LinearExpression e = parse_linear_expr("0");
  EXPECT_TRUE(e.coefficients.empty());
  EXPECT_EQ(e.constant, 0.0);
}

TEST(ParseLinearExpr, Cancellation) {
  const LinearExpression e = parse_linear_expr("v - v");
  EXPECT_EQ(e.coefficient("v"), 0.0);
  EXPECT_TRUE(e.is_constant());
  EXPECT_EQ(e.constant, 0.0);
}

TEST(ParseLinearExpr, AccumulatesAndAcceptsBothProductOrders) {
  const LinearExpression e = parse_linear_expr(" 2*x+x*3 -  4 + x");
  EXPECT_DOUBLE_EQ(e.coefficient("x"), 6.0);
  EXPECT_DOUBLE_EQ(e.constant, -4.0);
}

TEST(ParseLinearExpr, NonlinearTerm) {
  EXPECT_THROW(parse_linear_expr("v*u"), NonlinearTermError);
  EXPECT_THROW(parse_linear_expr("2 + v/u"), NonlinearTermError);
}

TEST(ParseLinearExpr, SyntaxErrorCarriesOffset) {
  try {
    parse_linear_expr("1 + 2*$");
    FAIL() << "expected SyntaxError";
  } catch (const NonlinearTermError&) {
    FAIL() << "wrong error type";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  EXPECT_THROW(parse_linear_expr("1 +"), SyntaxError);
  EXPECT_THROW(parse_linear_expr("(v"), SyntaxError);
  EXPECT_THROW(parse_linear_expr("1.2.3"), SyntaxError);
}

TEST(ParseExpr, ToStringRoundTrips) {
  for (const char* text : {"-b/m*v + 1/m*u", "(a - b) * 3", "-(x + 2) / 4", "x - (y - z)"}) {
    const Expr e = parse_expr(text);
    EXPECT_EQ(parse_expr(to_string(e)), e) << text << " -> " << to_string(e);
  }
}

TEST(ParseLinearExprProperty, AgreesWithReferenceEvaluator) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const exprgen::Generated g = exprgen::gen_sum(rng, 0);
    const LinearExpression e = parse_linear_expr(g.text);
    for (int p = 0; p < 10; ++p) {
      const std::map<std::string, double> env{
          {"v", val(rng)}, {"q", val(rng)}, {"x", val(rng)}, {"u", val(rng)}, {"ctrl.k", val(rng)}};
      const double want = g.eval(env);
      EXPECT_NEAR(e.evaluate(env), want, 1e-12 * std::max(1.0, std::abs(want))) << g.text;
    }
  }
}

// ---- initially ----

TEST(ParseInitial, Examples) {
  const InitialConstraints a = parse_initial("0<=v & v<=2 & q==0");
  EXPECT_EQ(a.bounds("v"), (Interval{0, 2}));
  EXPECT_EQ(a.bounds("q"), (Interval{0, 0}));
  EXPECT_EQ(a.fixed_value("q"), 0.0);

  const InitialConstraints p = parse_initial("v==15");
  EXPECT_EQ(p.bounds("v"), (Interval{15, 15}));

  const InitialConstraints r = parse_initial("2>=v & v>=0");
  EXPECT_EQ(r.to_box({"v"}), a.to_box({"v"}));
}

TEST(ParseInitial, ChainsAndStrictInequalities) {
  const InitialConstraints c = parse_initial("-1 <= x <= 3 & 0 < y & y < 1 & true");
  EXPECT_EQ(c.bounds("x"), (Interval{-1, 3}));
  EXPECT_EQ(c.bounds("y"), (Interval{0, 1}));
  EXPECT_EQ(c.names(), (std::vector<std::string>{"x", "y"}));
}

TEST(ParseInitial, Errors) {
  auto kind_of = [](const char* text) {
    try {
      parse_initial(text);
    } catch (const ConfigError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of("v>=3 & v<=2"), static_cast<int>(ConfigError::Kind::kEmptySet));
  EXPECT_EQ(kind_of("v != 2"), static_cast<int>(ConfigError::Kind::kUnknownRelop));
  EXPECT_THROW(parse_initial("v <= w"), SyntaxError);
  EXPECT_THROW(parse_initial("v <="), SyntaxError);

  const InitialConstraints half = parse_initial("v >= 0 & q == 1");
  EXPECT_THROW(half.to_box({"v"}), ConfigError);
  EXPECT_THROW(half.to_box({"q", "x"}), ConfigError);
}

TEST(ParseInitialProperty, RenderRoundTrip) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  std::uniform_int_distribution<int> coin(0, 3);
  const std::vector<std::string> names{"v", "q", "plant.x"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> dims;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const double a = u(rng), b = coin(rng) == 0 ? a : u(rng);
      dims.push_back({std::min(a, b), std::max(a, b)});
    }
    const Box box(dims);
    EXPECT_EQ(parse_initial(render_initial(names, box)).to_box(names), box);
  }
}

// ---- models ----

const char* kMinimal = R"(<?xml version="1.0"?>
<sspaceex version="0.2">
  <component id="decay">
    <param name="v" type="real" local="false" d1="1" d2="1" dynamics="any"/>
    <location id="1" name="run" x="10" y="20" width="100" height="50">
      <flow>v' == -0.05*v</flow>
    </location>
  </component>
</sspaceex>
)";

TEST(ParseModel, MinimalDocument) {
  const ModelDocument doc = parse_model(kMinimal);
  ASSERT_EQ(doc.components.size(), 1u);
  const auto& base = std::get<BaseComponent>(doc.components[0]);
  EXPECT_EQ(base.id, "decay");
  ASSERT_EQ(base.flow.size(), 1u);
  EXPECT_EQ(base.flow[0].first, "v");
  EXPECT_DOUBLE_EQ(linearize(base.flow[0].second).coefficient("v"), -0.05);
}

TEST(ParseModel, BundledCruiseCounts) {
  const ModelDocument doc = parse_model(slurp("cruise.xml"));
  int bases = 0, networks = 0;
  for (const auto& c : doc.components) (std::holds_alternative<BaseComponent>(c) ? bases : networks)++;
  EXPECT_EQ(bases, 12);
  EXPECT_EQ(networks, 2);
  EXPECT_EQ(doc.default_root(), "cruise_control");
}

TEST(ParseModel, LiteralMapIsNumeric) {
  const ModelDocument doc = parse_model(slurp("cruise.xml"));
  const auto& root = std::get<NetworkComponent>(*doc.find("cruise_control"));
  const Bind* vehicle = nullptr;
  for (const auto& b : root.binds) {
    if (b.component == "vehicle") vehicle = &b;
  }
  ASSERT_NE(vehicle, nullptr);
  bool found = false;
  for (const auto& [key, target] : vehicle->map) {
    if (key == "m") {
      ASSERT_TRUE(std::holds_alternative<double>(target));
      EXPECT_EQ(std::get<double>(target), 1000.0);
      found = true;
    }
    if (key == "u") {
      EXPECT_EQ(std::get<std::string>(target), "u");
    }
  }
  EXPECT_TRUE(found);
}

TEST(ParseModel, RoundTrip) {
  const ModelDocument doc = parse_model(slurp("cruise.xml"));
  const std::string written = write_model(doc);
  const ModelDocument again = parse_model(written);
  EXPECT_EQ(again, doc);
  EXPECT_EQ(write_model(again), written);
}

TEST(ParseModel, NamespacedTagsAndNotesAccepted) {
  const std::string xml = R"(<?xml version="1.0"?>
<sx:sspaceex xmlns:sx="http://www-verimag.imag.fr/xml-namespaces/sspaceex" version="0.2">
  <note>hand written</note>
  <sx:component id="drift">
    <sx:param name="x" type="real" local="false" dynamics="any"/>
    <sx:location id="1" name="l"><sx:flow>x' == 1</sx:flow></sx:location>
  </sx:component>
</sx:sspaceex>)";
  EXPECT_EQ(parse_model(xml).components.size(), 1u);
}

TEST(ParseModel, MalformedXmlReportsLine) {
  const std::string xml = "<?xml version=\"1.0\"?>\n<sspaceex>\n  <component id=\"a\">\n</sspaceex>\n";
  try {
    parse_model(xml);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_GE(e.line(), 3u);
  }
}

ModelError::Kind model_error_kind(const std::string& xml, ModelParseOptions opts = {}) {
  try {
    parse_model(xml, opts);
  } catch (const ModelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ModelError for:\n" << xml;
  return ModelError::Kind::kUnsupported;
}

std::string wrap(const std::string& body) {
  return "<?xml version=\"1.0\"?>\n<sspaceex version=\"0.2\">\n" + body + "</sspaceex>\n";
}

TEST(ParseModel, StructuredErrors) {
  const std::string comp =
      "<component id=\"a\"><param name=\"v\" type=\"real\" local=\"false\" dynamics=\"any\"/>"
      "<location id=\"1\"><flow>v' == -v</flow></location></component>\n";
  EXPECT_EQ(model_error_kind(wrap(comp + comp)), ModelError::Kind::kDuplicateId);
  EXPECT_EQ(model_error_kind(wrap(
                "<component id=\"a\"><param name=\"v\" type=\"real\" dynamics=\"any\"/>"
                "<location id=\"1\"><flow>w' == -v</flow></location></component>")),
            ModelError::Kind::kUndeclaredParam);
  EXPECT_EQ(model_error_kind(wrap(
                "<component id=\"a\"><param name=\"v\" type=\"real\" dynamics=\"any\"/>"
                "<location id=\"1\"><flow>v' == -w</flow></location></component>")),
            ModelError::Kind::kUndeclaredParam);
  EXPECT_EQ(model_error_kind(wrap(comp + "<component id=\"n\"><bind component=\"zzz\" as=\"z\"/>"
                                         "</component>")),
            ModelError::Kind::kUnknownComponent);
  EXPECT_EQ(model_error_kind(wrap(comp + "<component id=\"n\"><param name=\"v\" type=\"real\"/>"
                                         "<bind component=\"a\" as=\"a1\"/></component>")),
            ModelError::Kind::kUnboundParameter);
  EXPECT_EQ(model_error_kind(wrap("<component id=\"a\"><param name=\"v\" type=\"int\"/></component>")),
            ModelError::Kind::kUnsupported);
  EXPECT_EQ(model_error_kind(wrap("<component id=\"a\"><param name=\"v\" type=\"real\"/>"
                                  "<location id=\"1\"/><transition source=\"1\" target=\"1\"/>"
                                  "</component>")),
            ModelError::Kind::kUnsupported);
  const std::string cyc =
      "<component id=\"p\"><param name=\"v\" type=\"real\"/><bind component=\"q\" as=\"q1\">"
      "<map key=\"v\">v</map></bind></component>"
      "<component id=\"q\"><param name=\"v\" type=\"real\"/><bind component=\"p\" as=\"p1\">"
      "<map key=\"v\">v</map></bind></component>";
  EXPECT_EQ(model_error_kind(wrap(cyc)), ModelError::Kind::kBindCycle);
}

TEST(ParseModel, StrictModeRejectsUnknownElements) {
  const std::string xml = wrap(
      "<component id=\"a\"><param name=\"v\" type=\"real\"/><location id=\"1\">"
      "<flow>v' == 1</flow><shape/></location></component>");
  EXPECT_NO_THROW(parse_model(xml));
  EXPECT_EQ(model_error_kind(xml, {true}), ModelError::Kind::kUnsupported);
}

TEST(ParseModel, NonlinearFlowIsAnErrorOnlyOnceLinearized) {
  const std::string xml = wrap(
      "<component id=\"a\"><param name=\"v\" type=\"real\"/><param name=\"w\" type=\"real\"/>"
      "<location id=\"1\"><flow>v' == v*w &amp; w' == 0</flow></location></component>");
  const ModelDocument doc = parse_model(xml);
  EXPECT_THROW(flatten(doc, "a"), NonlinearTermError);
}

// ---- config ----

TEST(ParseConfig, BundledCruise) {
  const Config c = parse_config(slurp("cruise.cfg"));
  EXPECT_EQ(c.system, "cruise_control");
  EXPECT_EQ(c.scenario, "stc");
  EXPECT_EQ(c.time_horizon, 10.0);
  EXPECT_EQ(c.sampling_time, 0.025);
  EXPECT_EQ(c.initially, "v>=0 & v<=2 & q==0");
  EXPECT_EQ(c.output_variables, (std::vector<std::string>{"v", "q"}));
  ASSERT_TRUE(c.accuracy.has_value());
  EXPECT_EQ(*c.accuracy, 0.1);
  ASSERT_EQ(c.checks.size(), 2u);
  EXPECT_EQ(c.checks[0].kind, RequirementSpec::Kind::kRiseTime);
  EXPECT_EQ(c.checks[0].args, (std::vector<double>{0.9, 5.0}));
  EXPECT_EQ(c.checks[1].kind, RequirementSpec::Kind::kSettling);
  EXPECT_EQ(c.checks[1].args, (std::vector<double>{0.05}));
  bool accuracy_warned = false;
  for (const auto& w : c.warnings) accuracy_warned |= w.find("accuracy") != std::string::npos;
  EXPECT_TRUE(accuracy_warned);
}

TEST(ParseConfig, Defaults) {
  const Config c = parse_config("system = s\ninitially = \"x==0\"\ntime-horizon = 2\n");
  EXPECT_EQ(c.sampling_time, 0.05);
  EXPECT_EQ(c.max_order, 20.0);
  EXPECT_EQ(c.output_format, OutputFormat::kCsv);
  EXPECT_TRUE(c.warnings.empty());
}

TEST(ParseConfig, CrlfCommentsAndUnknownKeys) {
  const Config c = parse_config(
      "# header\r\nsystem = s # trailing\r\ninitially = \"x==0 # not a comment\"\r\n"
      "time-horizon = 2\r\nfancy-option = 3\r\n");
  EXPECT_EQ(c.system, "s");
  EXPECT_EQ(c.initially, "x==0 # not a comment");
  ASSERT_EQ(c.warnings.size(), 1u);
  EXPECT_NE(c.warnings[0].find("fancy-option"), std::string::npos);
}

TEST(ParseConfig, RoundTrip) {
  for (const char* name : {"cruise.cfg", "cruise_falsify.cfg", "cruise_unknown.cfg"}) {
    Config c = parse_config(slurp(name));
    Config again = parse_config(write_config(c));
    c.warnings.clear();
    again.warnings.clear();
    EXPECT_EQ(again, c) << name;
  }
}

ConfigError::Kind config_error_kind(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ConfigError for:\n" << text;
  return ConfigError::Kind::kBadValue;
}

TEST(ParseConfig, StructuredErrors) {
  const std::string ok = "system = s\ninitially = \"x==0\"\n";
  EXPECT_EQ(config_error_kind(ok), ConfigError::Kind::kMissingKey);
  EXPECT_EQ(config_error_kind("initially = \"x==0\"\ntime-horizon = 1\n"),
            ConfigError::Kind::kMissingKey);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = ten\n"), ConfigError::Kind::kBadNumber);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = 1\nsampling-time = 0\n"),
            ConfigError::Kind::kBadValue);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = 0.01\n"), ConfigError::Kind::kBadValue);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = 1\nscenario = magic\n"),
            ConfigError::Kind::kBadValue);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = 1\noutput-variables = \"\"\n"),
            ConfigError::Kind::kBadValue);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = 1\ncheck.rise_time = v, 1.5, 5\n"),
            ConfigError::Kind::kBadValue);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = 1\ncheck.safety = v, 3, 1, 0, 1\n"),
            ConfigError::Kind::kBadValue);
  EXPECT_EQ(config_error_kind(ok + "time-horizon = 1\nno equals sign\n"),
            ConfigError::Kind::kBadValue);
}

TEST(ParseConfig, ErrorLineNumbers) {
  try {
    parse_config("system = s\n\ntime-horizon = abc\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseConfig, CheckForms) {
  const Config c = parse_config(
      "system = s\ninitially = \"x==0\"\ntime-horizon = 1\n"
      "check.rise_time = v, 4\ncheck.settling = v\ncheck.settling = v, 0.02, 6\n"
      "check.safety = v, 0, 30, 0, 10\n");
  ASSERT_EQ(c.checks.size(), 4u);
  EXPECT_EQ(c.checks[0].args, (std::vector<double>{0.9, 4.0}));
  EXPECT_EQ(c.checks[1].args, (std::vector<double>{0.05}));
  EXPECT_EQ(c.checks[2].args, (std::vector<double>{0.02, 6.0}));
  EXPECT_EQ(c.checks[3].args, (std::vector<double>{0, 30, 0, 10}));
}

}  // namespace
}  // namespace reachpipe
