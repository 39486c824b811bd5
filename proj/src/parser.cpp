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

#include "reachpipe/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "lexer.hpp"
#include "reachpipe/error.hpp"

namespace reachpipe {

using detail::Token;

LinearExpression parse_linear_expr(std::string_view text) {
  return linearize(parse_expr(text));
}

// ---------------------------------------------------------------------------
// initially

void InitialConstraints::tighten(const std::string& var, double lo, double hi) {
  auto it = bounds_.find(var);
  if (it == bounds_.end()) {
    it = bounds_.emplace(var, Interval{-kInf, kInf}).first;
    names_.push_back(var);
  }
  it->second.lo = std::max(it->second.lo, lo);
  it->second.hi = std::min(it->second.hi, hi);
  if (it->second.lo > it->second.hi) {
    throw ConfigError(ConfigError::Kind::kEmptySet,
                      "initial constraints on '" + var + "' are inconsistent (empty interval)");
  }
}

Interval InitialConstraints::bounds(const std::string& var) const {
  auto it = bounds_.find(var);
  return it == bounds_.end() ? Interval{-kInf, kInf} : it->second;
}

std::optional<double> InitialConstraints::fixed_value(const std::string& var) const {
  auto it = bounds_.find(var);
  if (it == bounds_.end() || it->second.lo != it->second.hi) return std::nullopt;
  return it->second.lo;
}

Box InitialConstraints::to_box(const std::vector<std::string>& order) const {
  std::vector<Interval> dims;
  dims.reserve(order.size());
  for (const auto& v : order) {
    auto it = bounds_.find(v);
    if (it == bounds_.end()) {
      throw ConfigError(ConfigError::Kind::kUnboundedVariable,
                        "initial set does not constrain state variable '" + v + "'");
    }
    if (!std::isfinite(it->second.lo) || !std::isfinite(it->second.hi)) {
      throw ConfigError(ConfigError::Kind::kUnboundedVariable,
                        "initial set leaves '" + v + "' unbounded");
    }
    dims.push_back(it->second);
  }
  return Box(std::move(dims));
}

namespace {

struct Operand {
  bool is_number = false;
  double number = 0.0;
  std::string ident;
  std::size_t offset = 0;
};

class AtomReader {
 public:
  explicit AtomReader(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool at_end() const { return toks_[pos_].kind == Token::Kind::kEnd; }

  Operand operand() {
    Operand o;
    o.offset = toks_[pos_].offset;
    double sign = 1.0;
    while (toks_[pos_].is("-") || toks_[pos_].is("+")) {
      if (toks_[pos_].is("-")) sign = -sign;
      ++pos_;
    }
    const Token& t = toks_[pos_];
    if (t.kind == Token::Kind::kNumber) {
      o.is_number = true;
      o.number = sign * t.number;
    } else if (t.kind == Token::Kind::kIdent && sign > 0) {
      o.ident = t.text;
    } else {
      throw SyntaxError("expected number or variable at offset " + std::to_string(t.offset),
                        t.offset);
    }
    ++pos_;
    return o;
  }

  std::string relop() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::Kind::kSymbol) {
      throw SyntaxError("expected comparison at offset " + std::to_string(t.offset), t.offset);
    }
    static const std::set<std::string> kRelops = {"<=", ">=", "==", "<", ">"};
    if (!kRelops.count(t.text)) {
      throw ConfigError(ConfigError::Kind::kUnknownRelop,
                        "unknown relational operator '" + t.text + "' at offset " +
                            std::to_string(t.offset));
    }
    ++pos_;
    return t.text;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void apply(InitialConstraints& out, const Operand& l, const std::string& op, const Operand& r) {
  if (l.is_number == r.is_number) {
    throw SyntaxError("comparison needs one variable and one number at offset " +
                          std::to_string(l.offset),
                      l.offset);
  }
  constexpr double inf = InitialConstraints::kInf;
  // Normalise to `var op value`.
  std::string var = l.is_number ? r.ident : l.ident;
  double value = l.is_number ? l.number : r.number;
  std::string rel = op;
  if (l.is_number) {
    if (rel == "<=" || rel == "<") rel = ">=";
    else if (rel == ">=" || rel == ">") rel = "<=";
  }
  if (rel == "<=" || rel == "<") out.tighten(var, -inf, value);
  else if (rel == ">=" || rel == ">") out.tighten(var, value, inf);
  else out.tighten(var, value, value);
}

}  // namespace

InitialConstraints parse_initial(std::string_view text) {
  InitialConstraints out;
  for (const auto& [atom, offset] : detail::split_top(text, '&')) {
    if (atom.empty() || atom == "true") continue;
    AtomReader rd(detail::tokenize(atom, offset));
    Operand a = rd.operand();
    std::string op1 = rd.relop();
    Operand b = rd.operand();
    apply(out, a, op1, b);
    if (!rd.at_end()) {
      std::string op2 = rd.relop();
      Operand c = rd.operand();
      apply(out, b, op2, c);
      if (!rd.at_end()) {
        throw SyntaxError("trailing input in constraint '" + std::string(atom) + "'", offset);
      }
    }
  }
  return out;
}

std::string render_initial(const std::vector<std::string>& names, const Box& box) {
  if (names.size() != box.dimension()) throw DimensionError("render_initial: name count mismatch");
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!out.empty()) out += " & ";
    if (box[i].lo == box[i].hi) {
      out += names[i] + "==" + detail::format_number(box[i].lo);
    } else {
      out += detail::format_number(box[i].lo) + "<=" + names[i] + " & " + names[i] +
             "<=" + detail::format_number(box[i].hi);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// XML models

namespace {

namespace pt = boost::property_tree;

std::string local_name(const std::string& tag) {
  auto colon = tag.find(':');
  return colon == std::string::npos ? tag : tag.substr(colon + 1);
}

std::string attr(const pt::ptree& node, const std::string& name, const std::string& fallback = "") {
  if (auto attrs = node.get_child_optional("<xmlattr>")) {
    for (const auto& [k, v] : *attrs) {
      if (local_name(k) == name) return v.data();
    }
  }
  return fallback;
}

void unknown_element(const ModelParseOptions& opts, const std::string& where, const std::string& tag) {
  if (opts.strict) {
    throw ModelError(ModelError::Kind::kUnsupported,
                     "unknown element <" + tag + "> in " + where);
  }
}

Param read_param(const pt::ptree& node, const std::string& comp) {
  Param p;
  p.name = attr(node, "name");
  if (!detail::is_identifier(p.name)) {
    throw ModelError(ModelError::Kind::kUndeclaredParam,
                     "component '" + comp + "': param with invalid name '" + p.name + "'");
  }
  p.type = attr(node, "type", "real");
  if (p.type != "real") {
    throw ModelError(ModelError::Kind::kUnsupported, "component '" + comp + "': param '" + p.name +
                                                         "' has unsupported type '" + p.type + "'");
  }
  const std::string dyn = attr(node, "dynamics", "any");
  if (dyn == "const") p.dynamics = Param::Dynamics::kConst;
  else if (dyn == "any") p.dynamics = Param::Dynamics::kAny;
  else {
    throw ModelError(ModelError::Kind::kUnsupported,
                     "component '" + comp + "': unknown dynamics '" + dyn + "'");
  }
  const std::string local = attr(node, "local", "false");
  if (local != "true" && local != "false") {
    throw ModelError(ModelError::Kind::kUnsupported,
                     "component '" + comp + "': local must be true or false");
  }
  p.local = local == "true";
  return p;
}

std::string context(const std::string& comp, const std::string& what) {
  return "component '" + comp + "' " + what + ": ";
}

// "v' == expr" equations joined by '&'.
void read_flow(const std::string& text, const std::string& comp,
               std::vector<std::pair<std::string, Expr>>& out) {
  for (const auto& [eq, offset] : detail::split_top(text, '&')) {
    if (eq.empty()) continue;
    try {
      auto toks = detail::tokenize(eq, offset);
      if (toks.size() < 4 || toks[0].kind != Token::Kind::kIdent || !toks[1].is("'") ||
          !toks[2].is("==")) {
        throw SyntaxError("expected \"var' == expr\" at offset " + std::to_string(offset), offset);
      }
      const std::size_t rhs_at = toks[3].offset - offset;
      out.emplace_back(toks[0].text, parse_expr(eq.substr(rhs_at), toks[3].offset));
    } catch (const NonlinearTermError& e) {
      throw NonlinearTermError(context(comp, "flow") + e.what(), e.offset());
    } catch (const SyntaxError& e) {
      throw SyntaxError(context(comp, "flow") + e.what(), e.offset());
    }
  }
}

// Output equations "y == expr" joined by '&'.
void read_invariant(const std::string& text, const std::string& comp,
                    std::vector<std::pair<std::string, Expr>>& out) {
  for (const auto& [atom, offset] : detail::split_top(text, '&')) {
    if (atom.empty() || atom == "true") continue;
    try {
      auto toks = detail::tokenize(atom, offset);
      if (toks.size() < 3 || toks[0].kind != Token::Kind::kIdent || !toks[1].is("==")) {
        throw ModelError(ModelError::Kind::kUnsupported,
                         context(comp, "invariant") + "only output equations 'y == expr' are "
                                                      "supported, got '" + std::string(atom) + "'");
      }
      const std::size_t rhs_at = toks[2].offset - offset;
      out.emplace_back(toks[0].text, parse_expr(atom.substr(rhs_at), toks[2].offset));
    } catch (const SyntaxError& e) {
      throw SyntaxError(context(comp, "invariant") + e.what(), e.offset());
    }
  }
}

Component read_component(const pt::ptree& node, const ModelParseOptions& opts) {
  const std::string id = attr(node, "id");
  if (id.empty()) throw ModelError(ModelError::Kind::kUndeclaredParam, "component without id");
  std::vector<Param> params;
  std::vector<const pt::ptree*> locations;
  std::vector<const pt::ptree*> binds;
  for (const auto& [tag_raw, child] : node) {
    const std::string tag = local_name(tag_raw);
    if (tag == "<xmlattr>" || tag == "<xmlcomment>" || tag == "note") continue;
    if (tag == "param") params.push_back(read_param(child, id));
    else if (tag == "location") locations.push_back(&child);
    else if (tag == "bind") binds.push_back(&child);
    else if (tag == "transition") {
      throw ModelError(ModelError::Kind::kUnsupported,
                       "component '" + id + "': transitions are not supported");
    } else {
      unknown_element(opts, "component '" + id + "'", tag);
    }
  }
  if (!binds.empty() && !locations.empty()) {
    throw ModelError(ModelError::Kind::kUnsupported,
                     "component '" + id + "' mixes locations and binds");
  }
  if (!binds.empty()) {
    NetworkComponent net{id, std::move(params), {}};
    for (const auto* b : binds) {
      Bind bind;
      bind.component = attr(*b, "component");
      bind.instance = attr(*b, "as", bind.component);
      for (const auto& [tag_raw, m] : *b) {
        const std::string tag = local_name(tag_raw);
        if (tag == "<xmlattr>" || tag == "<xmlcomment>" || tag == "note") continue;
        if (tag != "map") {
          unknown_element(opts, "bind '" + bind.instance + "'", tag);
          continue;
        }
        const std::string key = attr(m, "key");
        const std::string value(detail::trim(m.data()));
        double lit = 0.0;
        if (detail::parse_number(value, lit)) {
          bind.map.emplace_back(key, lit);
        } else if (detail::is_identifier(value)) {
          bind.map.emplace_back(key, value);
        } else {
          throw ModelError(ModelError::Kind::kUnsupported,
                           "bind '" + bind.instance + "' in '" + id + "': map value '" + value +
                               "' is neither a parameter nor a number");
        }
      }
      net.binds.push_back(std::move(bind));
    }
    return net;
  }
  if (locations.size() > 1) {
    throw ModelError(ModelError::Kind::kUnsupported,
                     "component '" + id + "' has " + std::to_string(locations.size()) +
                         " locations; only single-location components are supported");
  }
  BaseComponent base{id, std::move(params), {}, {}};
  if (!locations.empty()) {
    for (const auto& [tag_raw, child] : *locations.front()) {
      const std::string tag = local_name(tag_raw);
      if (tag == "<xmlattr>" || tag == "<xmlcomment>" || tag == "note") continue;
      if (tag == "flow") read_flow(child.data(), id, base.flow);
      else if (tag == "invariant") read_invariant(child.data(), id, base.algebraic);
      else unknown_element(opts, "location of '" + id + "'", tag);
    }
  }
  return base;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_params(std::ostringstream& os, const std::vector<Param>& params) {
  for (const auto& p : params) {
    os << "    <param name=\"" << xml_escape(p.name) << "\" type=\"" << xml_escape(p.type)
       << "\" local=\"" << (p.local ? "true" : "false") << "\" d1=\"1\" d2=\"1\" dynamics=\""
       << (p.dynamics == Param::Dynamics::kConst ? "const" : "any") << "\" />\n";
  }
}

}  // namespace

ModelDocument parse_model(const std::string& xml_text, const ModelParseOptions& opts) {
  pt::ptree tree;
  std::istringstream in(xml_text);
  try {
    pt::read_xml(in, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw SyntaxError("XML error at line " + std::to_string(e.line()) + ": " + e.message(), 0,
                      e.line());
  }
  const pt::ptree* root = nullptr;
  for (const auto& [tag, child] : tree) {
    if (local_name(tag) == "sspaceex") root = &child;
  }
  if (!root) throw SyntaxError("missing <sspaceex> root element", 0, 1);

  ModelDocument doc;
  doc.version = attr(*root, "version", doc.version);
  for (const auto& [tag_raw, child] : *root) {
    const std::string tag = local_name(tag_raw);
    if (tag == "<xmlattr>" || tag == "<xmlcomment>" || tag == "note") continue;
    if (tag == "component") doc.components.push_back(read_component(child, opts));
    else unknown_element(opts, "sspaceex", tag);
  }
  validate(doc);
  return doc;
}

std::string write_model(const ModelDocument& doc) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<sspaceex xmlns=\"http://www-verimag.imag.fr/xml-namespaces/sspaceex\" version=\""
     << xml_escape(doc.version) << "\" math=\"SpaceEx\">\n";
  for (const auto& comp : doc.components) {
    os << "  <component id=\"" << xml_escape(component_id(comp)) << "\">\n";
    write_params(os, component_params(comp));
    if (const auto* base = std::get_if<BaseComponent>(&comp)) {
      os << "    <location id=\"1\" name=\"always\">\n";
      if (!base->algebraic.empty()) {
        os << "      <invariant>";
        for (std::size_t i = 0; i < base->algebraic.size(); ++i) {
          if (i) os << " &amp; ";
          os << xml_escape(base->algebraic[i].first + " == " + to_string(base->algebraic[i].second));
        }
        os << "</invariant>\n";
      }
      if (!base->flow.empty()) {
        os << "      <flow>";
        for (std::size_t i = 0; i < base->flow.size(); ++i) {
          if (i) os << " &amp; ";
          os << xml_escape(base->flow[i].first + "' == " + to_string(base->flow[i].second));
        }
        os << "</flow>\n";
      }
      os << "    </location>\n";
    } else {
      for (const auto& b : std::get<NetworkComponent>(comp).binds) {
        os << "    <bind component=\"" << xml_escape(b.component) << "\" as=\""
           << xml_escape(b.instance) << "\">\n";
        for (const auto& [key, target] : b.map) {
          os << "      <map key=\"" << xml_escape(key) << "\">";
          if (const auto* s = std::get_if<std::string>(&target)) os << xml_escape(*s);
          else os << detail::format_number(std::get<double>(target));
          os << "</map>\n";
        }
        os << "    </bind>\n";
      }
    }
    os << "  </component>\n";
  }
  os << "</sspaceex>\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// CFG

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kSvg: return "svg";
  }
  return "csv";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string unquote(std::string_view v) {
  v = detail::trim(v);
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                        (v.front() == '\'' && v.back() == '\''))) {
    v = v.substr(1, v.size() - 2);
  }
  return std::string(v);
}

// Drops a '#' comment that is not inside a quoted value.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

double number_value(const std::string& key, const std::string& v, std::size_t line) {
  double out = 0.0;
  if (!detail::parse_number(v, out)) {
    throw ConfigError(ConfigError::Kind::kBadNumber,
                      "line " + std::to_string(line) + ": '" + key + "' expects a number, got '" +
                          v + "'",
                      line);
  }
  return out;
}

std::vector<std::string> comma_list(std::string_view v) {
  std::vector<std::string> out;
  for (const auto& [item, _] : detail::split_top(v, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

RequirementSpec read_check(const std::string& key, const std::string& value, std::size_t line) {
  RequirementSpec r;
  r.text = value;
  auto fields = comma_list(value);
  auto bad = [&](const std::string& why) {
    return ConfigError(ConfigError::Kind::kBadValue,
                       "line " + std::to_string(line) + ": " + key + ": " + why, line);
  };
  if (fields.empty() || !detail::is_identifier(fields[0])) throw bad("expected a variable name first");
  r.var = fields[0];
  for (std::size_t i = 1; i < fields.size(); ++i) r.args.push_back(number_value(key, fields[i], line));

  if (key == "check.rise_time") {
    r.kind = RequirementSpec::Kind::kRiseTime;
    if (r.args.size() == 1) r.args.insert(r.args.begin(), 0.9);
    if (r.args.size() != 2) throw bad("expected 'var, fraction, deadline'");
    if (!(r.args[0] > 0.0 && r.args[0] < 1.0)) throw bad("fraction must be in (0, 1)");
    if (!(r.args[1] > 0.0)) throw bad("deadline must be positive");
  } else if (key == "check.settling") {
    r.kind = RequirementSpec::Kind::kSettling;
    if (r.args.empty()) r.args.push_back(0.05);
    if (r.args.size() > 2) throw bad("expected 'var, epsilon[, from_time]'");
    if (!(r.args[0] > 0.0 && r.args[0] <= 1.0)) throw bad("epsilon must be in (0, 1]");
  } else {
    r.kind = RequirementSpec::Kind::kSafety;
    if (r.args.size() != 4) throw bad("expected 'var, lo, hi, t1, t2'");
    if (r.args[0] > r.args[1]) throw bad("lo exceeds hi");
    if (r.args[2] > r.args[3]) throw bad("empty time window");
  }
  return r;
}

}  // namespace

Config parse_config(std::string_view cfg_text) {
  Config cfg;
  std::set<std::string> seen;
  // SpaceEx options that have no counterpart in the fixed-step engine.
  static const std::set<std::string> kIgnored = {
      "forbidden",     "directions",     "set-aggregation", "clustering", "iter-max",
      "output-file",   "rel-err",        "abs-err",         "flowpipe-tolerance",
      "verbosity",     "rel-err-ratio",  "output-error"};

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= cfg_text.size()) {
    std::size_t end = cfg_text.find('\n', pos);
    if (end == std::string_view::npos) end = cfg_text.size();
    std::string_view raw = cfg_text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = detail::trim(strip_comment(raw));
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(ConfigError::Kind::kBadValue,
                        "line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
    }
    const std::string key = lower(detail::trim(line.substr(0, eq)));
    const std::string value = unquote(line.substr(eq + 1));
    seen.insert(key);

    if (key == "system") {
      cfg.system = value;
    } else if (key == "initially") {
      cfg.initially = value;
    } else if (key == "scenario") {
      cfg.scenario = lower(value);
      if (cfg.scenario != "stc" && cfg.scenario != "supp" && cfg.scenario != "phaver") {
        throw ConfigError(ConfigError::Kind::kBadValue,
                          "line " + std::to_string(line_no) + ": unknown scenario '" + value + "'",
                          line_no);
      }
    } else if (key == "sampling-time") {
      cfg.sampling_time = number_value(key, value, line_no);
    } else if (key == "time-horizon") {
      cfg.time_horizon = number_value(key, value, line_no);
    } else if (key == "output-variables") {
      cfg.output_variables = comma_list(value);
    } else if (key == "max-order") {
      cfg.max_order = number_value(key, value, line_no);
    } else if (key == "output-format") {
      const std::string f = lower(value);
      if (f == "csv") cfg.output_format = OutputFormat::kCsv;
      else if (f == "json") cfg.output_format = OutputFormat::kJson;
      else if (f == "svg") cfg.output_format = OutputFormat::kSvg;
      else {
        throw ConfigError(ConfigError::Kind::kBadValue,
                          "line " + std::to_string(line_no) + ": unknown output-format '" + value +
                              "'",
                          line_no);
      }
    } else if (key == "accuracy") {
      cfg.accuracy = number_value(key, value, line_no);
      cfg.warnings.push_back("accuracy = " + value +
                             " is recorded only; the step size comes from sampling-time");
    } else if (key == "check.reference") {
      cfg.reference = value;
    } else if (key == "check.rise_time" || key == "check.settling" || key == "check.safety") {
      cfg.checks.push_back(read_check(key, value, line_no));
    } else if (kIgnored.count(key)) {
      cfg.warnings.push_back("line " + std::to_string(line_no) + ": option '" + key +
                             "' has no effect");
    } else {
      cfg.warnings.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }

  for (const char* key : {"system", "initially", "time-horizon"}) {
    if (!seen.count(key)) {
      throw ConfigError(ConfigError::Kind::kMissingKey,
                        std::string("missing mandatory key '") + key + "'");
    }
  }
  if (!(cfg.sampling_time > 0.0)) {
    throw ConfigError(ConfigError::Kind::kBadValue, "sampling-time must be positive");
  }
  if (!(cfg.time_horizon >= cfg.sampling_time)) {
    throw ConfigError(ConfigError::Kind::kBadValue, "time-horizon must be >= sampling-time");
  }
  if (!(cfg.max_order >= 1.0)) {
    throw ConfigError(ConfigError::Kind::kBadValue, "max-order must be >= 1");
  }
  if (seen.count("output-variables") && cfg.output_variables.empty()) {
    throw ConfigError(ConfigError::Kind::kBadValue, "output-variables is empty");
  }
  return cfg;
}

std::string write_config(const Config& cfg) {
  std::ostringstream os;
  os << "system = \"" << cfg.system << "\"\n"
     << "initially = \"" << cfg.initially << "\"\n"
     << "scenario = " << cfg.scenario << "\n"
     << "sampling-time = " << detail::format_number(cfg.sampling_time) << "\n"
     << "time-horizon = " << detail::format_number(cfg.time_horizon) << "\n";
  if (!cfg.output_variables.empty()) {
    os << "output-variables = \"";
    for (std::size_t i = 0; i < cfg.output_variables.size(); ++i) {
      os << (i ? ", " : "") << cfg.output_variables[i];
    }
    os << "\"\n";
  }
  os << "max-order = " << detail::format_number(cfg.max_order) << "\n"
     << "output-format = " << to_string(cfg.output_format) << "\n";
  if (cfg.accuracy) os << "accuracy = " << detail::format_number(*cfg.accuracy) << "\n";
  os << "check.reference = " << cfg.reference << "\n";
  for (const auto& c : cfg.checks) {
    switch (c.kind) {
      case RequirementSpec::Kind::kRiseTime: os << "check.rise_time = "; break;
      case RequirementSpec::Kind::kSettling: os << "check.settling = "; break;
      case RequirementSpec::Kind::kSafety: os << "check.safety = "; break;
    }
    os << c.text << "\n";
  }
  return os.str();
}

}  // namespace reachpipe
