#include "tarep/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tarep {

using Json = nlohmann::ordered_json;

ModelError::ModelError(const std::string& message, std::size_t line, std::size_t column,
                       std::vector<Diagnostic> diagnostics)
    : std::runtime_error(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + message : message),
      line_(line),
      column_(column),
      diagnostics_(std::move(diagnostics)) {}

namespace {

// --- lexer shared by atoms and properties -----------------------------------

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string number() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Position of an error inside an embedded string; the offset within the
// string is added to where the string first occurs in the document.
struct Locator {
  std::string_view doc;

  std::pair<std::size_t, std::size_t> locate(std::string_view needle, std::size_t offset) const {
    if (doc.empty()) return {1, offset + 1};
    std::string quoted = "\"" + std::string(needle) + "\"";
    auto at = doc.find(quoted);
    if (at == std::string_view::npos) return {0, 0};
    return line_col(at + 1 + offset);
  }

  std::pair<std::size_t, std::size_t> line_col(std::size_t byte) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < doc.size(); ++i) {
      if (doc[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& message, std::string_view needle, std::size_t offset) const {
    auto [line, col] = locate(needle, offset);
    throw ModelError(message, line, col);
  }
};

std::optional<CmpOp> lex_op(Lexer& lx) {
  // Longest match first; a third '=' or '<' after a two-char operator is an error.
  if (lx.accept("<=")) return CmpOp::Le;
  if (lx.accept(">=")) return CmpOp::Ge;
  if (lx.accept("==")) return CmpOp::Eq;
  if (lx.accept("<")) return CmpOp::Lt;
  if (lx.accept(">")) return CmpOp::Gt;
  if (lx.accept("=")) return CmpOp::Eq;
  return std::nullopt;
}

ClockConstraint atom_at(const Network& net, Lexer& lx, std::string_view text, const Locator& loc) {
  auto start = (lx.skip_space(), lx.pos());
  std::string name = lx.identifier();
  if (name.empty()) loc.fail("expected clock name", text, start);
  auto clock = net.find_clock(name);
  if (!clock) loc.fail("unknown clock '" + name + "'", text, start);
  auto op_pos = (lx.skip_space(), lx.pos());
  auto op = lex_op(lx);
  if (!op) loc.fail("expected comparison operator", text, op_pos);
  char next = lx.peek();
  if (next == '=' || next == '<' || next == '>') loc.fail("malformed comparison operator", text, op_pos);
  auto num_pos = (lx.skip_space(), lx.pos());
  std::string num = lx.number();
  auto bound = parse_rational(num);
  if (!bound) loc.fail("expected numeric bound", text, num_pos);
  if (*bound < 0) loc.fail("negative bound", text, num_pos);
  return {*clock, *op, *bound};
}

ClockConstraint parse_atom_in(const Network& net, std::string_view text, const Locator& loc) {
  Lexer lx(text);
  auto c = atom_at(net, lx, text, loc);
  if (!lx.done()) loc.fail("unexpected trailing input", text, lx.pos());
  return c;
}

class PropertyParser {
 public:
  PropertyParser(const Network& net, std::string_view text, const Locator& loc)
      : net_(net), text_(text), loc_(loc), lx_(text) {}

  Property parse() {
    Property p = disjunction();
    if (!lx_.done()) loc_.fail("unexpected input in property", text_, lx_.pos());
    return p;
  }

 private:
  Property disjunction() {
    std::vector<Property> parts{conjunction()};
    while (lx_.accept("||")) parts.push_back(conjunction());
    return parts.size() == 1 ? std::move(parts[0]) : Property::disjunction(std::move(parts));
  }
  Property conjunction() {
    std::vector<Property> parts{unary()};
    while (lx_.accept("&&")) parts.push_back(unary());
    return parts.size() == 1 ? std::move(parts[0]) : Property::conjunction(std::move(parts));
  }
  Property unary() {
    auto start = (lx_.skip_space(), lx_.pos());
    if (lx_.accept("!")) return Property::negation(unary());
    if (lx_.accept("(")) {
      Property p = disjunction();
      if (!lx_.accept(")")) loc_.fail("expected ')'", text_, lx_.pos());
      return p;
    }
    if (lx_.accept("@")) {
      std::string aut = lx_.identifier();
      auto a = net_.find_automaton(aut);
      if (!a) loc_.fail("unresolved location predicate: unknown automaton '" + aut + "'", text_, start);
      if (!lx_.accept(".")) loc_.fail("expected '.' in location predicate", text_, lx_.pos());
      std::string locname = lx_.identifier();
      auto l = net_.automaton(*a).find_location(locname);
      if (!l) loc_.fail("unresolved location predicate '@" + aut + "." + locname + "'", text_, start);
      return Property::at(*a, *l);
    }
    if (lx_.accept("true")) return Property::constant(true);
    if (lx_.accept("false")) return Property::constant(false);
    return Property::atom(atom_at(net_, lx_, text_, loc_));
  }

  const Network& net_;
  std::string_view text_;
  const Locator& loc_;
  Lexer lx_;
};

// --- model document ---------------------------------------------------------

std::string atom_text(const Network& net, const ClockConstraint& c) { return describe(net, c); }

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ModelError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

std::string require_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ModelError(where + ": expected a string");
  return v.get<std::string>();
}

ModelFile build_model(const Json& doc, const Locator& loc) {
  if (!doc.is_object()) throw ModelError("model document must be a JSON object", 1, 1);
  ModelFile out;
  Network& net = out.network;

  if (doc.contains("channels"))
    for (const auto& c : doc.at("channels")) net.channel_names.push_back(require_string(c, "channels"));
  if (doc.contains("clocks"))
    for (const auto& c : doc.at("clocks")) net.clock_names.push_back(require_string(c, "clocks"));

  const auto& automata = require(doc, "automata", "model");
  if (!automata.is_array()) throw ModelError("'automata' must be an array");

  // Clocks first (the namespace is network-wide), then locations, then the rest.
  for (const auto& a : automata) {
    TimedAutomaton ta;
    ta.name = require_string(require(a, "name", "automaton"), "automaton.name");
    if (a.contains("clocks"))
      for (const auto& c : a.at("clocks")) {
        auto name = require_string(c, ta.name + ".clocks");
        auto id = net.find_clock(name);
        if (!id) {
          id = ClockId(net.clock_names.size());
          net.clock_names.push_back(name);
        }
        ta.clocks.push_back(*id);
      }
    for (const auto& l : require(a, "locations", ta.name)) {
      Location loc_;
      loc_.name = require_string(require(l, "name", ta.name + ".location"), ta.name + ".location.name");
      loc_.urgent = l.value("urgent", false);
      ta.locations.push_back(std::move(loc_));
    }
    net.automata.push_back(std::move(ta));
  }

  for (std::size_t ai = 0; ai < automata.size(); ++ai) {
    const auto& a = automata[ai];
    auto& ta = net.automata[ai];
    std::string init = require_string(require(a, "initial", ta.name), ta.name + ".initial");
    auto il = ta.find_location(init);
    if (!il) loc.fail("unknown initial location '" + init + "'", init, 0);
    ta.initial = *il;
    const auto& locs = a.at("locations");
    for (std::size_t li = 0; li < locs.size(); ++li)
      if (locs[li].contains("invariant"))
        for (const auto& atom : locs[li].at("invariant")) {
          auto text = require_string(atom, ta.name + ".invariant");
          ta.locations[li].invariant.push_back(parse_atom_in(net, text, loc));
        }
    if (!a.contains("transitions")) continue;
    std::size_t ti = 0;
    for (const auto& t : a.at("transitions")) {
      Transition tr;
      auto where = ta.name + ".transitions[" + std::to_string(ti++) + "]";
      auto src = require_string(require(t, "source", where), where);
      auto dst = require_string(require(t, "target", where), where);
      auto s = ta.find_location(src);
      auto d = ta.find_location(dst);
      if (!s) throw ModelError(where + ": unknown location '" + src + "' in transition " + std::to_string(ti - 1));
      if (!d) throw ModelError(where + ": unknown location '" + dst + "' in transition " + std::to_string(ti - 1));
      tr.source = *s;
      tr.target = *d;
      if (t.contains("sync") && !t.at("sync").is_null()) {
        auto sync = require_string(t.at("sync"), where + ".sync");
        if (sync.size() < 2 || (sync.back() != '!' && sync.back() != '?'))
          loc.fail("sync must be 'channel!' or 'channel?'", sync, 0);
        tr.sync = sync.back() == '!' ? SyncKind::Send : SyncKind::Receive;
        auto ch = net.find_channel(sync.substr(0, sync.size() - 1));
        if (!ch) loc.fail("unknown channel '" + sync.substr(0, sync.size() - 1) + "'", sync, 0);
        tr.channel = *ch;
      }
      if (t.contains("action")) tr.action = require_string(t.at("action"), where + ".action");
      if (t.contains("guard"))
        for (const auto& atom : t.at("guard")) tr.guard.push_back(parse_atom_in(net, require_string(atom, where), loc));
      if (t.contains("resets"))
        for (const auto& c : t.at("resets")) {
          auto name = require_string(c, where + ".resets");
          auto id = net.find_clock(name);
          if (!id) loc.fail("unknown clock '" + name + "'", name, 0);
          tr.resets.push_back(*id);
        }
      ta.transitions.push_back(std::move(tr));
    }
  }

  out.property = Property::constant(true);
  if (doc.contains("property")) {
    auto text = require_string(doc.at("property"), "property");
    out.property = PropertyParser(net, text, loc).parse();
  }

  auto diags = validate(net, out.property);
  if (has_errors(diags)) {
    std::string msg = "invalid model";
    for (const auto& d : diags)
      if (d.severity == Diagnostic::Severity::Error) msg += "\n  " + d.path + ": " + d.message;
    throw ModelError(msg, 0, 0, diags);
  }
  out.warnings = std::move(diags);
  return out;
}

Json location_vector_json(const Network& net, const LocationVector& v) {
  Json o = Json::object();
  for (std::size_t a = 0; a < v.size(); ++a) o[net.automata[a].name] = net.automata[a].locations[v[a].index()].name;
  return o;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    Locator loc{text};
    auto [line, col] = loc.line_col(e.byte ? e.byte - 1 : 0);
    throw ModelError("JSON syntax error", line, col);
  }
}

}  // namespace

ClockConstraint parse_atom(const Network& net, std::string_view text) { return parse_atom_in(net, text, Locator{}); }

Property parse_property(const Network& net, std::string_view text) {
  return PropertyParser(net, text, Locator{}).parse();
}

ModelFile parse_model(std::string_view text) {
  Json doc = parse_json(text);
  try {
    return build_model(doc, Locator{text});
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed model document: ") + e.what());
  }
}

ModelFile load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

std::string serialize_model(const Network& net, const Property& prop) {
  Json doc = Json::object();
  doc["channels"] = net.channel_names;
  doc["clocks"] = net.clock_names;
  Json automata = Json::array();
  for (const auto& ta : net.automata) {
    Json a = Json::object();
    a["name"] = ta.name;
    a["initial"] = ta.locations.at(ta.initial.index()).name;
    Json clocks = Json::array();
    for (auto c : ta.clocks) clocks.push_back(net.clock_name(c));
    a["clocks"] = clocks;
    Json locs = Json::array();
    for (const auto& l : ta.locations) {
      Json lj = Json::object();
      lj["name"] = l.name;
      if (l.urgent) lj["urgent"] = true;
      Json inv = Json::array();
      for (const auto& c : l.invariant) inv.push_back(atom_text(net, c));
      lj["invariant"] = inv;
      locs.push_back(lj);
    }
    a["locations"] = locs;
    Json trs = Json::array();
    for (const auto& t : ta.transitions) {
      Json tj = Json::object();
      tj["source"] = ta.locations.at(t.source.index()).name;
      tj["target"] = ta.locations.at(t.target.index()).name;
      if (t.sync != SyncKind::Internal)
        tj["sync"] = net.channel_names.at(t.channel.index()) + (t.sync == SyncKind::Send ? "!" : "?");
      if (!t.action.empty()) tj["action"] = t.action;
      Json guard = Json::array();
      for (const auto& c : t.guard) guard.push_back(atom_text(net, c));
      tj["guard"] = guard;
      Json resets = Json::array();
      for (auto c : t.resets) resets.push_back(net.clock_name(c));
      tj["resets"] = resets;
      trs.push_back(tj);
    }
    a["transitions"] = trs;
    automata.push_back(a);
  }
  doc["automata"] = automata;
  doc["property"] = to_string(net, prop);
  return doc.dump(2) + "\n";
}

std::string serialize_trace(const Network& net, const SymbolicTimedTrace& trace) {
  Json doc = Json::object();
  if (!trace.locations.empty()) doc["initial"] = location_vector_json(net, trace.locations.front());
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    Json s = Json::object();
    if (i < trace.delays.size()) s["delay"] = to_string(trace.delays[i]);
    Json fired = Json::array();
    for (const auto& p : trace.steps[i].parts)
      fired.push_back({{"automaton", net.automata.at(p.automaton.index()).name}, {"transition", p.transition}});
    s["fired"] = fired;
    s["label"] = step_label(net, trace.steps[i]);
    steps.push_back(s);
  }
  doc["steps"] = steps;
  if (trace.delays.size() > trace.steps.size()) doc["final_delay"] = to_string(trace.delays.back());
  if (!trace.locations.empty()) doc["final"] = location_vector_json(net, trace.locations.back());
  return doc.dump(2) + "\n";
}

SymbolicTimedTrace parse_trace(const Network& net, std::string_view text) {
  Json doc = parse_json(text);
  SymbolicTimedTrace trace;
  try {
    for (const auto& s : doc.at("steps")) {
      NetworkTransition step;
      for (const auto& f : s.at("fired")) {
        auto name = f.at("automaton").get<std::string>();
        auto a = net.find_automaton(name);
        if (!a) throw ModelError("trace: unknown automaton '" + name + "'");
        auto t = f.at("transition").get<std::size_t>();
        if (t >= net.automaton(*a).transitions.size())
          throw ModelError("trace: transition index " + std::to_string(t) + " out of range for '" + name + "'");
        step.parts.push_back({*a, t});
      }
      std::sort(step.parts.begin(), step.parts.end());
      trace.steps.push_back(std::move(step));
      if (s.contains("delay")) {
        auto d = parse_rational(s.at("delay").get<std::string>());
        if (!d) throw ModelError("trace: malformed delay");
        trace.delays.push_back(*d);
      }
    }
    if (doc.contains("final_delay")) {
      auto d = parse_rational(doc.at("final_delay").get<std::string>());
      if (!d) throw ModelError("trace: malformed delay");
      trace.delays.push_back(*d);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed trace document: ") + e.what());
  }
  if (!trace.delays.empty() && trace.delays.size() != trace.steps.size() + 1) trace.delays.clear();
  auto locs = replay_locations(net, trace.steps);
  if (!locs) throw ModelError("trace is not consistent with the model");
  trace.locations = std::move(*locs);
  return trace;
}

SymbolicTimedTrace load_trace(const Network& net, const std::filesystem::path& path) {
  return parse_trace(net, read_file(path));
}

std::string serialize_witness(const std::vector<std::string>& labels, std::string_view accepted_by) {
  Json doc = Json::object();
  Json steps = Json::array();
  for (const auto& l : labels) steps.push_back({{"label", l}});
  doc["steps"] = steps;
  doc["accepted_by"] = accepted_by;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::filesystem::path write_repaired_model(const Network& net, const Property& prop, std::string_view kind,
                                           std::size_t ordinal, const std::filesystem::path& dir) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", ordinal);
  auto path = dir / ("repair_" + std::string(kind) + "_" + buf + ".json");
  write_file(path, serialize_model(net, prop));
  return path;
}

}  // namespace tarep
