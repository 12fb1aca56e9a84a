#include "tis/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tis/errors.hpp"

namespace tis {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  TemporalInstance run();

private:
  [[noreturn]] void fail(const Token& tok, const std::string& message) const {
    throw ParseError(line_no_, tok.column, message);
  }
  [[noreturn]] void fail_line(std::size_t line, const std::string& message) const {
    throw ParseError(line, 1, message);
  }

  long long parse_int(const Token& tok) const {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
      fail(tok, "expected integer, got '" + std::string(tok.text) + "'");
    }
    return value;
  }

  Rational parse_rational(const Token& tok) const {
    try {
      return Rational::parse(tok.text);
    } catch (const std::exception& e) {
      fail(tok, e.what());
    }
  }

  void expect_arity(const std::vector<Token>& toks, std::size_t lo, std::size_t hi) const {
    if (toks.size() < lo || toks.size() > hi) {
      fail(toks.size() > hi ? toks[hi] : toks.back(), "wrong number of fields for '" + std::string(toks[0].text) + "'");
    }
  }

  VertexIndex lookup(const Token& tok) const {
    auto it = index_.find(std::string(tok.text));
    if (it == index_.end()) fail(tok, "unknown vertex '" + std::string(tok.text) + "'");
    return it->second;
  }

  void header(const std::vector<Token>& toks);
  void vertex_line(const std::vector<Token>& toks);
  void layer_line(const std::vector<Token>& toks);
  void entry_line(const std::vector<Token>& toks);

  struct Header {
    long long value = 0;
    std::size_t line = 0;
  };

  std::string_view text_;
  std::size_t line_no_ = 0;
  bool magic_ = false;

  std::optional<LayerMode> mode_;
  std::map<std::string, Header, std::less<>> headers_;
  std::optional<bool> unit_;

  std::vector<Vertex> vertices_;
  std::map<std::string, VertexIndex, std::less<>> index_;

  // Current layer (0-based) and per-layer content.
  std::optional<std::size_t> current_;
  std::vector<std::size_t> layer_line_;
  std::vector<std::vector<std::optional<Interval>>> intervals_;
  std::vector<std::vector<Edge>> edges_;
};

void Parser::header(const std::vector<Token>& toks) {
  const std::string key(toks[0].text);
  if (!vertices_.empty() || current_) fail(toks[0], "header '" + key + "' after vertex or layer lines");
  expect_arity(toks, 2, 2);
  if (key == "mode") {
    if (mode_) fail(toks[0], "duplicate header 'mode'");
    if (toks[1].text == "model") {
      mode_ = LayerMode::Model;
    } else if (toks[1].text == "edges") {
      mode_ = LayerMode::Edges;
    } else {
      fail(toks[1], "mode must be 'model' or 'edges'");
    }
    return;
  }
  if (key == "unit") {
    if (unit_) fail(toks[0], "duplicate header 'unit'");
    if (toks[1].text == "true") {
      unit_ = true;
    } else if (toks[1].text == "false") {
      unit_ = false;
    } else {
      fail(toks[1], "unit must be 'true' or 'false'");
    }
    return;
  }
  if (headers_.count(key)) fail(toks[0], "duplicate header '" + key + "'");
  long long value = parse_int(toks[1]);
  if (value < 0) fail(toks[1], "'" + key + "' must be nonnegative");
  headers_[key] = {value, line_no_};
}

void Parser::vertex_line(const std::vector<Token>& toks) {
  if (current_) fail(toks[0], "vertex declared after first layer");
  expect_arity(toks, 2, 3);
  std::string name(toks[1].text);
  if (index_.count(name)) fail(toks[1], "duplicate vertex '" + name + "'");
  if (name.find(',') != std::string::npos) fail(toks[1], "vertex names may not contain ','");
  Vertex v{name, Rational(1)};
  if (toks.size() == 3) {
    v.weight = parse_rational(toks[2]);
    if (v.weight < Rational(0)) fail(toks[2], "negative weight");
  }
  index_.emplace(name, vertices_.size());
  vertices_.push_back(std::move(v));
}

void Parser::layer_line(const std::vector<Token>& toks) {
  expect_arity(toks, 2, 2);
  for (const char* key : {"mode", "n", "tau", "delta", "k"}) {
    bool present = std::string_view(key) == "mode" ? mode_.has_value() : headers_.count(key) > 0;
    if (!present) fail(toks[0], std::string("header '") + key + "' missing before first layer");
  }
  auto n = static_cast<std::size_t>(headers_.at("n").value);
  if (vertices_.size() != n) {
    fail(toks[0], "declared n " + std::to_string(n) + " but " + std::to_string(vertices_.size()) + " vertices");
  }
  auto tau = static_cast<std::size_t>(headers_.at("tau").value);
  if (layer_line_.empty()) {
    layer_line_.assign(tau, 0);
    intervals_.assign(tau, std::vector<std::optional<Interval>>(n));
    edges_.assign(tau, {});
  }
  long long t = parse_int(toks[1]);
  if (t < 1 || static_cast<std::size_t>(t) > tau) {
    fail(toks[1], "layer " + std::to_string(t) + " outside [1, " + std::to_string(tau) + "]");
  }
  auto idx = static_cast<std::size_t>(t - 1);
  if (layer_line_[idx] != 0) fail(toks[1], "duplicate layer " + std::to_string(t));
  layer_line_[idx] = line_no_;
  current_ = idx;
}

void Parser::entry_line(const std::vector<Token>& toks) {
  if (!current_) fail(toks[0], "'" + std::string(toks[0].text) + "' outside a layer");
  const bool model = *mode_ == LayerMode::Model;
  if (toks[0].text == "interval") {
    if (!model) fail(toks[0], "'interval' line in edges mode");
    expect_arity(toks, 4, 4);
    VertexIndex v = lookup(toks[1]);
    Interval iv{parse_rational(toks[2]), parse_rational(toks[3])};
    if (iv.left > iv.right) fail(toks[2], "interval left endpoint exceeds right endpoint");
    auto& slot = intervals_[*current_][v];
    if (slot) fail(toks[1], "second interval for vertex '" + std::string(toks[1].text) + "' in one layer");
    slot = iv;
    return;
  }
  if (model) fail(toks[0], "'edge' line in model mode");
  expect_arity(toks, 3, 3);
  VertexIndex u = lookup(toks[1]);
  VertexIndex v = lookup(toks[2]);
  if (u == v) fail(toks[2], "self-loop on '" + std::string(toks[1].text) + "'");
  Edge e = Edge::make(u, v);
  auto& list = edges_[*current_];
  if (std::find(list.begin(), list.end(), e) != list.end()) fail(toks[1], "duplicate edge");
  list.push_back(e);
}

TemporalInstance Parser::run() {
  std::size_t pos = 0;
  while (pos <= text_.size()) {
    std::size_t end = text_.find('\n', pos);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos, end - pos);
    pos = end + 1;
    ++line_no_;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string_view key = toks[0].text;
    if (!magic_) {
      if (key != "tis" || toks.size() != 2 || toks[1].text != "1") fail(toks[0], "expected 'tis 1' header");
      magic_ = true;
      continue;
    }
    if (key == "mode" || key == "n" || key == "tau" || key == "delta" || key == "k" || key == "unit") {
      header(toks);
    } else if (key == "vertex") {
      if (!mode_) fail(toks[0], "'mode' must precede vertex lines");
      vertex_line(toks);
    } else if (key == "layer") {
      layer_line(toks);
    } else if (key == "interval" || key == "edge") {
      entry_line(toks);
    } else {
      fail(toks[0], "unknown keyword '" + std::string(key) + "'");
    }
  }
  const std::size_t last = line_no_;
  if (!magic_) fail_line(last, "empty input; expected 'tis 1' header");
  if (layer_line_.empty()) fail_line(last, "no layers");

  const auto& delta_h = headers_.at("delta");
  const auto tau = static_cast<long long>(layer_line_.size());
  if (tau < 1) fail_line(headers_.at("tau").line, "tau must be at least 1");
  if (delta_h.value < 1 || delta_h.value > tau) {
    fail_line(delta_h.line, "delta " + std::to_string(delta_h.value) + " outside [1, " + std::to_string(tau) + "]");
  }
  for (std::size_t t = 0; t < layer_line_.size(); ++t) {
    if (layer_line_[t] == 0) fail_line(last, "layer " + std::to_string(t + 1) + " missing (tau/layer mismatch)");
  }

  TemporalInstance::Params params;
  params.delta = static_cast<int>(delta_h.value);
  params.k = static_cast<int>(headers_.at("k").value);

  try {
    if (*mode_ == LayerMode::Model) {
      params.unit = unit_.value_or(true);
      std::vector<IntervalModel> models;
      for (std::size_t t = 0; t < intervals_.size(); ++t) {
        std::vector<Interval> ivs;
        for (VertexIndex v = 0; v < vertices_.size(); ++v) {
          if (!intervals_[t][v]) {
            fail_line(layer_line_[t],
                      "layer " + std::to_string(t + 1) + " has no interval for '" + vertices_[v].name + "'");
          }
          ivs.push_back(*intervals_[t][v]);
        }
        IntervalModel model(std::move(ivs));
        if (params.unit && !model.is_unit()) {
          fail_line(layer_line_[t], "unit flag violated in layer " + std::to_string(t + 1));
        }
        models.push_back(std::move(model));
      }
      return TemporalInstance::from_models(vertices_, std::move(models), params);
    }
    params.unit = unit_.value_or(false);
    std::vector<StaticGraph> graphs;
    for (const auto& list : edges_) graphs.emplace_back(vertices_.size(), list);
    return TemporalInstance::from_graphs(vertices_, std::move(graphs), params);
  } catch (const InvalidInstance& e) {
    fail_line(last, e.what());
  }
}

} // namespace

TemporalInstance parse_instance(std::string_view text) { return Parser(text).run(); }

std::string serialize_instance(const TemporalInstance& inst) {
  std::ostringstream os;
  const bool model = inst.mode() == LayerMode::Model;
  os << "tis 1\n";
  os << "mode " << (model ? "model" : "edges") << "\n";
  os << "n " << inst.size() << "\n";
  os << "tau " << inst.tau() << "\n";
  os << "delta " << inst.delta() << "\n";
  os << "k " << inst.k() << "\n";
  os << "unit " << (inst.unit() ? "true" : "false") << "\n";
  for (const Vertex& v : inst.vertices()) {
    os << "vertex " << v.name;
    if (v.weight != Rational(1)) os << ' ' << v.weight;
    os << "\n";
  }
  for (int t = 0; t < inst.tau(); ++t) {
    os << "layer " << (t + 1) << "\n";
    std::vector<std::string> lines;
    if (model) {
      const IntervalModel& m = inst.models()[static_cast<std::size_t>(t)];
      for (VertexIndex v = 0; v < inst.size(); ++v) {
        lines.push_back("interval " + inst.name(v) + " " + m[v].left.str() + " " + m[v].right.str());
      }
    } else {
      for (const Edge& e : inst.graphs()[static_cast<std::size_t>(t)].edges()) {
        auto a = inst.name(e.u);
        auto b = inst.name(e.v);
        if (b < a) std::swap(a, b);
        lines.push_back("edge " + a + " " + b);
      }
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) os << l << "\n";
  }
  return os.str();
}

TemporalInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const TemporalInstance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << serialize_instance(inst);
}

} // namespace tis
