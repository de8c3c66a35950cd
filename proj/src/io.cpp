#include "seqcm/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace seqcm {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long long parse_integer(const std::string& token, const std::string& source, int line) {
  long long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(source, line, "expected an integer, got '" + token + "'");
  }
  return value;
}

int parse_vertex(const std::string& token, int n, const std::string& source, int line) {
  const long long v = parse_integer(token, source, line);
  if (v < 0 || v >= n) {
    throw ParseError(source, line,
                     "vertex " + token + " out of range [0, " + std::to_string(n - 1) + "]");
  }
  return static_cast<int>(v);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

Graph parse_graph(std::istream& in, const std::string& source) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(source, 0, "empty graph file, expected 'n <count>'");
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "n") {
    throw ParseError(source, header.number, "expected 'n <count>'");
  }
  const long long n = parse_integer(header.tokens[1], source, header.number);
  if (n < 0 || n > kMaxVertices) {
    throw ParseError(source, header.number,
                     "vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
  }
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(source, l.number, "expected 'u v'");
    int u = parse_vertex(l.tokens[0], static_cast<int>(n), source, l.number);
    int v = parse_vertex(l.tokens[1], static_cast<int>(n), source, l.number);
    if (u == v) throw ParseError(source, l.number, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw ParseError(source, l.number,
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_graph(in, path.string());
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

WeightFunction parse_weights(std::istream& in, const Graph& g, const std::string& source) {
  std::map<std::pair<int, int>, std::uint32_t> given;
  int last_line = 0;
  for (const Line& l : tokenize(in)) {
    last_line = l.number;
    if (l.tokens.size() != 3) throw ParseError(source, l.number, "expected 'u v w'");
    int u = parse_vertex(l.tokens[0], g.num_vertices(), source, l.number);
    int v = parse_vertex(l.tokens[1], g.num_vertices(), source, l.number);
    const long long w = parse_integer(l.tokens[2], source, l.number);
    if (w < 1 || w > 0xffffffffLL) throw ParseError(source, l.number, "weight must be positive");
    if (u > v) std::swap(u, v);
    if (!g.adjacent(u, v)) {
      throw ParseError(source, l.number,
                       std::to_string(u) + " " + std::to_string(v) + " is not an edge");
    }
    if (!given.emplace(std::pair{u, v}, static_cast<std::uint32_t>(w)).second) {
      throw ParseError(source, l.number,
                       "edge " + std::to_string(u) + " " + std::to_string(v) + " weighted twice");
    }
  }
  std::vector<std::uint32_t> values;
  for (const Edge& e : g.edges()) {
    auto it = given.find({e.u, e.v});
    if (it == given.end()) {
      throw ParseError(source, last_line,
                       "missing weight for edge " + std::to_string(e.u) + " " +
                           std::to_string(e.v));
    }
    values.push_back(it->second);
  }
  return WeightFunction(g, values);
}

WeightFunction read_weights_file(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in = open_input(path);
  return parse_weights(in, g, path.string());
}

void write_weights(std::ostream& out, const WeightFunction& w) {
  for (std::size_t i = 0; i < w.edges().size(); ++i) {
    out << w.edges()[i].u << " " << w.edges()[i].v << " " << w.values()[i] << "\n";
  }
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

nlohmann::json to_json(const WeightFunction& w) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < w.edges().size(); ++i) {
    out.push_back({w.edges()[i].u, w.edges()[i].v, w.values()[i]});
  }
  return out;
}

nlohmann::json to_json(const RadicalWitness& w) {
  nlohmann::json out = {{"u", w.u.to_string()}, {"radical", w.radical.to_string()}};
  if (w.detail.reisner) {
    out["link_face"] = mask_to_vector(w.detail.reisner->face);
    out["homology_degree"] = w.detail.reisner->degree;
  }
  if (w.detail.skeleton) out["pure_skeleton"] = *w.detail.skeleton;
  if (w.dimension_drop) out["radical_dim"] = *w.dimension_drop;
  return out;
}

nlohmann::json to_json(const VerificationOutcome& outcome) {
  nlohmann::json ces = nlohmann::json::array();
  for (const Counterexample& c : outcome.counterexamples) {
    ces.push_back({{"graph", to_json(c.graph)},
                   {"weights", c.weights ? to_json(*c.weights) : nlohmann::json(nullptr)},
                   {"detail", c.detail}});
  }
  nlohmann::json notes = nlohmann::json::object();
  for (const auto& [k, v] : outcome.notes) notes[k] = v;
  return {{"name", outcome.name},
          {"passed", outcome.passed},
          {"instances_checked", outcome.instances_checked},
          {"counterexamples", ces},
          {"elapsed_ms", outcome.elapsed.count()},
          {"field_sensitive_cases", outcome.field_sensitive_cases},
          {"seed", outcome.seed},
          {"notes", notes}};
}

}  // namespace seqcm
