#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "seqcm/cm_engine.hpp"
#include "seqcm/graph.hpp"
#include "seqcm/verify.hpp"

namespace seqcm {

/// Malformed input; what() reads "source:line: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Graph text: first line "n <count>", then one "u v" line per edge,
/// 0-indexed. "#" starts a comment; blank lines are ignored.
Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);

/// Weight text: one "u v w" line per edge of g, each edge exactly once.
WeightFunction parse_weights(std::istream& in, const Graph& g,
                             const std::string& source = "<input>");
WeightFunction read_weights_file(const std::filesystem::path& path, const Graph& g);
void write_weights(std::ostream& out, const WeightFunction& w);

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const WeightFunction& w);
nlohmann::json to_json(const RadicalWitness& w);
/// Verification report: name, passed, instances_checked, counterexamples,
/// elapsed_ms, field_sensitive_cases, seed, notes.
nlohmann::json to_json(const VerificationOutcome& outcome);

}  // namespace seqcm
