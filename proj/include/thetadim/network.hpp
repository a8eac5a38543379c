#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetadim/closed_form.hpp"
#include "thetadim/graph.hpp"
#include "thetadim/resolver.hpp"

namespace thetadim {

// A named network: node i (0-based, declaration order) becomes vertex i+1.
struct NetworkSpec {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> links;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structural problems of a parsed network (disconnected, too large for the
// oracle).
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grammar, one statement per line:
//   node NAME
//   link NAME NAME
// NAME is a bare token without whitespace, '"' or '#', or a double-quoted
// string without '"'. Text from an unquoted '#' to the end of the line is a
// comment; blank lines are ignored.
NetworkSpec parse_network(std::string_view text);

// Canonical text form; parse_network(format_network(s)) reproduces s.
std::string format_network(const NetworkSpec& spec);

// Name quoted when it is not a valid bare token.
std::string quote_name(std::string_view name);

// Throws NetworkError when the network is disconnected.
Graph to_graph(const NetworkSpec& spec);

struct NodeCode {
  std::string node;
  std::vector<Distance> code;
};

struct LandmarkTable {
  std::vector<std::string> landmarks;  // declaration order
  std::vector<NodeCode> codes;         // declaration order
  std::string method;                  // "closed-form (<case>)" or "oracle"
  std::optional<ThetaParams> theta_params;
  std::optional<TheoremCase> theorem_case;

  const std::vector<Distance>& code_of(std::string_view node) const;
};

struct LandmarkOptions {
  OracleOptions oracle;
  bool force_oracle = false;
};

// Closed-form basis when the network is a Θ-graph (verified against BFS),
// exhaustive oracle otherwise.
LandmarkTable assign_landmarks(const NetworkSpec& spec, const LandmarkOptions& options = {});

std::string format_landmarks(const LandmarkTable& table);

}  // namespace thetadim
