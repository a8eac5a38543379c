#include "thetadim/network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "thetadim/theta.hpp"

namespace thetadim {

namespace {

bool bare_char(char c) {
  return c != '"' && c != '#' && !std::isspace(static_cast<unsigned char>(c));
}

// Splits a statement into tokens; quoted tokens lose their quotes.
std::vector<std::string> tokenize(std::string_view line, int line_no) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      const auto close = line.find('"', i + 1);
      if (close == std::string_view::npos) throw ParseError(line_no, "unterminated quoted name");
      if (close + 1 < line.size() && bare_char(line[close + 1])) {
        throw ParseError(line_no, "quoted name must be followed by whitespace");
      }
      out.emplace_back(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < line.size() && bare_char(line[j])) ++j;
      if (j < line.size() && line[j] == '"') {
        throw ParseError(line_no, "stray '\"' inside a bare name");
      }
      out.emplace_back(line.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

}  // namespace

NetworkSpec parse_network(std::string_view text) {
  NetworkSpec spec;
  std::map<std::string, std::size_t, std::less<>> index;
  std::set<std::pair<std::size_t, std::size_t>> seen_links;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    ++line_no;

    const auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0];
    if (keyword == "node") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected: node NAME");
      const std::string& name = tokens[1];
      if (name.empty()) throw ParseError(line_no, "empty node name");
      if (index.count(name)) throw ParseError(line_no, "duplicate node " + quote_name(name));
      index.emplace(name, spec.nodes.size());
      spec.nodes.push_back(name);
    } else if (keyword == "link") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected: link NAME NAME");
      auto a = index.find(tokens[1]);
      auto b = index.find(tokens[2]);
      if (a == index.end()) throw ParseError(line_no, "unknown node " + quote_name(tokens[1]));
      if (b == index.end()) throw ParseError(line_no, "unknown node " + quote_name(tokens[2]));
      if (a->second == b->second) throw ParseError(line_no, "self-link at " + quote_name(tokens[1]));
      auto key = std::minmax(a->second, b->second);
      if (!seen_links.insert(key).second) {
        throw ParseError(line_no, "duplicate link " + quote_name(tokens[1]) + " " + quote_name(tokens[2]));
      }
      spec.links.emplace_back(tokens[1], tokens[2]);
    } else {
      throw ParseError(line_no, "unknown statement '" + keyword + "'");
    }
  }
  return spec;
}

std::string quote_name(std::string_view name) {
  const bool bare = !name.empty() && std::all_of(name.begin(), name.end(), bare_char);
  return bare ? std::string(name) : "\"" + std::string(name) + "\"";
}

std::string format_network(const NetworkSpec& spec) {
  std::string out;
  for (const auto& node : spec.nodes) out += "node " + quote_name(node) + "\n";
  for (const auto& [a, b] : spec.links) out += "link " + quote_name(a) + " " + quote_name(b) + "\n";
  return out;
}

Graph to_graph(const NetworkSpec& spec) {
  if (spec.nodes.empty()) throw NetworkError("network has no nodes");
  std::map<std::string_view, Vertex> index;
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    index.emplace(spec.nodes[i], static_cast<Vertex>(i + 1));
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : spec.links) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw NetworkError("link " + quote_name(a) + " " + quote_name(b) + " names an undeclared node");
    }
    edges.emplace_back(ia->second, ib->second);
  }
  Graph g = Graph::create(static_cast<Vertex>(spec.nodes.size()), edges);
  const auto reach = bfs_distances(g, 1);
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (reach[v - 1] == kUnreachable) {
      throw NetworkError("network is disconnected: " + quote_name(spec.nodes[v - 1]) +
                         " is unreachable from " + quote_name(spec.nodes[0]));
    }
  }
  return g;
}

const std::vector<Distance>& LandmarkTable::code_of(std::string_view node) const {
  for (const auto& entry : codes) {
    if (entry.node == node) return entry.code;
  }
  throw std::out_of_range("no node named " + quote_name(node));
}

LandmarkTable assign_landmarks(const NetworkSpec& spec, const LandmarkOptions& options) {
  const Graph g = to_graph(spec);
  const DistanceMatrix d = all_pairs(g);

  LandmarkTable table;
  std::vector<Vertex> chosen;

  if (!options.force_oracle) {
    auto shapes = theta_parameterizations(g);
    if (!shapes.empty()) {
      // Default middle path (shortest) first, then the other readings.
      const auto preferred = detect_theta(g);
      std::stable_partition(shapes.begin(), shapes.end(), [&](const ThetaShape& s) {
        return s.params == preferred->params && s.path_vertices == preferred->path_vertices;
      });
    }
    for (const auto& shape : shapes) {
      const ClosedFormResult cf = closed_form_basis(shape.params);
      if (cf.basis.size() != cf.landmarks.size()) continue;
      const Relabeling to_original = shape.relabeling.inverse();
      std::vector<Vertex> mapped;
      for (Vertex w : cf.basis) mapped.push_back(to_original(w));
      if (!is_resolving(d, mapped)) continue;
      chosen = std::move(mapped);
      table.method = "closed-form (" + std::string(to_string(cf.theorem_case.tag)) + ")";
      table.theta_params = shape.params;
      table.theorem_case = cf.theorem_case;
      break;
    }
  }

  if (chosen.empty()) {
    if (g.order() > options.oracle.max_order) {
      throw NetworkError("network has " + std::to_string(g.order()) +
                         " nodes, above the oracle cap of " +
                         std::to_string(options.oracle.max_order) + ", and is not a Θ-graph");
    }
    chosen = metric_dimension_oracle(d, options.oracle).witness;
    table.method = "oracle";
  }

  std::sort(chosen.begin(), chosen.end());
  for (Vertex w : chosen) table.landmarks.push_back(spec.nodes[w - 1]);
  for (Vertex v = 1; v <= g.order(); ++v) {
    table.codes.push_back({spec.nodes[v - 1], representation(d, v, chosen).coords});
  }

  std::vector<std::vector<Distance>> all;
  for (const auto& entry : table.codes) all.push_back(entry.code);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::logic_error("landmark codes are not pairwise distinct");
  }
  return table;
}

std::string format_landmarks(const LandmarkTable& table) {
  std::ostringstream out;
  out << "method " << table.method << '\n';
  out << "dimension " << table.landmarks.size() << '\n';
  for (const auto& name : table.landmarks) out << "landmark " << quote_name(name) << '\n';
  for (const auto& entry : table.codes) {
    out << "code " << quote_name(entry.node) << ' ';
    for (std::size_t i = 0; i < entry.code.size(); ++i) out << (i ? "," : "") << entry.code[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace thetadim
