#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "thetadim/graph.hpp"
#include "thetadim/theta.hpp"

namespace thetadim::testing {

inline Graph path_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph::create(n, e);
}

inline Graph cycle_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(n, 1);
  return Graph::create(n, e);
}

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph::create(n, e);
}

inline Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> e;
  for (Vertex u = 1; u <= a; ++u)
    for (Vertex v = a + 1; v <= a + b; ++v) e.emplace_back(u, v);
  return Graph::create(a + b, e);
}

// G(n, density) with a random spanning tree added when `connected` is set.
inline Graph random_graph(std::mt19937& rng, Vertex n, double density, bool connected) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  if (connected) {
    for (Vertex v = 2; v <= n; ++v) {
      std::uniform_int_distribution<Vertex> pick(1, v - 1);
      e.emplace_back(pick(rng), v);
    }
  }
  return Graph::create(n, e);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(THETADIM_FIXTURE_DIR) + "/" + name;
}

inline std::string data_path(const std::string& name) {
  return std::string(THETADIM_DATA_DIR) + "/" + name;
}

// Reference values from tests/oracle/derive.py.
struct OracleRow {
  ThetaParams params;
  int dimension = 0;
  std::vector<Vertex> witness;
};

inline std::vector<OracleRow> load_oracle_dims() {
  std::istringstream in(read_file(fixture_path("oracle_dims.csv")));
  std::string line;
  std::getline(in, line);
  std::vector<OracleRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    OracleRow row;
    row.params = {std::stoi(f.at(1)), std::stoi(f.at(2)), std::stoi(f.at(3))};
    row.dimension = std::stoi(f.at(4));
    std::stringstream ws(f.at(5));
    for (std::string w; std::getline(ws, w, ';');) row.witness.push_back(std::stoi(w));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json load_derived() {
  return nlohmann::json::parse(read_file(fixture_path("derived.json")));
}

}  // namespace thetadim::testing
