#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetadim {

// Vertex labels are 1-based throughout the library.
using Vertex = std::int32_t;
using Distance = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Marks "no path"; every finite hop count is >= 0.
inline constexpr Distance kUnreachable = -1;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on vertices 1..order().
class Graph {
 public:
  // Duplicate edges (in either orientation) are collapsed. Throws GraphError
  // on n < 1, an endpoint outside 1..n, or a self-loop.
  static Graph create(Vertex n, std::span<const Edge> edges);
  static Graph create(Vertex n, std::initializer_list<Edge> edges) {
    return create(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  Vertex order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  // Sorted neighbour list of v.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  // Copy with one extra edge; the original is left untouched.
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency: neighbours of v live in adj_[offsets_[v-1], offsets_[v]).
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

// Hop counts from `source`; entry [v-1] is d(source, v) or kUnreachable.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

class DistanceMatrix {
 public:
  DistanceMatrix(Vertex n, std::vector<Distance> data);

  Vertex order() const { return n_; }
  Distance at(Vertex u, Vertex v) const {
    return data_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  }
  // Row u, indexed by v-1.
  std::span<const Distance> row(Vertex u) const {
    return {data_.data() + static_cast<std::size_t>(u - 1) * n_,
            static_cast<std::size_t>(n_)};
  }

  bool connected() const;
  // Largest finite entry.
  Distance diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  Vertex n_;
  std::vector<Distance> data_;
};

DistanceMatrix all_pairs(const Graph& g);

}  // namespace thetadim
