#include "thetadim/graph.hpp"

#include <algorithm>
#include <deque>

namespace thetadim {

Graph Graph::create(Vertex n, std::span<const Edge> edges) {
  if (n < 1) {
    throw GraphError("graph needs at least one vertex, got n=" + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) g.offsets_[v] = g.offsets_[v - 1] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.adj_[fill[u - 1]++] = v;
    g.adj_[fill[v - 1]++] = u;
  }
  for (Vertex v = 1; v <= n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v - 1]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]));
  }
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!contains(v)) {
    throw GraphError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
  return {adj_.data() + offsets_[v - 1], offsets_[v] - offsets_[v - 1]};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  std::vector<Edge> e = edges_;
  e.emplace_back(u, v);
  return create(n_, e);
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw GraphError("BFS source " + std::to_string(source) + " outside 1.." +
                     std::to_string(g.order()));
  }
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::deque<Vertex> frontier{source};
  dist[source - 1] = 0;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w - 1] == kUnreachable) {
        dist[w - 1] = dist[u - 1] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(Vertex n, std::vector<Distance> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(n) * n) {
    throw GraphError("distance matrix data does not match order " + std::to_string(n));
  }
}

bool DistanceMatrix::connected() const {
  return std::find(data_.begin(), data_.end(), kUnreachable) == data_.end();
}

Distance DistanceMatrix::diameter() const {
  Distance best = 0;
  for (Distance d : data_) best = std::max(best, d);
  return best;
}

DistanceMatrix all_pairs(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Distance> data;
  data.reserve(n * n);
  for (Vertex u = 1; u <= g.order(); ++u) {
    auto row = bfs_distances(g, u);
    data.insert(data.end(), row.begin(), row.end());
  }
  return DistanceMatrix(g.order(), std::move(data));
}

}  // namespace thetadim
