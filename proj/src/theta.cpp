#include "thetadim/theta.hpp"

#include <algorithm>
#include <numeric>

namespace thetadim {

std::string to_string(const ThetaParams& params) {
  return "(" + std::to_string(params.p) + "," + std::to_string(params.q) + "," +
         std::to_string(params.r) + ")";
}

std::optional<std::string> validate_params(int p, int q, int r) {
  if (p < 0 || r < 0) return "outer path vertex counts must be non-negative";
  if (q < 2) return "q must be at least 2 (the middle path holds both hubs)";
  const int degenerate = (p == 0) + (q == 2) + (r == 0);
  if (degenerate > 1) {
    return "at most one of p=0, q=2, r=0 may hold (two direct hub edges give a multigraph)";
  }
  if (p + q + r < 4) return "a Θ-graph needs at least 4 vertices";
  return std::nullopt;
}

void require_valid(const ThetaParams& params) {
  if (auto why = validate_params(params)) {
    throw ThetaError("invalid parameters " + to_string(params) + ": " + *why);
  }
}

Graph build_c(const ThetaParams& params) {
  require_valid(params);
  const auto [p, q, r] = params;
  const Vertex hub_a = p + 1;
  const Vertex hub_b = p + q;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p + q + r + 1));
  auto chain = [&](Vertex first, Vertex last) {
    for (Vertex v = first; v < last; ++v) edges.emplace_back(v, v + 1);
  };
  chain(1, p);
  chain(hub_a, hub_b);
  chain(p + q + 1, p + q + r);
  if (p > 0) {
    edges.emplace_back(hub_a, 1);
    edges.emplace_back(p, hub_b);
  } else {
    edges.emplace_back(hub_a, hub_b);
  }
  if (r > 0) {
    edges.emplace_back(hub_a, p + q + 1);
    edges.emplace_back(p + q + r, hub_b);
  } else {
    edges.emplace_back(hub_a, hub_b);
  }
  return Graph::create(p + q + r, edges);
}

ThetaLengths to_theta_lengths(const ThetaParams& params) {
  return {params.p + 1, params.q - 1, params.r + 1};
}

ThetaParams from_theta_lengths(const ThetaLengths& lengths) {
  return {lengths.a - 1, lengths.b + 1, lengths.c - 1};
}

Relabeling::Relabeling(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (Vertex v : image_) {
    if (v < 1 || v > size() || seen[v]) {
      throw GraphError("relabeling is not a bijection on 1.." + std::to_string(size()));
    }
    seen[v] = true;
  }
}

Relabeling Relabeling::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 1; v <= size(); ++v) inv[(*this)(v) - 1] = v;
  return Relabeling(std::move(inv));
}

Graph Relabeling::apply(const Graph& g) const {
  if (g.order() != size()) {
    throw GraphError("relabeling of size " + std::to_string(size()) +
                     " applied to a graph of order " + std::to_string(g.order()));
  }
  std::vector<Edge> mapped;
  mapped.reserve(g.size());
  for (auto [u, v] : g.edges()) mapped.emplace_back((*this)(u), (*this)(v));
  return Graph::create(g.order(), mapped);
}

Relabeling swap_isomorphism(const ThetaParams& params) {
  require_valid(params);
  const auto [p, q, r] = params;
  std::vector<Vertex> image(static_cast<std::size_t>(p + q + r));
  for (int i = 1; i <= p; ++i) image[i - 1] = r + q + i;
  for (int i = 0; i < q; ++i) image[p + i] = r + 1 + i;
  for (int j = 1; j <= r; ++j) image[p + q + j - 1] = j;
  return Relabeling(std::move(image));
}

std::optional<ThetaSkeleton> theta_skeleton(const Graph& g) {
  const Vertex n = g.order();
  if (g.size() != static_cast<std::size_t>(n) + 1) return std::nullopt;
  std::vector<Vertex> hubs;
  for (Vertex v = 1; v <= n; ++v) {
    const auto d = g.degree(v);
    if (d == 3) {
      hubs.push_back(v);
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (hubs.size() != 2) return std::nullopt;

  ThetaSkeleton sk;
  sk.hub_a = hubs[0];
  sk.hub_b = hubs[1];
  auto starts = g.neighbors(sk.hub_a);
  std::size_t covered = 2;
  for (std::size_t i = 0; i < 3; ++i) {
    Vertex prev = sk.hub_a;
    Vertex cur = starts[i];
    auto& path = sk.paths[i];
    while (cur != sk.hub_b) {
      // Returning to hub_a means the path closed into a cycle (a handcuff
      // graph, not a Θ-graph).
      if (cur == sk.hub_a || path.size() > static_cast<std::size_t>(n)) return std::nullopt;
      path.push_back(cur);
      auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    covered += path.size();
  }
  // Degree-2 vertices off the three paths would form a separate cycle.
  if (covered != static_cast<std::size_t>(n)) return std::nullopt;
  return sk;
}

ThetaShape shape_with_middle(const ThetaSkeleton& skeleton, int middle) {
  if (middle < 0 || middle > 2) {
    throw ThetaError("middle path index must be 0, 1 or 2, got " + std::to_string(middle));
  }
  std::array<int, 2> outer{};
  for (int i = 0, k = 0; i < 3; ++i) {
    if (i != middle) outer[k++] = i;
  }
  const auto& first = skeleton.paths[outer[0]];
  const auto& mid = skeleton.paths[middle];
  const auto& second = skeleton.paths[outer[1]];

  ThetaShape shape;
  shape.hub_a = skeleton.hub_a;
  shape.hub_b = skeleton.hub_b;
  shape.params = {static_cast<int>(first.size()), static_cast<int>(mid.size()) + 2,
                  static_cast<int>(second.size())};
  shape.path_vertices[0] = first;
  shape.path_vertices[1].push_back(skeleton.hub_a);
  shape.path_vertices[1].insert(shape.path_vertices[1].end(), mid.begin(), mid.end());
  shape.path_vertices[1].push_back(skeleton.hub_b);
  shape.path_vertices[2] = second;

  std::vector<Vertex> image(static_cast<std::size_t>(shape.params.order()));
  Vertex canonical = 1;
  for (const auto& part : shape.path_vertices) {
    for (Vertex v : part) image[v - 1] = canonical++;
  }
  shape.relabeling = Relabeling(std::move(image));
  return shape;
}

std::optional<ThetaShape> detect_theta(const Graph& g, std::optional<int> middle) {
  auto sk = theta_skeleton(g);
  if (!sk) return std::nullopt;
  int choice = 0;
  if (middle) {
    choice = *middle;
  } else {
    for (int i = 1; i < 3; ++i) {
      if (sk->paths[i].size() < sk->paths[choice].size()) choice = i;
    }
  }
  return shape_with_middle(*sk, choice);
}

std::vector<ThetaShape> theta_parameterizations(const Graph& g) {
  std::vector<ThetaShape> out;
  if (auto sk = theta_skeleton(g)) {
    for (int i = 0; i < 3; ++i) out.push_back(shape_with_middle(*sk, i));
  }
  return out;
}

}  // namespace thetadim
