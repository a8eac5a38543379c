#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thetadim/graph.hpp"

namespace thetadim {

// Vertex counts of the three paths of C(p,q,r): outer path p, middle path q
// (both hubs included), outer path r.
//
// Canonical labelling: v1..vp is the first outer path, v(p+1)..v(p+q) the
// middle path with hubs v(p+1) and v(p+q), v(p+q+1)..v(p+q+r) the second
// outer path. v1 and v(p+q+1) hang off hub v(p+1); vp and v(p+q+r) hang off
// hub v(p+q).
struct ThetaParams {
  int p = 0;
  int q = 0;
  int r = 0;

  int order() const { return p + q + r; }
  friend bool operator==(const ThetaParams&, const ThetaParams&) = default;
  friend auto operator<=>(const ThetaParams&, const ThetaParams&) = default;
};

std::string to_string(const ThetaParams& params);

// Hub-to-hub path lengths (edge counts) of the same graph seen as Θ(a,b,c).
struct ThetaLengths {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const ThetaLengths&, const ThetaLengths&) = default;
};

class ThetaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Empty when the triple describes a simple Θ-graph, otherwise the rule it
// breaks.
std::optional<std::string> validate_params(int p, int q, int r);
inline std::optional<std::string> validate_params(const ThetaParams& t) {
  return validate_params(t.p, t.q, t.r);
}

// Throws ThetaError when validate_params reports a violation.
void require_valid(const ThetaParams& params);

Graph build_c(const ThetaParams& params);

ThetaLengths to_theta_lengths(const ThetaParams& params);
ThetaParams from_theta_lengths(const ThetaLengths& lengths);

// A bijection on 1..n stored as its image table.
class Relabeling {
 public:
  Relabeling() = default;
  explicit Relabeling(std::vector<Vertex> image);

  Vertex operator()(Vertex v) const { return image_.at(static_cast<std::size_t>(v - 1)); }
  Vertex size() const { return static_cast<Vertex>(image_.size()); }
  Relabeling inverse() const;
  const std::vector<Vertex>& image() const { return image_; }

  Graph apply(const Graph& g) const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;

 private:
  std::vector<Vertex> image_;
};

// The isomorphism C(p,q,r) -> C(r,q,p) that exchanges the outer paths.
Relabeling swap_isomorphism(const ThetaParams& params);

// One way of reading a detected Θ-graph as C(p,q,r): which hub-to-hub path
// plays the middle role and how input labels map onto build_c's labels.
struct ThetaShape {
  Vertex hub_a = 0;  // smaller original label
  Vertex hub_b = 0;
  ThetaParams params;
  // Original labels in canonical order: first outer path v1..vp, middle path
  // v(p+1)..v(p+q) including both hubs, second outer path v(p+q+1)..v(p+q+r).
  std::array<std::vector<Vertex>, 3> path_vertices;
  // Maps an original label to its canonical C(p,q,r) label.
  Relabeling relabeling;
};

// Hub-to-hub paths of a Θ-graph, each listed from hub_a with internal
// vertices only. Paths are ordered by the label of their first vertex after
// hub_a (hub_b for a direct hub edge).
struct ThetaSkeleton {
  Vertex hub_a = 0;
  Vertex hub_b = 0;
  std::array<std::vector<Vertex>, 3> paths;
};

std::optional<ThetaSkeleton> theta_skeleton(const Graph& g);

// Reads g as C(p,q,r) with paths[middle] in the middle role; the remaining
// two paths keep their skeleton order as first and second outer paths.
ThetaShape shape_with_middle(const ThetaSkeleton& skeleton, int middle);

// Middle-path choice: explicit index into the skeleton order, or the
// shortest path (first on ties) when empty.
std::optional<ThetaShape> detect_theta(const Graph& g, std::optional<int> middle = std::nullopt);

// One shape per middle-path choice, in skeleton order.
std::vector<ThetaShape> theta_parameterizations(const Graph& g);

}  // namespace thetadim
