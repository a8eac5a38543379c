#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thetadim/graph.hpp"

namespace thetadim {

class ResolverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// R(v|W): hop distances from v to each landmark, in landmark order.
struct Representation {
  std::vector<Vertex> landmarks;
  std::vector<Distance> coords;

  friend bool operator==(const Representation&, const Representation&) = default;
};

Representation representation(const DistanceMatrix& d, Vertex v, std::span<const Vertex> landmarks);

struct ResolveCheck {
  bool resolving = false;
  // Smallest (u, v), u < v, with equal representations; set iff !resolving.
  std::optional<std::pair<Vertex, Vertex>> unresolved;

  explicit operator bool() const { return resolving; }
};

// Landmarks must be non-empty, duplicate-free and within 1..n.
ResolveCheck is_resolving(const DistanceMatrix& d, std::span<const Vertex> landmarks);
ResolveCheck is_resolving(const Graph& g, std::span<const Vertex> landmarks);

// Every pair (u, v), u < v, sharing a representation.
std::vector<std::pair<Vertex, Vertex>> unresolved_pairs(const DistanceMatrix& d,
                                                       std::span<const Vertex> landmarks);

// True iff dropping any single landmark breaks resolvability. Throws
// ResolverError when the set does not resolve to begin with.
bool is_minimal_resolving(const DistanceMatrix& d, std::span<const Vertex> landmarks);
bool is_minimal_resolving(const Graph& g, std::span<const Vertex> landmarks);

struct BasisResult {
  int dimension = 0;
  std::vector<Vertex> witness;  // lexicographically smallest metric basis
  int exhausted_below = 0;      // every k-subset with k <= this was rejected
};

struct OracleOptions {
  Vertex max_order = 24;
};

// Exhaustive metric dimension: k = 1, 2, ... over k-subsets in lexicographic
// order, stopping at the first resolving set. Throws ResolverError for a
// disconnected graph or one above the vertex cap.
BasisResult metric_dimension_oracle(const Graph& g, const OracleOptions& options = {});
BasisResult metric_dimension_oracle(const DistanceMatrix& d, const OracleOptions& options = {});

// Whether some k-subset resolves, searching exhaustively.
std::optional<std::vector<Vertex>> find_resolving_subset(const DistanceMatrix& d, int k);

// 1 / 2 / n-1 / n-2 for paths / cycles / complete graphs / complete
// bipartite graphs; empty for anything else.
std::optional<int> known_dimension_special(const Graph& g);

}  // namespace thetadim
