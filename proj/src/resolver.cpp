#include "thetadim/resolver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace thetadim {

namespace {

void check_landmarks(Vertex n, std::span<const Vertex> landmarks) {
  if (landmarks.empty()) throw ResolverError("landmark set is empty");
  std::vector<Vertex> sorted(landmarks.begin(), landmarks.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > n) {
      throw ResolverError("landmark " + std::to_string(sorted[i]) + " outside 1.." +
                          std::to_string(n));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw ResolverError("duplicate landmark " + std::to_string(sorted[i]));
    }
  }
}

// Representation rows of every vertex, sorted so that equal rows are
// adjacent. Ties keep vertex order.
class RowTable {
 public:
  RowTable(const DistanceMatrix& d, std::span<const Vertex> landmarks)
      : n_(d.order()), k_(landmarks.size()), rows_(static_cast<std::size_t>(n_) * k_),
        order_(static_cast<std::size_t>(n_)) {
    for (Vertex v = 1; v <= n_; ++v) {
      auto row = d.row(v);
      for (std::size_t i = 0; i < k_; ++i) rows_[(v - 1) * k_ + i] = row[landmarks[i] - 1];
    }
    std::iota(order_.begin(), order_.end(), Vertex{1});
    std::stable_sort(order_.begin(), order_.end(), [this](Vertex a, Vertex b) {
      return std::lexicographical_compare(row(a).begin(), row(a).end(), row(b).begin(),
                                          row(b).end());
    });
  }

  std::span<const Distance> row(Vertex v) const { return {rows_.data() + (v - 1) * k_, k_}; }
  bool same(std::size_t i) const {
    return std::equal(row(order_[i]).begin(), row(order_[i]).end(), row(order_[i + 1]).begin());
  }
  const std::vector<Vertex>& order() const { return order_; }

 private:
  Vertex n_;
  std::size_t k_;
  std::vector<Distance> rows_;
  std::vector<Vertex> order_;
};

bool resolves_fast(const DistanceMatrix& d, std::span<const Vertex> landmarks) {
  RowTable table(d, landmarks);
  for (std::size_t i = 0; i + 1 < table.order().size(); ++i) {
    if (table.same(i)) return false;
  }
  return true;
}

}  // namespace

Representation representation(const DistanceMatrix& d, Vertex v, std::span<const Vertex> landmarks) {
  check_landmarks(d.order(), landmarks);
  if (v < 1 || v > d.order()) {
    throw ResolverError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(d.order()));
  }
  Representation rep;
  rep.landmarks.assign(landmarks.begin(), landmarks.end());
  for (Vertex w : landmarks) rep.coords.push_back(d.at(v, w));
  return rep;
}

ResolveCheck is_resolving(const DistanceMatrix& d, std::span<const Vertex> landmarks) {
  check_landmarks(d.order(), landmarks);
  RowTable table(d, landmarks);
  const auto& order = table.order();
  ResolveCheck out{true, std::nullopt};
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!table.same(i)) continue;
    // order is stable within a run, so order[i] < order[i+1] at a run start.
    std::pair<Vertex, Vertex> pair{order[i], order[i + 1]};
    if (!out.unresolved || pair < *out.unresolved) out.unresolved = pair;
    out.resolving = false;
  }
  return out;
}

ResolveCheck is_resolving(const Graph& g, std::span<const Vertex> landmarks) {
  return is_resolving(all_pairs(g), landmarks);
}

std::vector<std::pair<Vertex, Vertex>> unresolved_pairs(const DistanceMatrix& d,
                                                       std::span<const Vertex> landmarks) {
  check_landmarks(d.order(), landmarks);
  RowTable table(d, landmarks);
  const auto& order = table.order();
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() && table.same(end - 1)) ++end;
    for (std::size_t i = start; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) out.emplace_back(order[i], order[j]);
    }
    start = end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minimal_resolving(const DistanceMatrix& d, std::span<const Vertex> landmarks) {
  if (!is_resolving(d, landmarks)) {
    throw ResolverError("minimality asked of a set that does not resolve the graph");
  }
  if (landmarks.size() == 1) return true;
  std::vector<Vertex> reduced;
  for (std::size_t skip = 0; skip < landmarks.size(); ++skip) {
    reduced.clear();
    for (std::size_t i = 0; i < landmarks.size(); ++i) {
      if (i != skip) reduced.push_back(landmarks[i]);
    }
    if (resolves_fast(d, reduced)) return false;
  }
  return true;
}

bool is_minimal_resolving(const Graph& g, std::span<const Vertex> landmarks) {
  return is_minimal_resolving(all_pairs(g), landmarks);
}

std::optional<std::vector<Vertex>> find_resolving_subset(const DistanceMatrix& d, int k) {
  const Vertex n = d.order();
  if (k < 1 || k > n) return std::nullopt;
  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), Vertex{1});
  while (true) {
    if (resolves_fast(d, subset)) return subset;
    // Advance to the next k-combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i + 1) --i;
    if (i < 0) return std::nullopt;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

BasisResult metric_dimension_oracle(const DistanceMatrix& d, const OracleOptions& options) {
  if (d.order() > options.max_order) {
    throw ResolverError("graph order " + std::to_string(d.order()) + " exceeds the oracle cap of " +
                        std::to_string(options.max_order));
  }
  if (!d.connected()) throw ResolverError("metric dimension needs a connected graph");
  // The empty set already separates the lone vertex of K1.
  if (d.order() == 1) return BasisResult{0, {}, -1};
  for (int k = 1; k <= d.order(); ++k) {
    if (auto found = find_resolving_subset(d, k)) {
      return BasisResult{k, std::move(*found), k - 1};
    }
  }
  // All n vertices always resolve; unreachable for a valid matrix.
  throw ResolverError("no resolving set found");
}

BasisResult metric_dimension_oracle(const Graph& g, const OracleOptions& options) {
  if (g.order() > options.max_order) {
    throw ResolverError("graph order " + std::to_string(g.order()) + " exceeds the oracle cap of " +
                        std::to_string(options.max_order));
  }
  return metric_dimension_oracle(all_pairs(g), options);
}

std::optional<int> known_dimension_special(const Graph& g) {
  const Vertex n = g.order();
  if (n < 2) return std::nullopt;
  const auto d = all_pairs(g);
  if (!d.connected()) return std::nullopt;
  const auto m = g.size();
  std::size_t max_deg = 0;
  bool all_two = true;
  for (Vertex v = 1; v <= n; ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    all_two = all_two && g.degree(v) == 2;
  }
  if (m == static_cast<std::size_t>(n) - 1 && max_deg <= 2) return 1;
  if (n >= 3 && m == static_cast<std::size_t>(n) && all_two) return 2;
  if (m == static_cast<std::size_t>(n) * (n - 1) / 2) return n - 1;

  // Complete bipartite: 2-colour by distance parity from vertex 1, then
  // every cross pair must be an edge.
  if (n >= 4) {
    std::size_t even = 0;
    bool bipartite = true;
    for (auto [u, v] : g.edges()) bipartite = bipartite && (d.at(1, u) + d.at(1, v)) % 2 == 1;
    for (Vertex v = 1; v <= n; ++v) even += d.at(1, v) % 2 == 0;
    if (bipartite && m == even * (static_cast<std::size_t>(n) - even)) return n - 2;
  }
  return std::nullopt;
}

}  // namespace thetadim
