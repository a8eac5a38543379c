#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "thetadim/sweep.hpp"
#include "thetadim/theta.hpp"

using namespace thetadim;
using namespace thetadim::testing;

namespace {

std::vector<ThetaParams> all_valid(int max_n) {
  std::vector<ThetaParams> out;
  for (int n = 4; n <= max_n; ++n) {
    auto batch = valid_params_of_order(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::array<int, 3> sorted_lengths(const ThetaParams& t) {
  const ThetaLengths l = to_theta_lengths(t);
  std::array<int, 3> a{l.a, l.b, l.c};
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST(Theta, Validation) {
  EXPECT_FALSE(validate_params(3, 7, 3));
  EXPECT_FALSE(validate_params(1, 2, 1));
  EXPECT_TRUE(validate_params(-1, 3, 2));
  EXPECT_TRUE(validate_params(2, 1, 2));
  EXPECT_TRUE(validate_params(0, 2, 2));
  EXPECT_TRUE(validate_params(2, 2, 0));
  EXPECT_TRUE(validate_params(0, 3, 0));
  EXPECT_TRUE(validate_params(1, 2, 0));
  EXPECT_THROW(build_c({0, 2, 2}), ThetaError);
}

TEST(Theta, CounterexampleGraph) {
  const Graph g = build_c({3, 7, 3});
  EXPECT_EQ(g.order(), 13);
  EXPECT_EQ(g.size(), 14u);
  EXPECT_EQ(all_pairs(g).diameter(), 5);
  EXPECT_EQ(to_theta_lengths({3, 7, 3}), (ThetaLengths{4, 6, 4}));
  EXPECT_EQ(from_theta_lengths({4, 6, 4}), (ThetaParams{3, 7, 3}));
  for (const auto& [u, v] : std::vector<Edge>{{4, 1}, {3, 10}, {4, 11}, {13, 10}}) {
    EXPECT_TRUE(g.has_edge(u, v)) << u << "-" << v;
  }
}

TEST(Theta, ZeroOuterPathUsesHubEdge) {
  const Graph g = build_c({2, 3, 0});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}));
}

TEST(ThetaProperty, StructureOfEveryValidTriple) {
  for (const auto& t : all_valid(16)) {
    const Graph g = build_c(t);
    const Vertex n = t.order();
    ASSERT_EQ(g.order(), n);
    ASSERT_EQ(g.size(), static_cast<std::size_t>(n + 1)) << to_string(t);
    ASSERT_TRUE(all_pairs(g).connected());
    for (Vertex v = 1; v <= n; ++v) {
      const bool hub = v == t.p + 1 || v == t.p + t.q;
      ASSERT_EQ(g.degree(v), hub ? 3u : 2u) << to_string(t) << " v" << v;
    }
    ASSERT_EQ(from_theta_lengths(to_theta_lengths(t)), t);
  }
}

TEST(ThetaProperty, SwapIsomorphismPreservesAdjacency) {
  for (const auto& t : all_valid(16)) {
    const Relabeling s = swap_isomorphism(t);
    const ThetaParams mirrored{t.r, t.q, t.p};
    ASSERT_EQ(s.apply(build_c(t)), build_c(mirrored)) << to_string(t);
    ASSERT_EQ(s.inverse(), swap_isomorphism(mirrored)) << to_string(t);
    const Graph g = build_c(t);
    for (Vertex u = 1; u <= g.order(); ++u)
      for (Vertex v = 1; v <= g.order(); ++v)
        ASSERT_EQ(g.has_edge(u, v), build_c(mirrored).has_edge(s(u), s(v)));
  }
}

TEST(Theta, RelabelingMustBeBijection) {
  EXPECT_THROW(Relabeling({1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(Relabeling({1, 4, 2}), std::invalid_argument);
  const Relabeling r({2, 3, 1});
  EXPECT_EQ(r.inverse(), Relabeling({3, 1, 2}));
}

TEST(ThetaProperty, DetectRoundTripUnderRandomRelabeling) {
  std::mt19937 rng(7);
  for (const auto& t : all_valid(16)) {
    std::vector<Vertex> image(static_cast<std::size_t>(t.order()));
    std::iota(image.begin(), image.end(), 1);
    std::shuffle(image.begin(), image.end(), rng);
    const Relabeling scramble(image);
    const Graph g = scramble.apply(build_c(t));

    const auto shapes = theta_parameterizations(g);
    ASSERT_EQ(shapes.size(), 3u) << to_string(t);
    bool found_self = false;
    for (const auto& shape : shapes) {
      ASSERT_FALSE(validate_params(shape.params)) << to_string(shape.params);
      ASSERT_EQ(shape.relabeling.apply(g), build_c(shape.params)) << to_string(t);
      ASSERT_EQ(sorted_lengths(shape.params), sorted_lengths(t));
      found_self |= shape.params == t || shape.params == ThetaParams{t.r, t.q, t.p};
    }
    ASSERT_TRUE(found_self) << to_string(t);

    const auto best = detect_theta(g);
    ASSERT_TRUE(best);
    ASSERT_EQ(best->params.q, sorted_lengths(t)[0] + 1) << "default middle is the shortest path";
  }
}

TEST(Theta, DetectRejectsNonTheta) {
  EXPECT_FALSE(detect_theta(cycle_graph(6)));
  EXPECT_FALSE(detect_theta(path_graph(5)));
  EXPECT_FALSE(detect_theta(complete_graph(4)));
  // Handcuff: two triangles joined by an edge.
  EXPECT_FALSE(detect_theta(Graph::create(6, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}, {6, 4}})));
  // Right degree sequence and size, but disconnected: a theta plus a cycle.
  EXPECT_FALSE(detect_theta(Graph::create(8, {{1, 3}, {1, 4}, {3, 2}, {4, 2}, {1, 2}, {5, 6}, {6, 7}, {7, 8}, {8, 5}})));
}

TEST(Theta, CompleteBipartiteIsTheta) {
  const auto shape = detect_theta(complete_bipartite(2, 3));
  ASSERT_TRUE(shape);
  EXPECT_EQ(shape->params, (ThetaParams{1, 3, 1}));
}

TEST(Theta, ExplicitMiddleChoice) {
  const Graph g = build_c({5, 3, 4});
  const auto mid = detect_theta(g, 1);
  ASSERT_TRUE(mid);
  EXPECT_EQ(mid->params, (ThetaParams{5, 3, 4}));
  EXPECT_EQ(mid->relabeling, Relabeling(std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  EXPECT_THROW(detect_theta(g, 3), std::invalid_argument);
}
