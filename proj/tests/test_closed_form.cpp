#include <gtest/gtest.h>

#include <map>

#include "../src/tables.hpp"
#include "support.hpp"
#include "thetadim/closed_form.hpp"
#include "thetadim/resolver.hpp"
#include "thetadim/sweep.hpp"

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

}  // namespace

TEST(ClosedForm, FloorAndCeilDivision) {
  using detail::ceil_div;
  using detail::floor_div;
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(floor_div(-1, 2), -1);
  EXPECT_EQ(ceil_div(-1, 2), 0);
  EXPECT_EQ(floor_div(-4, 2), -2);
  EXPECT_EQ(ceil_div(-4, 2), -2);
  EXPECT_EQ(floor_div(-3, 2), -2);
  EXPECT_EQ(ceil_div(-3, 2), -1);
  EXPECT_EQ(floor_div(0, 2), 0);
  EXPECT_EQ(ceil_div(0, 2), 0);
}

TEST(ClosedForm, TagNamesRoundTrip) {
  const auto tags = all_case_tags();
  ASSERT_EQ(tags.size(), static_cast<std::size_t>(kCaseTagCount));
  for (CaseTag tag : tags) EXPECT_EQ(parse_case_tag(to_string(tag)), tag);
  EXPECT_FALSE(parse_case_tag("T5-P1"));
  EXPECT_EQ(to_string(CaseTag::T4P3a), "T4-P3a");
  EXPECT_EQ(to_string(CaseTag::ZeroPathP2), "ZeroPath-P2");
}

TEST(ClosedForm, DispatchExamples) {
  EXPECT_EQ(dispatch_case({3, 7, 3}), (TheoremCase{CaseTag::T4P1, false}));
  EXPECT_EQ(dispatch_case({5, 3, 4}), (TheoremCase{CaseTag::T3P1, false}));
  EXPECT_EQ(dispatch_case({4, 3, 5}), (TheoremCase{CaseTag::T3P1, true}));
  EXPECT_EQ(dispatch_case({2, 3, 0}), (TheoremCase{CaseTag::ZeroPathP2, false}));
  EXPECT_EQ(dispatch_case({0, 3, 1}), (TheoremCase{CaseTag::ZeroPathP1, true}));
  EXPECT_EQ(dispatch_case({3, 3, 3}), (TheoremCase{CaseTag::T4P3b, false}));
  EXPECT_EQ(dispatch_case({2, 6, 1}), (TheoremCase{CaseTag::T1P2, false}));
  EXPECT_EQ(dispatch_case({4, 4, 2}), (TheoremCase{CaseTag::T2P2, false}));
  EXPECT_THROW(dispatch_case({0, 2, 2}), ThetaError);
}

TEST(ClosedForm, DispatchIsTotalUpToSixteen) {
  std::map<CaseTag, int> counts;
  for (const auto& t : all_valid(16)) {
    const TheoremCase c = dispatch_case(t);
    ++counts[c.tag];
    EXPECT_EQ(case_params(t, c), (c.swapped ? ThetaParams{t.r, t.q, t.p} : t));
  }
  // Every sub-part is reached; totals from an independent enumeration.
  const std::map<CaseTag, int> expected{
      {CaseTag::ZeroPathP1, 26}, {CaseTag::ZeroPathP2, 156}, {CaseTag::T1P1, 8},
      {CaseTag::T1P2, 44},       {CaseTag::T1P3, 82},        {CaseTag::T2P1, 8},
      {CaseTag::T2P2, 8},        {CaseTag::T2P3, 16},        {CaseTag::T3P1, 158},
      {CaseTag::T3P2, 36},       {CaseTag::T3P3, 46},        {CaseTag::T4P1, 8},
      {CaseTag::T4P2, 22},       {CaseTag::T4P3a, 5},        {CaseTag::T4P3b, 14}};
  EXPECT_EQ(counts, expected);
}

TEST(ClosedForm, DimensionFormulaMatchesLengthPredicate) {
  for (const auto& t : all_valid(40)) {
    ASSERT_EQ(dimension_formula(t), dimension_by_lengths(to_theta_lengths(t))) << to_string(t);
  }
}

TEST(ClosedForm, DimensionFormulaMatchesReferenceOracle) {
  for (const auto& row : load_oracle_dims()) {
    ASSERT_EQ(dimension_formula(row.params), row.dimension) << to_string(row.params);
  }
}

TEST(ClosedForm, DimensionThreeFamilies) {
  for (int p = 2; p <= 12; ++p) {
    EXPECT_EQ(dimension_by_lengths({p, p, p}), 3);
    EXPECT_EQ(dimension_by_lengths({p, p, p + 2}), 3);
    EXPECT_EQ(dimension_by_lengths({p, p + 2, p}), 3);
    EXPECT_EQ(dimension_formula(from_theta_lengths({p, p + 2, p})), 3);
    EXPECT_EQ(dimension_by_lengths({p, p + 1, p}), 2);
  }
}

TEST(ClosedForm, FieldNetworkBasis) {
  const ClosedFormResult cf = closed_form_basis({5, 3, 4});
  EXPECT_EQ(cf.theorem_case.tag, CaseTag::T3P1);
  EXPECT_EQ(cf.landmarks, (std::vector<Vertex>{1, 4}));
  EXPECT_EQ(cf.dimension, 2);
}

TEST(ClosedForm, CounterexampleBasis) {
  const ClosedFormResult cf = closed_form_basis({3, 7, 3});
  EXPECT_EQ(cf.landmarks, (std::vector<Vertex>{1, 2, 6}));
  EXPECT_TRUE(is_resolving(build_c({3, 7, 3}), cf.basis));
}

TEST(ClosedForm, SwappedBasisIsPulledBack) {
  for (const auto& t : all_valid(16)) {
    const ClosedFormResult cf = closed_form_basis(t);
    if (!cf.theorem_case.swapped) continue;
    const ThetaParams mirror{t.r, t.q, t.p};
    const ClosedFormResult other = closed_form_basis(mirror);
    ASSERT_FALSE(other.theorem_case.swapped);
    ASSERT_EQ(other.theorem_case.tag, cf.theorem_case.tag);
    const Relabeling back = swap_isomorphism(mirror);
    std::vector<Vertex> expected;
    for (Vertex w : other.landmarks) expected.push_back(back(w));
    ASSERT_EQ(cf.landmarks, expected) << to_string(t);
  }
}

// The only triple up to n = 16 whose closed-form set fails is C(1,2,1): the
// T4-P3a formula names v1 twice there.
TEST(ClosedForm, BasisResolvesExceptKnownDefect) {
  std::vector<ThetaParams> failures;
  for (const auto& t : all_valid(16)) {
    const ClosedFormResult cf = closed_form_basis(t);
    const bool ok = cf.basis.size() == cf.landmarks.size() &&
                    static_cast<int>(cf.basis.size()) == dimension_formula(t) &&
                    is_resolving(build_c(t), cf.basis).resolving;
    if (!ok) failures.push_back(t);
  }
  EXPECT_EQ(failures, (std::vector<ThetaParams>{{1, 2, 1}}));
  const ClosedFormResult bad = closed_form_basis({1, 2, 1});
  EXPECT_EQ(bad.landmarks, (std::vector<Vertex>{1, 1}));
  EXPECT_EQ(bad.dimension, 1);
}

TEST(ClosedForm, PartitionAccessors) {
  const ThetaParams t{5, 3, 4};
  const TheoremCase c = dispatch_case(t);
  EXPECT_EQ(partition_index(t, c, 1), 1);
  EXPECT_EQ(partition_index(t, c, 6), 4);
  EXPECT_EQ(formula_representation(t, c, 1), (std::vector<Distance>{0, 3}));
  EXPECT_THROW(partition_cells(t, TheoremCase{CaseTag::T1P1, false}, 1), ThetaError);
  EXPECT_THROW(partition_cells(t, c, 13), ThetaError);
  EXPECT_THROW(cell_formula(t, c, 9, 1), TableError);
}

TEST(ClosedForm, TableMismatchesAgreeWithBfs) {
  for (const auto& t : all_valid(14)) {
    const ClosedFormResult cf = closed_form_basis(t);
    const DistanceMatrix d = all_pairs(build_c(t));
    const auto mismatches = check_table(t);
    std::size_t seen = 0;
    for (Vertex v = 1; v <= t.order(); ++v) {
      std::vector<Distance> bfs;
      for (Vertex w : cf.landmarks) bfs.push_back(d.at(v, w));
      const auto cells = partition_cells(t, cf.theorem_case, v);
      const bool clean = cells.size() == 1 && cell_formula(t, cf.theorem_case, cells[0], v) == bfs;
      if (clean) continue;
      ASSERT_LT(seen, mismatches.size());
      EXPECT_EQ(mismatches[seen].vertex, v);
      EXPECT_EQ(mismatches[seen].bfs, bfs);
      ++seen;
    }
    EXPECT_EQ(seen, mismatches.size()) << to_string(t);
  }
}
