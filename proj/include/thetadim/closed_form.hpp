#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetadim/graph.hpp"
#include "thetadim/theta.hpp"

namespace thetadim {

// Which closed-form result governs a C(p,q,r) and in which sub-part.
//
//   ZeroPath  one outer path is empty (r = 0, or p = 0 after the swap)
//   T1        q > p > r
//   T2        p = q
//   T3        p > q and p > r
//   T4        p = r
enum class CaseTag {
  ZeroPathP1,
  ZeroPathP2,
  T1P1,
  T1P2,
  T1P3,
  T2P1,
  T2P2,
  T2P3,
  T3P1,
  T3P2,
  T3P3,
  T4P1,
  T4P2,
  T4P3a,
  T4P3b,
};

inline constexpr int kCaseTagCount = 15;

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> parse_case_tag(std::string_view text);
std::vector<CaseTag> all_case_tags();

struct TheoremCase {
  CaseTag tag = CaseTag::ZeroPathP1;
  // The outer paths were exchanged (p <-> r) before the case conditions and
  // formulas were applied.
  bool swapped = false;

  friend bool operator==(const TheoremCase&, const TheoremCase&) = default;
};

// Throws ThetaError for invalid parameters.
TheoremCase dispatch_case(const ThetaParams& params);

// Parameters the case formulas are evaluated in: params itself, or (r,q,p)
// when the case is swapped.
ThetaParams case_params(const ThetaParams& params, const TheoremCase& c);

struct ClosedFormResult {
  TheoremCase theorem_case;
  // Landmarks in formula order, labelled in the caller's (p,q,r) labelling.
  // Duplicates produced by a degenerate formula are kept so they can be
  // reported.
  std::vector<Vertex> landmarks;
  // Distinct landmarks, sorted.
  std::vector<Vertex> basis;
  int dimension = 0;
};

ClosedFormResult closed_form_basis(const ThetaParams& params);

// 3 exactly for the exceptional families, 2 otherwise, by case analysis on
// (p,q,r).
int dimension_formula(const ThetaParams& params);

// The same value from the Θ path lengths alone: 3 iff the three lengths are
// all equal, or two are equal and the third exceeds them by exactly 2.
int dimension_by_lengths(const ThetaLengths& lengths);

// Cells of the case's partition table that contain v (1-based cell indices
// l). A sound table yields exactly one.
std::vector<int> partition_cells(const ThetaParams& params, const TheoremCase& c, Vertex v);

// Throws TableError unless v lies in exactly one cell.
int partition_index(const ThetaParams& params, const TheoremCase& c, Vertex v);

// Coordinates the case's table predicts for v, with landmarks in the order of
// ClosedFormResult::landmarks. Throws TableError when v is not in exactly one
// cell, ThetaError on a case that does not belong to params.
std::vector<Distance> formula_representation(const ThetaParams& params, const TheoremCase& c,
                                             Vertex v);

// Coordinates predicted by a specific cell, regardless of membership.
std::vector<Distance> cell_formula(const ThetaParams& params, const TheoremCase& c, int cell,
                                   Vertex v);

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One vertex whose table prediction disagrees with BFS.
struct TableMismatch {
  Vertex vertex = 0;
  std::vector<int> cells;            // cells claiming the vertex (0 or >= 2 flags a partition defect)
  std::vector<Distance> formula;     // prediction of the first claiming cell, empty if none
  std::vector<Distance> bfs;

  friend bool operator==(const TableMismatch&, const TableMismatch&) = default;
};

// Compares the dispatched case's table with BFS on build_c(params) for every
// vertex.
std::vector<TableMismatch> check_table(const ThetaParams& params);

}  // namespace thetadim
