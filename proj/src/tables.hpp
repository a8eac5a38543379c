#pragma once

#include <functional>
#include <vector>

#include "thetadim/closed_form.hpp"

namespace thetadim::detail {

// Integer floor/ceil of a/b for b > 0, correct for negative a.
constexpr int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

using Bound = std::function<int(const ThetaParams&)>;
using Coords = std::function<std::vector<Distance>(const ThetaParams&, int)>;
using Landmarks = std::function<std::vector<Vertex>(const ThetaParams&)>;

// V_l = {v_lo, ..., v_hi}; empty when lo > hi.
struct Cell {
  Bound lo;
  Bound hi;
  Coords coords;  // R(v_A | W) as a function of (params, A)
};

struct CaseTable {
  Landmarks landmarks;
  std::vector<Cell> cells;
};

// Tables are written in the case's own labelling (after any p <-> r swap).
const CaseTable& case_table(CaseTag tag);

}  // namespace thetadim::detail
