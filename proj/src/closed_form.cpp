#include "thetadim/closed_form.hpp"

#include <algorithm>
#include <array>

#include "tables.hpp"

namespace thetadim {

namespace {

constexpr std::array<std::string_view, kCaseTagCount> kTagNames = {
    "ZeroPath-P1", "ZeroPath-P2", "T1-P1", "T1-P2", "T1-P3", "T2-P1",  "T2-P2",  "T2-P3",
    "T3-P1",       "T3-P2",       "T3-P3", "T4-P1", "T4-P2", "T4-P3a", "T4-P3b",
};

void require_case(const ThetaParams& params, const TheoremCase& c) {
  if (dispatch_case(params) != c) {
    throw ThetaError("case " + std::string(to_string(c.tag)) + (c.swapped ? " (swapped)" : "") +
                     " does not govern " + to_string(params));
  }
}

// v in the caller's labelling -> the label the case tables use.
Vertex to_case_label(const ThetaParams& params, const TheoremCase& c, Vertex v) {
  if (v < 1 || v > params.order()) {
    throw ThetaError("vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(params.order()));
  }
  return c.swapped ? swap_isomorphism(params)(v) : v;
}

}  // namespace

std::string_view to_string(CaseTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<CaseTag> parse_case_tag(std::string_view text) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == text) return static_cast<CaseTag>(i);
  }
  return std::nullopt;
}

std::vector<CaseTag> all_case_tags() {
  std::vector<CaseTag> out;
  for (int i = 0; i < kCaseTagCount; ++i) out.push_back(static_cast<CaseTag>(i));
  return out;
}

TheoremCase dispatch_case(const ThetaParams& params) {
  require_valid(params);
  auto [p, q, r] = params;

  // An empty outer path takes precedence over every other case.
  if (p == 0 || r == 0) {
    const bool swapped = p == 0;
    const int outer = swapped ? r : p;
    return {outer == 1 ? CaseTag::ZeroPathP1 : CaseTag::ZeroPathP2, swapped};
  }

  // p = r takes precedence over p = q, which matters only for p = q = r.
  if (p == r) {
    const int d = q - r;
    if (d == 2 || d == 4) return {CaseTag::T4P1, false};
    if (d > 2) return {CaseTag::T4P2, false};
    if (d == 1) return {CaseTag::T4P3a, false};
    return {CaseTag::T4P3b, false};
  }

  // Name the longer outer path p.
  const bool swapped = r > p;
  if (swapped) std::swap(p, r);
  const int d = q - r;
  if (q > p) {
    if (d == 2) return {CaseTag::T1P1, swapped};
    return {p - r == 1 ? CaseTag::T1P2 : CaseTag::T1P3, swapped};
  }
  if (q == p) {
    if (d < 2) return {CaseTag::T2P1, swapped};
    return {d == 2 ? CaseTag::T2P2 : CaseTag::T2P3, swapped};
  }
  if (d < 2) return {CaseTag::T3P1, swapped};
  return {d == 2 ? CaseTag::T3P2 : CaseTag::T3P3, swapped};
}

ThetaParams case_params(const ThetaParams& params, const TheoremCase& c) {
  return c.swapped ? ThetaParams{params.r, params.q, params.p} : params;
}

ClosedFormResult closed_form_basis(const ThetaParams& params) {
  ClosedFormResult out;
  out.theorem_case = dispatch_case(params);
  const ThetaParams local = case_params(params, out.theorem_case);
  out.landmarks = detail::case_table(out.theorem_case.tag).landmarks(local);
  for (Vertex& w : out.landmarks) {
    if (w < 1 || w > params.order()) {
      throw TableError("landmark formula of " + std::string(to_string(out.theorem_case.tag)) +
                       " gives v" + std::to_string(w) + " for " + to_string(local));
    }
  }
  if (out.theorem_case.swapped) {
    // Formulas were evaluated in C(r,q,p); pull them back to C(p,q,r).
    const Relabeling back = swap_isomorphism(local);
    for (Vertex& w : out.landmarks) w = back(w);
  }
  out.basis = out.landmarks;
  std::sort(out.basis.begin(), out.basis.end());
  out.basis.erase(std::unique(out.basis.begin(), out.basis.end()), out.basis.end());
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

int dimension_formula(const ThetaParams& params) {
  const CaseTag tag = dispatch_case(params).tag;
  return tag == CaseTag::T4P1 || tag == CaseTag::T2P2 ? 3 : 2;
}

int dimension_by_lengths(const ThetaLengths& lengths) {
  std::array<int, 3> l{lengths.a, lengths.b, lengths.c};
  std::sort(l.begin(), l.end());
  const bool all_equal = l[0] == l[2];
  const bool two_plus_two = l[0] == l[1] && l[2] == l[0] + 2;
  return all_equal || two_plus_two ? 3 : 2;
}

std::vector<int> partition_cells(const ThetaParams& params, const TheoremCase& c, Vertex v) {
  require_case(params, c);
  const Vertex a = to_case_label(params, c, v);
  const ThetaParams local = case_params(params, c);
  const auto& cells = detail::case_table(c.tag).cells;
  std::vector<int> hits;
  for (std::size_t l = 0; l < cells.size(); ++l) {
    if (cells[l].lo(local) <= a && a <= cells[l].hi(local)) hits.push_back(static_cast<int>(l) + 1);
  }
  return hits;
}

int partition_index(const ThetaParams& params, const TheoremCase& c, Vertex v) {
  auto hits = partition_cells(params, c, v);
  if (hits.size() != 1) {
    throw TableError("partition of " + std::string(to_string(c.tag)) + " at " + to_string(params) +
                     " places v" + std::to_string(v) + " in " + std::to_string(hits.size()) +
                     " cells");
  }
  return hits.front();
}

std::vector<Distance> cell_formula(const ThetaParams& params, const TheoremCase& c, int cell,
                                   Vertex v) {
  require_case(params, c);
  const auto& cells = detail::case_table(c.tag).cells;
  if (cell < 1 || cell > static_cast<int>(cells.size())) {
    throw TableError(std::string(to_string(c.tag)) + " has no cell " + std::to_string(cell));
  }
  return cells[cell - 1].coords(case_params(params, c), to_case_label(params, c, v));
}

std::vector<Distance> formula_representation(const ThetaParams& params, const TheoremCase& c,
                                             Vertex v) {
  return cell_formula(params, c, partition_index(params, c, v), v);
}

std::vector<TableMismatch> check_table(const ThetaParams& params) {
  const ClosedFormResult cf = closed_form_basis(params);
  const TheoremCase& c = cf.theorem_case;
  const DistanceMatrix d = all_pairs(build_c(params));
  std::vector<TableMismatch> out;
  for (Vertex v = 1; v <= params.order(); ++v) {
    TableMismatch m;
    m.vertex = v;
    for (Vertex w : cf.landmarks) m.bfs.push_back(d.at(v, w));
    m.cells = partition_cells(params, c, v);
    if (!m.cells.empty()) m.formula = cell_formula(params, c, m.cells.front(), v);
    if (m.cells.size() != 1 || m.formula != m.bfs) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace thetadim
