// Partition tables V_l and representation formulas R(v_A | W) for every
// closed-form case. Known defects are kept as written (see
// docs/table-discrepancies.md); check_table measures them against BFS.
//
// Two stray symbols are read as follows:
//   T2-P3, cell 7: the stray index "j" is read as A.
//   T4-P3b, cell 7: the upper bound "p+q+m-..." is read as p+q+r-...

#include "tables.hpp"

#include <array>

namespace thetadim::detail {

namespace {

using P = const ThetaParams&;
using V = std::vector<Distance>;

int fl(int a, int b) { return floor_div(a, b); }
int ce(int a, int b) { return ceil_div(a, b); }

CaseTable zero_path_p1() {
  // r = 0, p = 1; W = {v1, v2}
  return {
      [](P) { return std::vector<Vertex>{1, 2}; },
      {
          {[](P t) { return t.p; }, [](P t) { return t.p; },
           [](P, int A) { return V{1 - A, 2 - A}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 1; },
           [](P, int A) { return V{A - 1, 2 - A}; }},
          {[](P t) { return t.p + 2; }, [](P t) { return t.p + ce(t.q, 2); },
           [](P, int A) { return V{A - 1, A - 2}; }},
          {[](P t) { return t.p + ce(t.q, 2) + 1; }, [](P t) { return t.p + ce(t.q, 2) + 1; },
           [](P t, int A) { return V{t.p + t.q + 1 - A, A - 2}; }},
          {[](P t) { return t.p + ce(t.q, 2) + 2; }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{t.p + t.q + 1 - A, t.p + t.q + 1 - A}; }},
      }};
}

CaseTable zero_path_p2() {
  // r = 0, p > 1; W = {v1, v(floor(p/2)+1)}
  auto h = [](P t) { return fl(t.p, 2); };
  return {
      [h](P t) { return std::vector<Vertex>{1, h(t) + 1}; },
      {
          {[](P) { return 1; }, [h](P t) { return h(t) + 1; },
           [h](P t, int A) { return V{A - 1, h(t) + 1 - A}; }},
          {[h](P t) { return h(t) + 2; }, [h](P t) { return h(t) + 2; },
           [h](P t, int A) { return V{A - 1, A - h(t) - 1}; }},
          {[h](P t) { return h(t) + 3; }, [](P t) { return t.p; },
           [h](P t, int A) { return V{t.p + 3 - A, A - h(t) - 1}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + fl(t.q, 2); },
           [h](P t, int A) { return V{A - t.p, A + h(t) - t.p}; }},
          {[](P t) { return t.p + ce(t.q, 2); }, [](P t) { return t.p + ce(t.q, 2); },
           [h](P t, int A) { return V{A - t.p, 2 * t.p + t.q - A - h(t)}; }},
          {[](P t) { return t.p + ce(t.q, 2) + 1; }, [](P t) { return t.p + t.q; },
           [h](P t, int A) { return V{t.p + t.q + 2 - A, 2 * t.p + t.q - A - h(t)}; }},
      }};
}

CaseTable t1_p1() {
  // q > p > r, q - r = 2; W = {v1, v(p+2)}
  return {
      [](P t) { return std::vector<Vertex>{1, t.p + 2}; },
      {
          {[](P) { return 1; }, [](P t) { return t.p - 1; },
           [](P, int A) { return V{A - 1, A + 1}; }},
          {[](P t) { return t.p; }, [](P t) { return t.p; },
           [](P t, int A) { return V{A - 1, t.p + t.q - (A + 1)}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 2; },
           [](P t, int A) { return V{A - t.p, t.p + 2 - A}; }},
          {[](P t) { return t.p + 3; }, [](P t) { return t.p + t.q - 1; },
           [](P t, int A) { return V{A - t.p, A - (t.p + 2)}; }},
          {[](P t) { return t.p + t.q; }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{2 * t.p + t.q - A, A - (t.p + 2)}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [](P t, int A) { return V{A + 1 - (t.p + t.q), A + 1 - (t.p + t.q)}; }},
      }};
}

CaseTable t1_p2() {
  // q > p > r, q - r > 2, p - r = 1; W = {v1, v(floor((p+r)/2)+1)}
  auto f = [](P t) { return fl(t.q - t.r, 2); };
  return {
      [](P t) { return std::vector<Vertex>{1, fl(t.p + t.r, 2) + 1}; },
      {
          {[](P) { return 1; }, [](P t) { return t.p; },
           [](P t, int A) { return V{A - 1, t.p - A}; }},
          {[](P t) { return t.p + 1; }, [f](P t) { return t.p + f(t); },
           [](P t, int A) { return V{A - t.p, A - 1}; }},
          {[f](P t) { return t.p + 1 + f(t); }, [f](P t) { return t.p + t.q - f(t); },
           [](P t, int A) { return V{A - t.p, t.p + t.q + 1 - A}; }},
          {[f](P t) { return t.p + t.q + 1 - f(t); }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{2 * t.p + t.q - A, t.p + t.q + 1 - A}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [](P t, int A) { return V{A + 1 - (t.p + t.q), t.p + t.q + t.r + 2 - A}; }},
      }};
}

// Shared by T1-P3 and T3-P3, whose tables coincide.
CaseTable split_outer_table() {
  // W = {v1, v(floor((p+r)/2)+1)}
  auto h = [](P t) { return fl(t.p + t.r, 2); };
  auto g = [](P t) { return fl(t.p - t.r, 2); };
  auto f = [](P t) { return fl(t.q - t.r, 2); };
  return {
      [h](P t) { return std::vector<Vertex>{1, h(t) + 1}; },
      {
          {[](P) { return 1; }, [h](P t) { return h(t) + 1; },
           [h](P t, int A) { return V{A - 1, h(t) + 1 - A}; }},
          {[h](P t) { return h(t) + 2; }, [g](P t) { return t.p + 1 - g(t); },
           [h](P t, int A) { return V{A - 1, A - h(t) - 1}; }},
          {[g](P t) { return t.p + 2 - g(t); }, [](P t) { return t.p; },
           [h](P t, int A) { return V{t.p + t.r + 3 - A, A - h(t) - 1}; }},
          {[](P t) { return t.p + 1; }, [f](P t) { return t.p + f(t); },
           [h](P t, int A) { return V{A - t.p, A + h(t) - t.p}; }},
          {[f](P t) { return t.p + 1 + f(t); }, [f](P t) { return t.p + t.q - f(t); },
           [h](P t, int A) { return V{A - t.p, 2 * t.p + t.q - h(t) - A}; }},
          {[f](P t) { return t.p + t.q + 1 - f(t); }, [](P t) { return t.p + t.q; },
           [h](P t, int A) { return V{t.p + t.q + t.r + 2 - A, 2 * t.p + t.q - h(t) - A}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [h](P t, int A) {
             return V{A + 1 - (t.p + t.q), 2 * t.p + t.q + t.r + 1 - h(t) - A};
           }},
      }};
}

CaseTable t2_p1() {
  // p = q, q - r < 2; W = {v1, vp}
  auto c = [](P t) { return ce(t.r - t.q, 2); };
  return {
      [](P t) { return std::vector<Vertex>{1, t.p}; },
      {
          {[](P) { return 1; }, [](P t) { return t.p; },
           [](P t, int A) { return V{A - 1, t.p - A}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{A - t.p, t.p + t.q + 1 - A}; }},
          {[](P t) { return t.p + t.q + 1; }, [c](P t) { return t.p + t.q + c(t); },
           [](P t, int A) { return V{A + 1 - (t.p + t.q), A - t.q}; }},
          {[c](P t) { return t.p + t.q + 1 + c(t); }, [c](P t) { return t.p + t.q + t.r - c(t); },
           [](P t, int A) { return V{A + 1 - (t.p + t.q), t.p + t.q + t.r + 2 - A}; }},
          {[c](P t) { return t.p + t.q + t.r + 1 - c(t); }, [](P t) { return t.p + t.q + t.r; },
           [](P t, int A) { return V{2 * t.p + t.q + t.r + 1 - A, t.p + t.q + t.r + 2 - A}; }},
      }};
}

CaseTable t2_p2() {
  // p = q, q - r = 2; W = {v1, v2, v(p+2)}
  return {
      [](P t) { return std::vector<Vertex>{1, 2, t.p + 2}; },
      {
          {[](P) { return 1; }, [](P) { return 1; },
           [](P, int A) { return V{A - 1, 2 - A, A + 1}; }},
          {[](P) { return 2; }, [](P t) { return t.p - 1; },
           [](P, int A) { return V{A - 1, A - 2, A + 1}; }},
          {[](P t) { return t.p; }, [](P t) { return t.p; },
           [](P, int A) { return V{A - 1, A - 2, A - 1}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 1; },
           [](P t, int A) { return V{A - t.p, A + 1 - t.p, t.p + 2 - A}; }},
          {[](P t) { return t.p + 2; }, [](P t) { return t.p + t.q - 1; },
           [](P t, int A) { return V{A - t.p, A + 1 - t.p, A - (t.p + 2)}; }},
          {[](P t) { return t.p + t.q; }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{A - t.p, A - (1 + t.p), A - (t.p + 2)}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [](P t, int A) {
             return V{A + 1 - (t.p + t.q), A + 2 - (t.p + t.q), A + 1 - (t.p + t.q)};
           }},
      }};
}

CaseTable t2_p3() {
  // p = q, q - r > 2; W = {v1, v(floor((p+r)/2)+1)}
  auto h = [](P t) { return fl(t.p + t.r, 2); };
  auto g = [](P t) { return fl(t.p - t.r, 2); };
  auto f = [](P t) { return fl(t.q - t.r, 2); };
  return {
      [h](P t) { return std::vector<Vertex>{1, h(t) + 1}; },
      {
          {[](P) { return 1; }, [h](P t) { return h(t) + 1; },
           [h](P t, int A) { return V{A - 1, 1 + h(t) - A}; }},
          {[h](P t) { return h(t) + 2; }, [g](P t) { return t.p + 1 - g(t); },
           [h](P t, int A) { return V{A - 1, A - (1 + h(t))}; }},
          {[g](P t) { return t.p + 2 - g(t); }, [](P t) { return t.p; },
           [h](P t, int A) { return V{t.p + t.r + 3 - A, A - (1 + h(t))}; }},
          {[](P t) { return t.p + 1; }, [g](P t) { return t.p + g(t); },
           [h](P t, int A) { return V{A - t.p, A + h(t) - t.p}; }},
          {[f](P t) { return t.p + 1 + f(t); }, [f](P t) { return t.p + t.q - f(t); },
           [h](P t, int A) { return V{A - t.p, 3 * t.p - (h(t) + A)}; }},
          {[f](P t) { return t.p + t.q + 1 - f(t); }, [](P t) { return t.p + t.q; },
           [h](P t, int A) { return V{t.p + t.q + t.r + 2 - A, 3 * t.p - (h(t) + A)}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [h](P t, int A) {
             return V{A + 1 - (t.p + t.q), 2 * t.p + t.q + t.r + 1 - (h(t) + A)};
           }},
      }};
}

CaseTable t3_p1() {
  // p > q, p > r, q - r < 2; W = {v1, v(floor((p+q)/2))}
  auto m = [](P t) { return fl(t.p + t.q, 2); };
  auto cpq = [](P t) { return ce(t.p - t.q, 2); };
  auto frq = [](P t) { return fl(t.r - t.q, 2); };
  auto crq = [](P t) { return ce(t.r - t.q, 2); };
  return {
      [m](P t) { return std::vector<Vertex>{1, m(t)}; },
      {
          {[](P) { return 1; }, [m](P t) { return m(t); },
           [m](P t, int A) { return V{A - 1, m(t) - A}; }},
          {[m](P t) { return m(t) + 1; }, [cpq](P t) { return t.p - cpq(t); },
           [m](P t, int A) { return V{A - 1, A - m(t)}; }},
          {[cpq](P t) { return t.p + 1 - cpq(t); }, [](P t) { return t.p; },
           [m](P t, int A) { return V{t.p + t.q + 1 - A, A - m(t)}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 1; },
           [m](P t, int A) { return V{A - t.p, m(t)}; }},
          {[](P t) { return t.p + 2; }, [](P t) { return t.p + t.q; },
           [m](P t, int A) { return V{A - t.p, 2 * t.p + t.q - m(t) - A}; }},
          {[](P t) { return t.p + t.q + 1; }, [frq](P t) { return t.p + t.q + 1 + frq(t); },
           [m](P t, int A) { return V{A + 1 - (t.p + t.q), A + m(t) - (t.p + t.q)}; }},
          {[frq](P t) { return t.p + t.q + 2 + frq(t); },
           [crq](P t) { return t.p + t.q + t.r - crq(t); },
           [m](P t, int A) {
             return V{A + 1 - (t.p + t.q), 2 * t.p + t.q + t.r + 2 - (A + m(t))};
           }},
          {[crq](P t) { return t.p + t.q + t.r + 1 - crq(t); }, [](P t) { return t.p + t.q + t.r; },
           [m](P t, int A) {
             return V{t.p + 2 * t.q + t.r + 1 - A, 2 * t.p + t.q + t.r + 2 - (A + m(t))};
           }},
      }};
}

CaseTable t3_p2() {
  // p > q, p > r, q - r = 2; W = {v1, v(p+2)}
  auto m = [](P t) { return fl(t.p + t.q, 2); };
  auto g = [](P t) { return fl(t.p - t.q, 2); };
  return {
      [](P t) { return std::vector<Vertex>{1, t.p + 2}; },
      {
          {[](P) { return 1; }, [m](P t) { return m(t) - 1; },
           [](P, int A) { return V{A - 1, A + 1}; }},
          {[m](P t) { return m(t); }, [g](P t) { return t.p - g(t); },
           [](P t, int A) { return V{A - 1, t.p + t.q - (A + 1)}; }},
          {[g](P t) { return t.p + 1 - g(t); }, [](P t) { return t.p; },
           [](P t, int A) { return V{t.p + t.q + 1 - A, t.p + t.q - (A + 1)}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 1; },
           [](P t, int A) { return V{A - t.p, t.p + 2 - A}; }},
          {[](P t) { return t.p + 2; }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{A - t.p, A - (t.p + 2)}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [](P t, int A) { return V{A + 1 - (t.p + t.q), A + 1 - (t.p + t.q)}; }},
      }};
}

CaseTable t4_p1() {
  // p = r, q - r in {2, 4}; W = {v1, v2, v(floor((q-r)/2)+p+1)}
  auto k = [](P t) { return fl(t.q - t.p, 2); };
  return {
      [](P t) { return std::vector<Vertex>{1, 2, fl(t.q - t.r, 2) + t.p + 1}; },
      {
          {[](P) { return 1; }, [](P) { return 1; },
           [k](P t, int A) { return V{A - 1, 2 - A, A + k(t)}; }},
          {[](P) { return 2; }, [](P t) { return t.p; },
           [k](P t, int A) { return V{A - 1, A - 2, A + k(t)}; }},
          {[](P t) { return t.p + 1; }, [k](P t) { return t.p + 1 + k(t); },
           [k](P t, int A) { return V{A - t.p, A + 1 - t.p, t.p + 1 + k(t) - A}; }},
          {[k](P t) { return t.p + 2 + k(t); }, [k](P t) { return t.p + t.q - 1 - k(t); },
           [k](P t, int A) { return V{A - t.p, A + 1 - t.p, A - (t.p + 1 + k(t))}; }},
          {[k](P t) { return t.p + t.q - k(t); }, [](P t) { return t.p + t.q; },
           [k](P t, int A) {
             return V{2 * t.p + t.q - A, 2 * t.p + t.q - 1 - A, A - (t.p + 1 + k(t))};
           }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r - 1; },
           [k](P t, int A) {
             return V{A + 1 - (t.p + t.q), A + 2 - (t.p + t.q), A + k(t) - (t.p + t.q)};
           }},
          {[](P t) { return t.p + t.q + t.r; }, [](P t) { return t.p + t.q + t.r; },
           [k](P t, int A) {
             return V{A + 1 - (t.p + t.q), A - (t.p + t.q), A + k(t) - (t.p + t.q)};
           }},
      }};
}

CaseTable t4_p2() {
  // p = r, q - r > 2, q - r != 4; W = {v1, v(p+2)}
  auto c = [](P t) { return ce(t.q - t.r, 2); };
  auto e = [](P t) { return ce(t.q - t.p - 2, 2); };
  return {
      [](P t) { return std::vector<Vertex>{1, t.p + 2}; },
      {
          {[](P) { return 1; }, [](P t) { return t.p; },
           [](P, int A) { return V{A - 1, A + 1}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 1; },
           [](P t, int A) { return V{A - t.p, t.p + 2 - A}; }},
          {[](P t) { return t.p + 2; }, [c](P t) { return t.p + t.q - c(t); },
           [](P t, int A) { return V{A - t.p, A - (t.p + 2)}; }},
          {[c](P t) { return t.p + t.q + 1 - c(t); }, [e](P t) { return 2 * t.p + 2 + e(t); },
           [](P t, int A) { return V{2 * t.p + t.q - A, A - (t.p + 2)}; }},
          {[e](P t) { return 2 * t.p + 3 + e(t); }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{2 * t.p + t.q - A, 2 * t.p + t.q + 2 - A}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [](P t, int A) { return V{A + 1 - (t.p + t.q), A + 1 - (t.p + t.q)}; }},
      }};
}

CaseTable t4_p3a() {
  // p = r, q - r = 1; W = {v1, v(floor((p+q)/2))}
  return {
      [](P t) { return std::vector<Vertex>{1, fl(t.p + t.q, 2)}; },
      {
          {[](P) { return 1; }, [](P t) { return t.p; },
           [](P t, int A) { return V{A - 1, t.p - A}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 1; },
           [](P t, int A) { return V{A - t.p, t.p}; }},
          {[](P t) { return t.p + 2; }, [](P t) { return t.p + t.q - 1; },
           [](P t, int A) { return V{A - t.p, t.p + t.q + 1 - A}; }},
          {[](P t) { return t.p + t.q; }, [](P t) { return t.p + t.q; },
           [](P t, int A) { return V{t.p, t.p + t.q + 1 - A}; }},
          {[](P t) { return t.p + t.q + 1; }, [](P t) { return t.p + t.q + t.r; },
           [](P t, int A) { return V{A + 1 - (t.p + t.q), t.p + t.q + t.r + 2 - A}; }},
      }};
}

CaseTable t4_p3b() {
  // p = r, q - r < 1; W = {v1, v(floor((p+q)/2))}
  auto m = [](P t) { return fl(t.p + t.q, 2); };
  auto g = [](P t) { return fl(t.p - t.q, 2); };
  auto c = [](P t) { return ce(t.r - t.q, 2); };
  return {
      [m](P t) { return std::vector<Vertex>{1, m(t)}; },
      {
          {[](P) { return 1; }, [m](P t) { return m(t); },
           [m](P t, int A) { return V{A - 1, m(t) - A}; }},
          {[m](P t) { return m(t) + 1; }, [g](P t) { return t.p - g(t); },
           [m](P t, int A) { return V{A - 1, A - m(t)}; }},
          {[g](P t) { return t.p + 1 - g(t); }, [](P t) { return t.p; },
           [m](P t, int A) { return V{t.p + t.q + 1 - A, A - m(t)}; }},
          {[](P t) { return t.p + 1; }, [](P t) { return t.p + 1; },
           [m](P t, int A) { return V{A - t.p, m(t)}; }},
          {[](P t) { return t.p + 2; }, [](P t) { return t.p + t.q; },
           [m](P t, int A) { return V{A - t.p, t.p + t.q + t.r + 1 - m(t) - A}; }},
          {[](P t) { return t.p + t.q + 1; }, [c](P t) { return t.p + t.q + 1 + c(t); },
           [m](P t, int A) { return V{A + 1 - (t.p + t.q), A + m(t) - (t.p + t.q)}; }},
          {[c](P t) { return t.p + t.q + 2 + c(t); }, [c](P t) { return t.p + t.q + t.r - c(t); },
           [m](P t, int A) {
             return V{A + 1 - (t.p + t.q), 2 * t.p + t.q + t.r + 2 - (A + m(t))};
           }},
          {[c](P t) { return t.p + t.q + t.r + 1 - c(t); }, [](P t) { return t.p + t.q + t.r; },
           [m](P t, int A) {
             return V{t.p + 2 * t.q + t.r + 1 - A, 2 * t.p + t.q + t.r + 2 - (A + m(t))};
           }},
      }};
}

std::array<CaseTable, kCaseTagCount> build_all() {
  return {zero_path_p1(), zero_path_p2(), t1_p1(),  t1_p2(),  split_outer_table(),
          t2_p1(),        t2_p2(),        t2_p3(),  t3_p1(),  t3_p2(),
          split_outer_table(), t4_p1(),   t4_p2(),  t4_p3a(), t4_p3b()};
}

}  // namespace

const CaseTable& case_table(CaseTag tag) {
  static const std::array<CaseTable, kCaseTagCount> tables = build_all();
  return tables[static_cast<std::size_t>(tag)];
}

}  // namespace thetadim::detail
