#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetadim/closed_form.hpp"
#include "thetadim/resolver.hpp"
#include "thetadim/theta.hpp"

namespace thetadim {

// Outcome of checking one C(p,q,r) against the exhaustive oracle.
struct SweepRecord {
  ThetaParams params;
  int n = 0;
  TheoremCase theorem_case;
  std::vector<Vertex> basis;  // closed-form landmarks, formula order
  int formula_dim = 0;
  int oracle_dim = 0;
  std::vector<Vertex> oracle_witness;
  bool basis_ok = false;       // distinct, resolving, and formula_dim landmarks
  bool basis_minimal = false;  // no landmark can be dropped
  std::vector<TableMismatch> table_mismatches;
  std::chrono::microseconds elapsed{0};

  bool dimension_agrees() const { return formula_dim == oracle_dim; }
  bool agrees() const { return dimension_agrees() && basis_ok; }
};

struct SweepSummary {
  int records = 0;
  int agreements = 0;
  int dimension_mismatches = 0;
  int basis_failures = 0;
  int table_mismatches = 0;  // records whose table disagrees with BFS somewhere

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
  int max_n = 0;
  std::string filter = "all";
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

struct SweepFilter {
  std::optional<CaseTag> tag;
  std::optional<int> min_n;
  // Extra predicate; not reflected in the report's filter description.
  std::function<bool(const ThetaParams&)> predicate;

  bool accepts(const ThetaParams& params) const;
  std::string describe() const;
};

struct SweepOptions {
  OracleOptions oracle;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Every valid triple with p + q + r = n, ordered by (p, q, r).
std::vector<ThetaParams> valid_params_of_order(int n);

SweepRecord evaluate(const ThetaParams& params, const OracleOptions& oracle = {});

SweepSummary tally(const std::vector<SweepRecord>& records);

// One record per valid triple with n <= max_n passing the filter, ordered by
// (n, p, q, r). Records are computed concurrently and merged in order.
SweepReport sweep(int max_n, const SweepFilter& filter = {}, const SweepOptions& options = {});

enum class ReportFormat { Json, Csv };

std::optional<ReportFormat> parse_report_format(std::string_view text);

struct EmitOptions {
  // Wall-clock timings make reports non-reproducible; off by default.
  bool include_timing = false;
};

std::string emit_report(const SweepReport& report, ReportFormat format, const EmitOptions& options = {});

// Inverse of emit_report(..., ReportFormat::Json, ...).
SweepReport parse_report_json(std::string_view text);

}  // namespace thetadim
