#include "thetadim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace thetadim {

using json = nlohmann::ordered_json;

bool SweepFilter::accepts(const ThetaParams& params) const {
  if (min_n && params.order() < *min_n) return false;
  if (tag && dispatch_case(params).tag != *tag) return false;
  return !predicate || predicate(params);
}

std::string SweepFilter::describe() const {
  std::string out;
  if (tag) out += "case=" + std::string(to_string(*tag));
  if (min_n) out += std::string(out.empty() ? "" : ",") + "min_n=" + std::to_string(*min_n);
  if (predicate) out += std::string(out.empty() ? "" : ",") + "custom";
  return out.empty() ? "all" : out;
}

std::vector<ThetaParams> valid_params_of_order(int n) {
  std::vector<ThetaParams> out;
  for (int p = 0; p <= n; ++p) {
    for (int q = 2; p + q <= n; ++q) {
      const int r = n - p - q;
      if (!validate_params(p, q, r)) out.push_back({p, q, r});
    }
  }
  return out;
}

SweepRecord evaluate(const ThetaParams& params, const OracleOptions& oracle) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.params = params;
  rec.n = params.order();

  const DistanceMatrix d = all_pairs(build_c(params));
  const ClosedFormResult cf = closed_form_basis(params);
  rec.theorem_case = cf.theorem_case;
  rec.basis = cf.landmarks;
  rec.formula_dim = dimension_formula(params);

  const BasisResult truth = metric_dimension_oracle(d, oracle);
  rec.oracle_dim = truth.dimension;
  rec.oracle_witness = truth.witness;

  const bool distinct = cf.basis.size() == cf.landmarks.size();
  const bool resolving = is_resolving(d, cf.basis).resolving;
  rec.basis_ok = distinct && resolving && static_cast<int>(cf.basis.size()) == rec.formula_dim;
  rec.basis_minimal = resolving && is_minimal_resolving(d, cf.basis);
  rec.table_mismatches = check_table(params);

  rec.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return rec;
}

SweepSummary tally(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  for (const auto& rec : records) {
    ++s.records;
    s.agreements += rec.agrees();
    s.dimension_mismatches += !rec.dimension_agrees();
    s.basis_failures += !rec.basis_ok;
    s.table_mismatches += !rec.table_mismatches.empty();
  }
  return s;
}

SweepReport sweep(int max_n, const SweepFilter& filter, const SweepOptions& options) {
  if (max_n > options.oracle.max_order) {
    throw ResolverError("sweep bound " + std::to_string(max_n) + " exceeds the oracle cap of " +
                        std::to_string(options.oracle.max_order));
  }
  std::vector<ThetaParams> todo;
  for (int n = 4; n <= max_n; ++n) {
    for (const auto& params : valid_params_of_order(n)) {
      if (filter.accepts(params)) todo.push_back(params);
    }
  }

  SweepReport report;
  report.max_n = max_n;
  report.filter = filter.describe();
  report.records.resize(todo.size());

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < todo.size() && !failed; i = next++) {
      try {
        report.records[i] = evaluate(todo[i], options.oracle);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  report.summary = tally(report.records);
  return report;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

namespace {

json to_json(const TableMismatch& m) {
  return json{{"vertex", m.vertex}, {"cells", m.cells}, {"formula", m.formula}, {"bfs", m.bfs}};
}

json to_json(const SweepRecord& rec, const EmitOptions& options) {
  json out{
      {"n", rec.n},
      {"p", rec.params.p},
      {"q", rec.params.q},
      {"r", rec.params.r},
      {"case", to_string(rec.theorem_case.tag)},
      {"swapped", rec.theorem_case.swapped},
      {"formula_dim", rec.formula_dim},
      {"oracle_dim", rec.oracle_dim},
      {"oracle_witness", rec.oracle_witness},
      {"basis", rec.basis},
      {"basis_ok", rec.basis_ok},
      {"basis_minimal", rec.basis_minimal},
  };
  json mismatches = json::array();
  for (const auto& m : rec.table_mismatches) mismatches.push_back(to_json(m));
  out["table_mismatches"] = std::move(mismatches);
  if (options.include_timing) out["elapsed_us"] = rec.elapsed.count();
  return out;
}

json to_json(const SweepSummary& s) {
  return json{{"records", s.records},
              {"agreements", s.agreements},
              {"dimension_mismatches", s.dimension_mismatches},
              {"basis_failures", s.basis_failures},
              {"table_mismatches", s.table_mismatches}};
}

template <typename T>
std::string join(const std::vector<T>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string emit_csv(const SweepReport& report, const EmitOptions& options) {
  std::ostringstream out;
  out << "n,p,q,r,case,swapped,formula_dim,oracle_dim,oracle_witness,basis,basis_ok,"
         "basis_minimal,table_mismatches";
  if (options.include_timing) out << ",elapsed_us";
  out << '\n';
  for (const auto& rec : report.records) {
    out << rec.n << ',' << rec.params.p << ',' << rec.params.q << ',' << rec.params.r << ','
        << to_string(rec.theorem_case.tag) << ',' << (rec.theorem_case.swapped ? "true" : "false")
        << ',' << rec.formula_dim << ',' << rec.oracle_dim << ',' << join(rec.oracle_witness, ';')
        << ',' << join(rec.basis, ';') << ',' << (rec.basis_ok ? "true" : "false") << ','
        << (rec.basis_minimal ? "true" : "false") << ',' << rec.table_mismatches.size();
    if (options.include_timing) out << ',' << rec.elapsed.count();
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit_report(const SweepReport& report, ReportFormat format, const EmitOptions& options) {
  if (format == ReportFormat::Csv) return emit_csv(report, options);
  json records = json::array();
  for (const auto& rec : report.records) records.push_back(to_json(rec, options));
  json doc{
      {"schema", "thetadim-sweep"},
      {"version", 1},
      {"range", json{{"max_n", report.max_n}, {"filter", report.filter}}},
      {"summary", to_json(report.summary)},
      {"records", std::move(records)},
  };
  return doc.dump(2) + "\n";
}

SweepReport parse_report_json(std::string_view text) {
  const json doc = json::parse(text);
  if (doc.at("schema") != "thetadim-sweep" || doc.at("version") != 1) {
    throw std::runtime_error("not a version 1 thetadim sweep report");
  }
  SweepReport report;
  report.max_n = doc.at("range").at("max_n").get<int>();
  report.filter = doc.at("range").at("filter").get<std::string>();
  const json& s = doc.at("summary");
  report.summary = {s.at("records").get<int>(), s.at("agreements").get<int>(),
                    s.at("dimension_mismatches").get<int>(), s.at("basis_failures").get<int>(),
                    s.at("table_mismatches").get<int>()};
  for (const json& j : doc.at("records")) {
    SweepRecord rec;
    rec.n = j.at("n").get<int>();
    rec.params = {j.at("p").get<int>(), j.at("q").get<int>(), j.at("r").get<int>()};
    const auto tag = parse_case_tag(j.at("case").get<std::string>());
    if (!tag) throw std::runtime_error("unknown case tag " + j.at("case").dump());
    rec.theorem_case = {*tag, j.at("swapped").get<bool>()};
    rec.formula_dim = j.at("formula_dim").get<int>();
    rec.oracle_dim = j.at("oracle_dim").get<int>();
    rec.oracle_witness = j.at("oracle_witness").get<std::vector<Vertex>>();
    rec.basis = j.at("basis").get<std::vector<Vertex>>();
    rec.basis_ok = j.at("basis_ok").get<bool>();
    rec.basis_minimal = j.at("basis_minimal").get<bool>();
    for (const json& m : j.at("table_mismatches")) {
      rec.table_mismatches.push_back({m.at("vertex").get<Vertex>(),
                                      m.at("cells").get<std::vector<int>>(),
                                      m.at("formula").get<std::vector<Distance>>(),
                                      m.at("bfs").get<std::vector<Distance>>()});
    }
    if (j.contains("elapsed_us")) rec.elapsed = std::chrono::microseconds(j.at("elapsed_us").get<long long>());
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace thetadim
