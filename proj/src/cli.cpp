#include "thetadim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "thetadim/closed_form.hpp"
#include "thetadim/network.hpp"
#include "thetadim/resolver.hpp"
#include "thetadim/sweep.hpp"
#include "thetadim/theta.hpp"

namespace thetadim {

namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct Triple {
  int p = 0, q = 0, r = 0;
  ThetaParams params() const { return {p, q, r}; }
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("p", t.p, "first outer path length")->required();
  cmd->add_option("q", t.q, "middle path length, hubs included")->required();
  cmd->add_option("r", t.r, "second outer path length")->required();
}

void print_case(std::ostream& out, const TheoremCase& c) {
  out << "case " << to_string(c.tag) << '\n' << "swapped " << yes_no(c.swapped) << '\n';
}

int cmd_build(const Triple& t, bool as_network, std::ostream& out) {
  const ThetaParams params = t.params();
  const Graph g = build_c(params);
  if (as_network) {
    NetworkSpec spec;
    for (Vertex v = 1; v <= g.order(); ++v) spec.nodes.push_back("v" + std::to_string(v));
    for (const auto& [u, v] : g.edges()) spec.links.emplace_back(spec.nodes[u - 1], spec.nodes[v - 1]);
    out << "# C" << to_string(params) << '\n' << format_network(spec);
    return kExitOk;
  }
  const ThetaLengths l = to_theta_lengths(params);
  out << "# C" << to_string(params) << " theta " << l.a << ',' << l.b << ',' << l.c << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return kExitOk;
}

int cmd_dim(const Triple& t, bool oracle, std::ostream& out) {
  const ThetaParams params = t.params();
  const int dim = dimension_formula(params);
  out << "dimension " << dim << '\n';
  print_case(out, dispatch_case(params));
  if (oracle) {
    const BasisResult truth = metric_dimension_oracle(build_c(params));
    out << "oracle " << truth.dimension << '\n'
        << "witness " << join(truth.witness) << '\n'
        << "agrees " << yes_no(truth.dimension == dim) << '\n';
  }
  return kExitOk;
}

int cmd_basis(const Triple& t, std::ostream& out) {
  const ThetaParams params = t.params();
  const ClosedFormResult cf = closed_form_basis(params);
  print_case(out, cf.theorem_case);
  out << "landmarks " << join(cf.landmarks) << '\n'
      << "basis " << join(cf.basis) << '\n'
      << "dimension " << cf.dimension << '\n'
      << "resolving " << yes_no(is_resolving(build_c(params), cf.basis).resolving) << '\n';
  return kExitOk;
}

int cmd_check(const Triple& t, const std::vector<Vertex>& set, std::ostream& out) {
  const DistanceMatrix d = all_pairs(build_c(t.params()));
  const ResolveCheck check = is_resolving(d, set);
  out << "resolving " << yes_no(check.resolving) << '\n';
  if (!check.resolving) {
    out << "unresolved " << check.unresolved->first << ' ' << check.unresolved->second << '\n';
    return kExitDomain;
  }
  out << "minimal " << yes_no(is_minimal_resolving(d, set)) << '\n';
  return kExitOk;
}

int cmd_table(const Triple& t, std::ostream& out) {
  const ThetaParams params = t.params();
  const ClosedFormResult cf = closed_form_basis(params);
  const auto mismatches = check_table(params);
  const DistanceMatrix d = all_pairs(build_c(params));
  print_case(out, cf.theorem_case);
  out << "landmarks " << join(cf.landmarks) << '\n';
  for (Vertex v = 1; v <= params.order(); ++v) {
    auto bad = std::find_if(mismatches.begin(), mismatches.end(),
                            [v](const TableMismatch& m) { return m.vertex == v; });
    std::vector<Distance> bfs;
    for (Vertex w : cf.landmarks) bfs.push_back(d.at(v, w));
    const auto cells = partition_cells(params, cf.theorem_case, v);
    out << "v" << v << " cell " << (cells.empty() ? "-" : join(cells)) << " bfs " << join(bfs);
    if (bad != mismatches.end()) {
      out << " formula " << (bad->formula.empty() ? "-" : join(bad->formula)) << " MISMATCH";
    }
    out << '\n';
  }
  out << "mismatches " << mismatches.size() << '\n';
  return kExitOk;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::FileError::Missing(path);
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric dimension and landmark bases of theta graphs", "thetadim"};
  app.require_subcommand(1);

  Triple t;

  auto* build = app.add_subcommand("build", "print the edge list of C(p,q,r)");
  add_triple(build, t);
  bool as_network = false;
  build->add_flag("--network", as_network, "emit the network file format instead");

  auto* dim = app.add_subcommand("dim", "metric dimension by closed form");
  add_triple(dim, t);
  bool with_oracle = false;
  dim->add_flag("--oracle", with_oracle, "also run the exhaustive oracle");

  auto* basis = app.add_subcommand("basis", "closed-form metric basis");
  add_triple(basis, t);

  auto* check = app.add_subcommand("check", "test whether a vertex set resolves C(p,q,r)");
  add_triple(check, t);
  std::vector<Vertex> set;
  check->add_option("--set", set, "comma-separated vertices")->required()->delimiter(',');

  auto* table = app.add_subcommand("table", "compare the coordinate table with BFS");
  add_triple(table, t);

  auto* sw = app.add_subcommand("sweep", "verify every C(p,q,r) up to an order bound");
  int max_n = 0;
  std::string format = "json";
  std::string case_name;
  int min_n = 0;
  unsigned threads = 0;
  bool timing = false;
  std::string output;
  sw->add_option("--max-n", max_n, "largest order p+q+r")->required();
  sw->add_option("--min-n", min_n, "smallest order p+q+r");
  sw->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sw->add_option("--case", case_name, "restrict to one case tag");
  sw->add_option("--threads", threads, "worker threads, 0 for all cores");
  sw->add_flag("--timing", timing, "include per-record timings");
  sw->add_option("-o,--output", output, "write the report to a file");

  auto* lm = app.add_subcommand("landmarks", "assign landmarks to a network file");
  std::string network_path;
  bool force_oracle = false;
  int max_order = OracleOptions{}.max_order;
  lm->add_option("file", network_path, "network file, - for stdin")->required();
  lm->add_flag("--oracle", force_oracle, "skip the closed form");
  lm->add_option("--max-order", max_order, "oracle size cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(t, as_network, out);
    if (*dim) return cmd_dim(t, with_oracle, out);
    if (*basis) return cmd_basis(t, out);
    if (*check) return cmd_check(t, set, out);
    if (*table) return cmd_table(t, out);
    if (*sw) {
      SweepFilter filter;
      if (!case_name.empty()) {
        filter.tag = parse_case_tag(case_name);
        if (!filter.tag) {
          err << "error: unknown case tag '" << case_name << "'\n";
          return kExitUsage;
        }
      }
      if (min_n > 0) filter.min_n = min_n;
      SweepOptions options;
      options.threads = threads;
      const SweepReport report = sweep(max_n, filter, options);
      const std::string text =
          emit_report(report, *parse_report_format(format), EmitOptions{timing});
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file || !(file << text)) {
          err << "error: cannot write " << output << '\n';
          return kExitUsage;
        }
      }
      return kExitOk;
    }
    if (*lm) {
      const NetworkSpec spec = parse_network(read_input(network_path));
      LandmarkOptions options;
      options.force_oracle = force_oracle;
      options.oracle.max_order = max_order;
      out << format_landmarks(assign_landmarks(spec, options));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << network_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // ThetaError, ResolverError and GraphError
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NetworkError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const TableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace thetadim
