#include "feasflow/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "feasflow/generator.hpp"
#include "feasflow/io.hpp"
#include "feasflow/tree_routing.hpp"
#include "feasflow/verify.hpp"

namespace feasflow::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("cannot read '" + path + "'");
  return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("cannot write '" + path + "'");
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << content;
  else
    write_file(out_path, content);
}

void dump_trace(std::ostream& err, const RoutingTrace& trace) {
  for (const auto& e : trace.supply_events)
    err << "trace supply v=" << e.vertex << " before=" << e.supply_before
        << " moved=" << e.transferred << " after=" << e.supply_after << '\n';
  for (const auto& e : trace.demand_events)
    err << "trace demand v=" << e.vertex << " d=" << e.demand << '\n';
  for (std::size_t i = 0; i < trace.supply_increase.size(); ++i)
    if (trace.supply_increase[i] != 0 || trace.demand_increase[i] != 0)
      err << "trace arc " << i + 1 << " supply=" << trace.supply_increase[i]
          << " demand=" << trace.demand_increase[i]
          << " total=" << trace.supply_increase[i] + trace.demand_increase[i] << '\n';
}

struct SolveOptions {
  std::string net_path;
  std::string algorithm = "cap1";
  Vertex root = 1;
  std::string out_path;
  bool trace = false;
};

int do_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  const Network net = parse_network(read_file(opt.net_path));
  RoutingTrace trace;
  RoutingTrace* tp = opt.trace ? &trace : nullptr;
  const Flow flow = opt.algorithm == "cap2" ? feasible_flow_2b(net, opt.root, tp)
                                            : feasible_flow(net, opt.root, tp);
  emit(serialize_flow(net, flow), opt.out_path, out);
  if (opt.trace) dump_trace(err, trace);
  return 0;
}

int do_verify(const std::string& net_path, const std::string& flow_path, std::ostream& out) {
  const Network net = parse_network(read_file(net_path));
  const Flow flow = parse_flow(read_file(flow_path), net);
  const VerifyReport report = verify_flow(net, flow);
  for (Vertex v = 1; v <= net.vertex_count(); ++v)
    if (report.balances[static_cast<std::size_t>(v)] != 0)
      out << "balance " << v << ' ' << report.balances[static_cast<std::size_t>(v)] << '\n';
  for (const auto& violation : report.capacity_violations)
    out << "overcap " << violation.arc + 1 << ' ' << violation.flow << ' '
        << violation.capacity << '\n';
  for (const auto& violation : report.negativity_violations)
    out << "negative " << violation.arc + 1 << ' ' << violation.flow << '\n';
  out << (report.feasible ? "feasible" : "infeasible") << '\n';
  return report.feasible ? 0 : 1;
}

struct OracleOptions {
  std::string net_path;
  bool witness = false;
};

int do_oracle(const OracleOptions& opt, std::ostream& out) {
  const Network net = parse_network(read_file(opt.net_path));
  const OracleResult result = oracle_feasible(net);
  out << (result.feasible ? "feasible" : "infeasible") << '\n';
  if (opt.witness && result.feasible) out << serialize_flow(net, *result.witness);
  return result.feasible ? 0 : 1;
}

struct BenchOptions {
  std::vector<Vertex> sizes;
  std::uint64_t seed = 0;
};

// Tight instances, four arcs per vertex, sized supply: enough structure to
// exercise the whole pipeline without drowning the timing in generation.
GenSpec bench_spec(Vertex n, std::uint64_t seed) {
  GenSpec spec;
  spec.vertex_count = n;
  spec.extra_arcs = static_cast<std::size_t>(n) * 3;
  spec.total_supply = 1'000'000;
  spec.capacity_mode = CapacityMode::exact_b;
  spec.supply_spread = std::min<Vertex>(n, 100);
  spec.demand_spread = std::min<Vertex>(n, 100);
  spec.seed = seed;
  return spec;
}

int do_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  for (std::size_t i = 0; i < opt.sizes.size(); ++i) {
    const Network net = generate(bench_spec(opt.sizes[i], opt.seed + i));
    const auto start = std::chrono::steady_clock::now();
    const Flow flow = feasible_flow(net);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (!verify_flow(net, flow).feasible) {
      err << "bench: verification failed at n=" << opt.sizes[i] << '\n';
      return 1;
    }
    out << opt.sizes[i] << '\t' << net.arc_count() << '\t' << std::fixed
        << std::setprecision(6) << elapsed.count() << '\n';
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"feasible-flow toolkit for strongly connected networks"};
  app.name("feasflow");
  app.require_subcommand(1);

  int rc = 0;

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "compute a feasible flow and print the flow document");
  solve->add_option("net-file", solve_opt.net_path, "network document")->required();
  solve->add_option("--algorithm", solve_opt.algorithm,
                    "cap1: capacities >= B (default); cap2: classic two-pass, capacities >= 2B")
      ->check(CLI::IsMember({"cap1", "cap2"}));
  solve->add_option("--root", solve_opt.root, "root vertex (default 1)");
  solve->add_option("--out", solve_opt.out_path, "write the flow document to a file");
  solve->add_flag("--trace", solve_opt.trace, "dump routing events to standard error");
  solve->callback([&] { rc = do_solve(solve_opt, out, err); });

  std::string verify_net, verify_flow_path;
  auto* verify = app.add_subcommand("verify", "check a flow document against a network");
  verify->add_option("net-file", verify_net, "network document")->required();
  verify->add_option("flow-file", verify_flow_path, "flow document")->required();
  verify->callback([&] { rc = do_verify(verify_net, verify_flow_path, out); });

  GenSpec gen_spec;
  std::string gen_out;
  const std::map<std::string, CapacityMode> cap_modes{
      {"exact", CapacityMode::exact_b},
      {"atleast", CapacityMode::at_least_b},
      {"double", CapacityMode::at_least_2b},
      {"below", CapacityMode::below_b}};
  auto* gen = app.add_subcommand("gen", "generate a strongly connected instance");
  gen->add_option("--n", gen_spec.vertex_count, "vertex count")->required();
  gen->add_option("--extra", gen_spec.extra_arcs, "arcs beyond the spanning cycle");
  gen->add_option("--supply", gen_spec.total_supply, "total supply B")->required();
  gen->add_option("--caps", gen_spec.capacity_mode, "capacity mode (default exact)")
      ->transform(CLI::CheckedTransformer(cap_modes, CLI::ignore_case));
  gen->add_option("--spread-s", gen_spec.supply_spread, "supply vertices (default 1)");
  gen->add_option("--spread-d", gen_spec.demand_spread, "demand vertices (default 1)");
  gen->add_option("--seed", gen_spec.seed, "64-bit seed")->required();
  gen->add_option("--out", gen_out, "write the network document to a file");
  gen->callback([&] { emit(serialize_network(generate(gen_spec)), gen_out, out); });

  OracleOptions oracle_opt;
  auto* oracle = app.add_subcommand("oracle", "independent feasibility check (max-flow reduction)");
  oracle->add_option("net-file", oracle_opt.net_path, "network document")->required();
  oracle->add_flag("--witness", oracle_opt.witness, "print a witness flow when feasible");
  oracle->callback([&] { rc = do_oracle(oracle_opt, out); });

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "generate, solve and time instances");
  bench->add_option("--sizes", bench_opt.sizes, "comma-separated vertex counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--seed", bench_opt.seed, "64-bit seed");
  bench->callback([&] { rc = do_bench(bench_opt, out, err); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

}  // namespace feasflow::cli
