// vecchrom command-line driver: parameter values, identity suites, quantum
// certificate checks and summary reports, all as JSON records.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vecchrom/vecchrom.hpp"

namespace {

using namespace vecchrom;

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << j.dump(2) << "\n";
}

int usage(const std::string& msg) {
  std::cerr << "vecchrom: " << msg << "\n";
  return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vector and quantum chromatic numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  HarnessConfig cfg;
  std::string out;
  app.add_option("--tol", cfg.solver.tol, "SDP feasibility tolerance")->check(CLI::PositiveNumber);
  app.add_option("--gap-tol", cfg.solver.gap_tol, "SDP duality gap tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", cfg.solver.max_iter, "SDP iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.cap, "largest vertex count for the SDP solver");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for random suite pairs");

  std::string which, graph_a, graph_b, suite_name, cert_path;
  std::vector<std::string> report_graphs;
  std::size_t pairs = 0, max_order = 8, colors = 0;

  auto* param = app.add_subcommand("param", "compute one parameter");
  param->add_option("which", which, "theta-bar | chi-vec | chromatic | spectral | onehom")->required();
  param->add_option("graph", graph_a, "graph spec or edge-list file")->required();

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", suite_name, "sabidussi | hedetniemi | products | union | chain")->required();
  verify->add_option("G", graph_a, "first graph");
  verify->add_option("H", graph_b, "second graph");
  verify->add_option("--pairs", pairs, "number of seeded random pairs instead of G, H");
  verify->add_option("--max-order", max_order, "largest random graph order")->check(CLI::Range(2, 16));

  auto* qverify = app.add_subcommand("qverify", "verify a quantum coloring certificate");
  qverify->add_option("certificate", cert_path, "certificate JSON file")->required();
  qverify->add_option("--qtol", cfg.quantum_tol, "structural tolerance")->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "summary of parameters for several graphs");
  report->add_option("graphs", report_graphs, "graph specs")->required();

  auto* gen = app.add_subcommand("generate", "write a graph as an edge list");
  gen->add_option("graph", graph_a, "graph spec")->required();

  auto* qcert = app.add_subcommand("qcert", "write a quantum coloring certificate");
  std::string qkind;
  qcert->add_option("kind", qkind, "classical | sabidussi")->required();
  qcert->add_option("G", graph_a, "graph")->required();
  qcert->add_option("H", graph_b, "second graph (sabidussi)");
  qcert->add_option("--colors", colors, "number of colors (default: chromatic number)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    cfg.solver.validate();
    if (param->parsed()) {
      const auto w = parse_which(which);
      if (!w) return usage("unknown parameter '" + which + "'");
      const auto rec = cmd_param(graph_from_spec(graph_a), *w, cfg);
      emit(rec.body, out);
      return rec.exit_code;
    }
    if (verify->parsed()) {
      const auto suite = parse_suite(suite_name);
      if (!suite) return usage("unknown suite '" + suite_name + "'");
      if (pairs == 0) {
        if (graph_a.empty()) return usage("verify needs G (and H) or --pairs");
        if (graph_b.empty() && *suite != Suite::chain) return usage("this suite needs two graphs");
        const Graph g = graph_from_spec(graph_a);
        const Graph h = graph_b.empty() ? g : graph_from_spec(graph_b);
        const auto rec = cmd_verify_identities(g, h, *suite, cfg);
        emit(rec.body, out);
        return rec.exit_code;
      }
      Json runs = Json::array();
      int code = exit_ok;
      for (const auto& [g, h] : random_pairs(pairs, max_order, *suite == Suite::union_bound, cfg.seed)) {
        auto rec = cmd_verify_identities(g, h, *suite, cfg);
        code = std::max(code, rec.exit_code);
        runs.push_back(std::move(rec.body));
      }
      Json all = record_header("verify", cfg);
      all["suite"] = suite_name;
      all["runs"] = std::move(runs);
      emit(all, out);
      return code;
    }
    if (qverify->parsed()) {
      const auto rec = cmd_qverify(cert_path, cfg);
      emit(rec.body, out);
      return rec.exit_code;
    }
    if (report->parsed()) {
      std::vector<Graph> gs;
      for (const auto& s : report_graphs) gs.push_back(graph_from_spec(s));
      const auto rec = cmd_report(gs, cfg);
      emit(rec.body, out);
      return rec.exit_code;
    }
    if (gen->parsed()) {
      const Graph g = graph_from_spec(graph_a);
      if (out.empty() || out == "-") std::cout << format_graph(g);
      else write_graph_file(g, out);
      return exit_ok;
    }
    if (qcert->parsed()) {
      auto embed = [&](const Graph& g, std::size_t n) {
        const auto chi = chromatic_number(g, g.order(), {cfg.chromatic_cap});
        if (n == 0) n = chi.value;
        if (chi.value > n) throw DomainError(g.label() + " has no proper " + std::to_string(n) + "-coloring");
        return classical_embedding(g, generate(Family::complete, n), chi.coloring);
      };
      QuantumHomomorphism q;
      if (qkind == "classical") {
        q = embed(graph_from_spec(graph_a), colors);
      } else if (qkind == "sabidussi") {
        if (graph_b.empty()) return usage("sabidussi needs two graphs");
        const Graph g = graph_from_spec(graph_a), h = graph_from_spec(graph_b);
        std::size_t n = colors;
        if (n == 0) n = std::max(chromatic_number(g, g.order(), {cfg.chromatic_cap}).value,
                                 chromatic_number(h, h.order(), {cfg.chromatic_cap}).value);
        q = quantum_sabidussi(embed(g, n), embed(h, n));
      } else {
        return usage("unknown certificate kind '" + qkind + "'");
      }
      if (out.empty() || out == "-") std::cout << certificate_to_json(q).dump() << "\n";
      else write_certificate_file(q, out);
      return exit_ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "vecchrom: " << e.what() << "\n";
    return exit_validation;
  } catch (const ValidationError& e) {
    std::cerr << "vecchrom: " << e.what() << "\n";
    return exit_validation;
  } catch (const RangeError& e) {
    std::cerr << "vecchrom: " << e.what() << "\n";
    return exit_validation;
  } catch (const Error& e) {
    return usage(e.what());
  }
  return exit_usage;
}
