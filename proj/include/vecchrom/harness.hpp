#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vecchrom/chromatic.hpp"
#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"
#include "vecchrom/graph_io.hpp"
#include "vecchrom/io.hpp"
#include "vecchrom/onehom.hpp"
#include "vecchrom/params.hpp"
#include "vecchrom/quantum.hpp"

namespace vecchrom {

inline constexpr const char* kVersion = "0.3.1";

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_solver = 2, exit_validation = 3 };

struct HarnessConfig {
  SolverConfig solver;
  std::size_t cap = 128;            // largest graph handed to the SDP solver
  std::size_t chromatic_cap = 64;   // largest graph for exact coloring
  double identity_tol = 1e-3;       // tolerance for identity checks
  double quantum_tol = 1e-8;        // structural tolerance for certificates
  std::uint64_t seed = 20260101;
};

inline Json config_to_json(const HarnessConfig& c) {
  return Json{{"tol", c.solver.tol},
              {"gap_tol", c.solver.gap_tol},
              {"max_iter", c.solver.max_iter},
              {"over_relaxation", c.solver.over_relaxation},
              {"penalty", c.solver.penalty},
              {"check_every", c.solver.check_every},
              {"cap", c.cap},
              {"chromatic_cap", c.chromatic_cap},
              {"identity_tol", c.identity_tol},
              {"quantum_tol", c.quantum_tol},
              {"seed", c.seed}};
}

struct RunRecord {
  Json body;
  int exit_code = exit_ok;
};

inline std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json record_header(const std::string& command, const HarnessConfig& cfg) {
  return Json{{"tool", "vecchrom"},
              {"version", kVersion},
              {"command", command},
              {"timestamp", utc_timestamp()},
              {"config", config_to_json(cfg)}};
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Name plus a hash of the canonical edge list, enough to tell inputs apart.
inline Json graph_descriptor(const Graph& g) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(format_graph(g))));
  return Json{{"name", g.label()}, {"n", g.order()}, {"m", g.edge_count()}, {"hash", hex}};
}

// "cycle:5", "complete:4", "path:3", "empty:4", "omega:4", "petersen",
// "random:n:p:seed"; anything else is read as an edge-list file.
inline Graph graph_from_spec(const std::string& spec) {
  auto parts = std::vector<std::string>{};
  for (std::size_t start = 0;;) {
    const auto pos = spec.find(':', start);
    parts.push_back(spec.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("bad number '" + s + "' in graph spec '" + spec + "'");
    return static_cast<std::size_t>(v);
  };
  if (parts[0] == "random" && parts.size() == 4) {
    const std::size_t n = number(parts[1]);
    const double p = std::stod(parts[2]);
    std::mt19937_64 rng(number(parts[3]));
    return random_graph(n, p, rng).relabeled(spec);
  }
  if (const auto family = parse_family(parts[0])) {
    if (*family == Family::petersen && parts.size() == 1) return generate(*family, 10);
    if (parts.size() == 2) return generate(*family, number(parts[1]));
    throw DomainError("graph spec '" + spec + "' needs exactly one size");
  }
  if (!std::filesystem::exists(spec)) throw DomainError("unknown graph spec or missing file '" + spec + "'");
  return read_graph_file(spec);
}

// Seeded pairs for the identity suites: orders uniform in [2, max_order],
// edge probability 1/2. Same-order pairs are what the union suite needs.
inline std::vector<std::pair<Graph, Graph>> random_pairs(std::size_t count, std::size_t max_order,
                                                         bool same_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(2, max_order);
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t a = order(rng);
    const std::size_t b = same_order ? a : order(rng);
    auto g = random_graph(a, 0.5, rng).relabeled("R" + std::to_string(i) + "a");
    auto h = random_graph(b, 0.5, rng).relabeled("R" + std::to_string(i) + "b");
    out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

enum class Which { theta_bar, chi_vec, chromatic, spectral, onehom };

inline std::optional<Which> parse_which(std::string_view s) {
  if (s == "theta-bar") return Which::theta_bar;
  if (s == "chi-vec") return Which::chi_vec;
  if (s == "chromatic") return Which::chromatic;
  if (s == "spectral") return Which::spectral;
  if (s == "onehom") return Which::onehom;
  return std::nullopt;
}

inline Json solve_to_json(const SolveRecord& s) {
  return Json{{"form", s.form == Form::dual ? "dual" : "primal"},
              {"objective", s.objective},
              {"dual_objective", s.dual_objective},
              {"gap", s.gap},
              {"iterations", s.iterations},
              {"status", to_string(s.status)}};
}

inline Json param_to_json(const ParamResult& r) {
  Json solves = Json::array();
  for (const auto& s : r.solves) solves.push_back(solve_to_json(s));
  return Json{{"value", r.value}, {"gap", r.gap}, {"method", to_string(r.method)}, {"solves", std::move(solves)}};
}

inline void require_sdp_cap(const Graph& g, const HarnessConfig& cfg) {
  if (g.order() > cfg.cap) {
    throw CapacityError("graph " + g.label() + " has " + std::to_string(g.order()) +
                        " vertices, above the SDP cap of " + std::to_string(cfg.cap));
  }
}

// Memoizes SDP parameter values by graph structure within one run.
class ParamCache {
 public:
  ParamCache(const HarnessConfig& cfg, Certificates certs = Certificates::dual_only)
      : cfg_(cfg), certs_(certs) {}

  const ParamResult& theta_bar(const Graph& g) { return get(g, false); }
  const ParamResult& chi_vec(const Graph& g) { return get(g, true); }

  // Every SDP run made through this cache, in order.
  const std::vector<SolveRecord>& solves() const noexcept { return solves_; }

 private:
  const ParamResult& get(const Graph& g, bool relaxed) {
    auto key = std::make_pair(relaxed, std::make_pair(g.order(), g.adjacency()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    require_sdp_cap(g, cfg_);
    try {
      auto r = relaxed ? vecchrom::chi_vec(g, cfg_.solver, certs_) : vecchrom::theta_bar(g, cfg_.solver, certs_);
      solves_.insert(solves_.end(), r.solves.begin(), r.solves.end());
      return memo_.emplace(std::move(key), std::move(r)).first->second;
    } catch (const SolverFailure& f) {
      solves_.insert(solves_.end(), f.partial().solves.begin(), f.partial().solves.end());
      throw;
    }
  }

  HarnessConfig cfg_;
  Certificates certs_;
  std::map<std::pair<bool, std::pair<std::size_t, std::vector<std::uint8_t>>>, ParamResult> memo_;
  std::vector<SolveRecord> solves_;
};

struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool equality = true;  // lhs = rhs, otherwise lhs <= rhs
  double residual = 0.0;
  bool pass = false;
};

inline IdentityCheck equal_check(std::string name, double lhs, double rhs, double tol) {
  const double res = std::abs(lhs - rhs);
  return {std::move(name), lhs, rhs, true, res, res <= tol};
}

inline IdentityCheck at_most_check(std::string name, double lhs, double rhs, double tol) {
  const double res = std::max(0.0, lhs - rhs);
  return {std::move(name), lhs, rhs, false, res, res <= tol};
}

inline Json check_to_json(const IdentityCheck& c) {
  return Json{{"name", c.name},
              {"lhs", c.lhs},
              {"rhs", c.rhs},
              {"relation", c.equality ? "=" : "<="},
              {"residual", c.residual},
              {"pass", c.pass}};
}

enum class Suite { sabidussi, hedetniemi, products, union_bound, chain };

inline std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "sabidussi") return Suite::sabidussi;
  if (s == "hedetniemi") return Suite::hedetniemi;
  if (s == "products") return Suite::products;
  if (s == "union") return Suite::union_bound;
  if (s == "chain") return Suite::chain;
  return std::nullopt;
}

inline std::size_t exact_chromatic(const Graph& g, const HarnessConfig& cfg) {
  return chromatic_number(g, g.order(), {cfg.chromatic_cap}).value;
}

// Runs one identity suite on (g, h). Products are checked against the
// SDP cap before any solve so capacity errors surface early.
inline std::vector<IdentityCheck> evaluate_suite(const Graph& g, const Graph& h, Suite suite,
                                                 const HarnessConfig& cfg, ParamCache& cache) {
  const double tol = cfg.identity_tol;
  std::vector<IdentityCheck> out;
  auto built = [&](ProductKind kind) {
    const std::size_t size = g.order() * h.order();
    if (size > cfg.cap) {
      throw CapacityError(std::string(to_string(kind)) + " product of " + g.label() + " and " + h.label() +
                          " has " + std::to_string(size) + " vertices, above the SDP cap of " +
                          std::to_string(cfg.cap));
    }
    return product(kind, g, h);
  };
  switch (suite) {
    case Suite::sabidussi: {
      const Graph gh = built(ProductKind::cartesian);
      if (gh.order() > cfg.chromatic_cap) {
        throw CapacityError("cartesian product has " + std::to_string(gh.order()) +
                            " vertices, above the chromatic cap of " + std::to_string(cfg.chromatic_cap));
      }
      out.push_back(equal_check("theta_bar(G [] H) = max", cache.theta_bar(gh).value,
                                std::max(cache.theta_bar(g).value, cache.theta_bar(h).value), tol));
      out.push_back(equal_check("chi_vec(G [] H) = max", cache.chi_vec(gh).value,
                                std::max(cache.chi_vec(g).value, cache.chi_vec(h).value), tol));
      const double chi = static_cast<double>(exact_chromatic(gh, cfg));
      const double chi_max = static_cast<double>(std::max(exact_chromatic(g, cfg), exact_chromatic(h, cfg)));
      out.push_back(equal_check("chi(G [] H) = max", chi, chi_max, 0.0));
      break;
    }
    case Suite::hedetniemi: {
      const Graph gh = built(ProductKind::categorical);
      out.push_back(equal_check("theta_bar(G x H) = min", cache.theta_bar(gh).value,
                                std::min(cache.theta_bar(g).value, cache.theta_bar(h).value), tol));
      break;
    }
    case Suite::products: {
      const double rhs = cache.theta_bar(g).value * cache.theta_bar(h).value;
      const Graph strong = built(ProductKind::strong);
      out.push_back(equal_check("theta_bar(G strong H) = product", cache.theta_bar(strong).value, rhs, tol));
      const Graph disj = built(ProductKind::disjunctive);
      out.push_back(equal_check("theta_bar(G * H) = product", cache.theta_bar(disj).value, rhs, tol));
      break;
    }
    case Suite::union_bound: {
      const Graph u = graph_union(g, h);
      require_sdp_cap(u, cfg);
      out.push_back(at_most_check("theta_bar(G u H) <= product", cache.theta_bar(u).value,
                                  cache.theta_bar(g).value * cache.theta_bar(h).value, tol));
      break;
    }
    case Suite::chain: {
      // The chain tolerance is the SDP one: both sides come from converged solves.
      for (const Graph* x : {&g, &h}) {
        out.push_back(at_most_check("chi_vec(" + x->label() + ") <= theta_bar", cache.chi_vec(*x).value,
                                    cache.theta_bar(*x).value, 1e-4));
        if (&g == &h) break;
      }
      break;
    }
  }
  return out;
}

namespace detail {

inline Json error_json(const std::exception& e, std::string_view kind) {
  return Json{{"type", kind}, {"message", e.what()}};
}

// Runs `body`, mapping failures to the exit-code contract.
template <typename F>
RunRecord guarded(Json record, F&& body) {
  RunRecord r{std::move(record), exit_ok};
  try {
    r.exit_code = body(r.body);
  } catch (const SolverFailure& e) {
    r.body["error"] = error_json(e, "solver_failure");
    r.body["partial"] = param_to_json(e.partial());
    r.exit_code = exit_solver;
  } catch (const NumericError& e) {
    r.body["error"] = error_json(e, "numeric");
    r.exit_code = exit_solver;
  } catch (const ParseError& e) {
    r.body["error"] = error_json(e, "parse");
    r.exit_code = exit_validation;
  } catch (const ValidationError& e) {
    r.body["error"] = error_json(e, "validation");
    r.exit_code = exit_validation;
  } catch (const RangeError& e) {
    r.body["error"] = error_json(e, "range");
    r.exit_code = exit_validation;
  } catch (const CapacityError& e) {
    r.body["error"] = error_json(e, "capacity");
    r.exit_code = exit_usage;
  } catch (const Error& e) {
    r.body["error"] = error_json(e, "domain");
    r.exit_code = exit_usage;
  }
  return r;
}

inline Json onehom_to_json(const OneHomReport& rep) {
  Json j{{"is_one_homogeneous", rep.is_one_homogeneous}};
  if (rep.is_one_homogeneous) {
    j["minimal_polynomial_degree"] = rep.minimal_polynomial_degree;
    Json consts = Json::array();
    for (const auto& c : rep.constants) consts.push_back({{"k", c.k}, {"b", c.b.str()}, {"c", c.c.str()}});
    j["constants"] = std::move(consts);
  }
  if (rep.failing_witness) {
    const auto& w = *rep.failing_witness;
    j["witness"] = {{"k", w.k},
                    {"kind", w.kind == HomogeneityWitness::Kind::closed_walks ? "closed_walks" : "edge_walks"},
                    {"u", w.u},
                    {"v", w.v}};
  }
  return j;
}

}  // namespace detail

inline RunRecord cmd_param(const Graph& g, Which which, const HarnessConfig& cfg) {
  Json head = record_header("param", cfg);
  head["graph"] = graph_descriptor(g);
  return detail::guarded(std::move(head), [&](Json& rec) {
    switch (which) {
      case Which::theta_bar:
      case Which::chi_vec: {
        require_sdp_cap(g, cfg);
        rec["param"] = which == Which::theta_bar ? "theta-bar" : "chi-vec";
        const auto r = which == Which::theta_bar ? theta_bar(g, cfg.solver, Certificates::primal_and_dual)
                                                 : chi_vec(g, cfg.solver, Certificates::primal_and_dual);
        rec["result"] = param_to_json(r);
        break;
      }
      case Which::chromatic: {
        rec["param"] = "chromatic";
        const auto r = chromatic_number(g, g.order(), {cfg.chromatic_cap});
        rec["result"] = {{"value", r.value}, {"method", "exact"}, {"coloring", r.coloring}};
        break;
      }
      case Which::spectral: {
        rec["param"] = "spectral";
        const auto r = spectral_vector_chromatic(g);
        rec["result"] = {{"value", r.value}, {"method", to_string(r.method)},
                         {"lower_bound", spectral_lower_bound(g)}};
        break;
      }
      case Which::onehom:
        rec["param"] = "onehom";
        rec["result"] = detail::onehom_to_json(one_homogeneous_check(g));
        break;
    }
    return int(exit_ok);
  });
}

inline RunRecord cmd_verify_identities(const Graph& g, const Graph& h, Suite suite, const HarnessConfig& cfg) {
  Json head = record_header("verify", cfg);
  head["graphs"] = {graph_descriptor(g), graph_descriptor(h)};
  return detail::guarded(std::move(head), [&](Json& rec) {
    ParamCache cache(cfg);
    const auto checks = evaluate_suite(g, h, suite, cfg, cache);
    Json arr = Json::array();
    bool pass = true;
    for (const auto& c : checks) {
      arr.push_back(check_to_json(c));
      pass = pass && c.pass;
    }
    Json solves = Json::array();
    for (const auto& s : cache.solves()) solves.push_back(solve_to_json(s));
    rec["checks"] = std::move(arr);
    rec["solves"] = std::move(solves);
    rec["pass"] = pass;
    return int(pass ? exit_ok : exit_validation);
  });
}

inline RunRecord cmd_qverify(const std::filesystem::path& path, const HarnessConfig& cfg) {
  Json head = record_header("qverify", cfg);
  head["certificate"] = path.string();
  return detail::guarded(std::move(head), [&](Json& rec) {
    const auto q = read_certificate_file(path);
    q.validate_shape();
    rec["graph"] = graph_descriptor(q.source);
    rec["d"] = q.d;
    rec["n_colors"] = q.target.order();
    const auto r = verify_quantum_hom(q, cfg.quantum_tol);
    rec["pass"] = r.pass;
    rec["residuals"] = {{"hermitian", r.hermitian},
                        {"idempotent", r.idempotent},
                        {"sum_to_identity", r.sum_to_identity},
                        {"orthogonality", r.orthogonality},
                        {"adjacency", r.adjacency}};
    if (r.failed) {
      rec["failure"] = {{"condition", to_string(*r.failed)},
                        {"vertex", r.vertex},
                        {"other_vertex", r.other_vertex},
                        {"part", r.part},
                        {"other_part", r.other_part}};
    }
    return int(r.pass ? exit_ok : exit_validation);
  });
}

// Summary table over several graphs: both SDP values, the spectral value
// where it applies, exact chi within the cap, and 1-homogeneity.
inline RunRecord cmd_report(const std::vector<Graph>& graphs, const HarnessConfig& cfg) {
  Json head = record_header("report", cfg);
  return detail::guarded(std::move(head), [&](Json& rec) {
    ParamCache cache(cfg);
    Json rows = Json::array();
    for (const auto& g : graphs) {
      Json row{{"graph", graph_descriptor(g)}};
      if (g.order() <= cfg.cap) {
        row["theta_bar"] = param_to_json(cache.theta_bar(g));
        row["chi_vec"] = param_to_json(cache.chi_vec(g));
      }
      const auto hom = one_homogeneous_check(remove_isolated(g).graph);
      row["one_homogeneous"] = hom.is_one_homogeneous;
      if (g.has_edges() && (hom.is_one_homogeneous || is_bipartite(g).bipartite)) {
        row["spectral"] = param_to_json(spectral_vector_chromatic(g));
      }
      if (g.order() <= cfg.chromatic_cap) row["chromatic"] = exact_chromatic(g, cfg);
      rows.push_back(std::move(row));
    }
    rec["rows"] = std::move(rows);
    return int(exit_ok);
  });
}

}  // namespace vecchrom
