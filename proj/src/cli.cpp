#include "gaingraph/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaingraph/eigen.hpp"
#include "gaingraph/graph_file.hpp"
#include "gaingraph/subgraphs.hpp"

namespace gaingraph {

std::string report_to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json j;
  j["graph_summary"] = report.graph_summary;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.details) d[k] = v;
    j["checks"].push_back({{"check_id", c.check_id}, {"status", to_string(c.status)}, {"details", d}});
  }
  return j.dump(indent);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.graph_summary << '\n';
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.check_id.size());
  for (const auto& c : report.checks) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << c.check_id << std::setw(20)
       << to_string(c.status);
    for (const auto& [k, v] : c.details) os << ' ' << k << '=' << std::setprecision(12) << v;
    os << '\n';
  }
  return os.str();
}

namespace {

std::string fmt12(double x) {
  if (std::abs(x) < 1e-13) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += fmt12(xs[i]);
  }
  return s;
}

HermitianMatrix select_matrix(const GainGraph& g, const std::string& which) {
  if (which == "A") return adjacency(g);
  if (which == "L") return laplacian(g);
  if (which == "NA") return norm_adjacency(g);
  return norm_laplacian(g);
}

int cmd_spectrum(const std::string& file, const std::string& which, std::ostream& out) {
  const GainGraph g = parse_graph_file(file);
  out << join(eigenvalues(select_matrix(g, which)).values) << '\n';
  return kExitOk;
}

int cmd_balance(const std::string& file, std::ostream& out) {
  const GainGraph g = parse_graph_file(file);
  const BalanceResult b = is_balanced(g);
  if (b.balanced) {
    out << "BALANCED\n";
    out << "vertex zeta_re zeta_im\n";
    for (int v = 0; v < g.order(); ++v) {
      const Complex z = (*b.zeta)[v].value();
      out << v << ' ' << fmt12(z.real()) << ' ' << fmt12(z.imag()) << '\n';
    }
  } else {
    out << "UNBALANCED\n";
    out << "cycle:";
    for (Vertex v : b.cycle->vertices()) out << ' ' << v;
    const Complex z = cycle_gain(g, *b.cycle);
    out << "\ngain: " << fmt12(z.real()) << ' ' << fmt12(z.imag()) << '\n';
  }
  return kExitOk;
}

int cmd_charpoly(const std::string& file, const std::string& basis, bool oracle, std::ostream& out) {
  const GainGraph g = parse_graph_file(file);
  CharPolyCoeffs coeffs;
  CharPolyCoeffs reference;
  if (basis == "adjacency") {
    coeffs = adjacency_coeffs(g);
    if (oracle) reference = charpoly_oracle(adjacency(g));
  } else if (basis == "x1") {
    coeffs = norm_lap_c_coeffs(g);
    if (oracle) reference = charpoly_oracle(norm_laplacian(g));
  } else {
    coeffs = norm_lap_b_coeffs(g);
    if (oracle) reference = charpoly_oracle(norm_laplacian(g));
  }
  out << "coefficients: " << join(coeffs.coeffs) << '\n';
  if (oracle) {
    const CharPolyCoeffs comparable = basis == "x1" ? basis_convert(coeffs) : coeffs;
    if (basis == "x1") out << "x-basis: " << join(comparable.coeffs) << '\n';
    out << "oracle: " << join(reference.coeffs) << '\n';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", max_coeff_deviation(comparable, reference));
    out << "max_deviation: " << buf << '\n';
  }
  return kExitOk;
}

int cmd_interlace(const std::string& file, const std::vector<int>& edge, std::ostream& out) {
  const GainGraph g = parse_graph_file(file);
  const InterlaceResult r = interlace_check(g, edge.at(0), edge.at(1));
  out << "lambda: " << join(r.lambda.values) << '\n';
  out << "theta: " << join(r.theta.values) << '\n';
  out << (r.pass ? "PASS" : "FAIL") << '\n';
  return r.pass ? kExitOk : kExitTheoremFailure;
}

int cmd_verify(const std::string& file, bool json, std::ostream& out) {
  const GainGraph g = parse_graph_file(file);
  const VerificationReport report = theorem_suite(g);
  if (json) {
    out << report_to_json(report) << '\n';
  } else {
    out << report_to_text(report);
  }
  return report.any_failure() ? kExitTheoremFailure : kExitOk;
}

struct Tally {
  int pass = 0, fail = 0, not_met = 0;
};

int cmd_fuzz(const FuzzConfig& cfg, bool json, std::ostream& out) {
  validate(cfg);
  std::map<std::string, Tally> tally;
  for (const auto& id : registered_checks()) tally[id];
  Tally interlace;
  std::vector<int> failing_trials;

  for (int t = 0; t < cfg.trials; ++t) {
    const GainGraph g = random_gain_graph(cfg, t);
    SuiteOptions opts;
    opts.seed = cfg.seed * 1000003ULL + t;
    const VerificationReport report = theorem_suite(g, opts);
    bool failed = false;
    for (const auto& c : report.checks) {
      auto& s = tally[c.check_id];
      switch (c.status) {
        case CheckStatus::pass: ++s.pass; break;
        case CheckStatus::fail: ++s.fail; failed = true; break;
        case CheckStatus::hypothesis_not_met: ++s.not_met; break;
      }
    }
    if (g.size() > 0 && !g.has_isolated_vertex()) {
      const auto& e = g.edges()[static_cast<std::size_t>(t) % g.size()];
      if (interlace_check(g, e.u, e.v).pass) {
        ++interlace.pass;
      } else {
        ++interlace.fail;
        failed = true;
      }
    } else {
      ++interlace.not_met;
    }
    if (failed) failing_trials.push_back(t);
  }
  tally["edge_interlacing"] = interlace;

  int failures = 0;
  for (const auto& [id, s] : tally) failures += s.fail;
  if (json) {
    nlohmann::ordered_json j;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["gain_mode"] = to_string(cfg.gain_mode);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& [id, s] : tally) {
      j["checks"].push_back({{"check_id", id}, {"pass", s.pass}, {"fail", s.fail}, {"hypothesis_not_met", s.not_met}});
    }
    j["failing_trials"] = failing_trials;
    out << j.dump(2) << '\n';
  } else {
    out << "trials " << cfg.trials << " seed " << cfg.seed << " gain-mode " << to_string(cfg.gain_mode) << '\n';
    out << std::left << std::setw(40) << "check" << std::setw(8) << "pass" << std::setw(8) << "fail"
        << "hypothesis_not_met\n";
    for (const auto& [id, s] : tally) {
      out << std::left << std::setw(40) << id << std::setw(8) << s.pass << std::setw(8) << s.fail << s.not_met
          << '\n';
    }
    out << "total failures: " << failures << '\n';
  }
  return failures ? kExitTheoremFailure : kExitOk;
}

int cmd_conjecture(const FuzzConfig& cfg, double tol, std::ostream& out) {
  const ConjectureResult r = conjecture_search(cfg, tol);
  out << "examined " << r.examined << " unbalanced non-bipartite graphs (" << r.skipped_balanced
      << " balanced skipped, " << r.bipartite_checked << " bipartite checked)\n";
  if (r.counterexample) {
    out << "COUNTEREXAMPLE\n" << serialize_graph(*r.counterexample);
  } else {
    out << "no counterexample\n";
    if (r.nearest_miss) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6e", *r.nearest_miss);
      out << "nearest miss: " << buf << '\n' << serialize_graph(*r.nearest_graph);
    }
  }
  if (!r.bipartite_violations.empty()) {
    out << "BIPARTITE THEOREM VIOLATION\n" << serialize_graph(r.bipartite_violations.front());
    return kExitTheoremFailure;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized Laplacian spectra of complex unit gain graphs"};
  app.name(args.empty() ? "gaingraph" : args.front());
  app.require_subcommand(1);

  std::string file, matrix = "NL", basis = "x";
  bool oracle = false, json = false;
  std::vector<int> edge;

  auto* spectrum = app.add_subcommand("spectrum", "Sorted eigenvalues of a graph matrix");
  spectrum->add_option("file", file, "Graph file")->required();
  spectrum->add_option("--matrix", matrix, "A, L, NA or NL")
      ->check(CLI::IsMember({"A", "L", "NA", "NL"}));

  auto* balance = app.add_subcommand("balance", "Balance test with witness");
  balance->add_option("file", file, "Graph file")->required();

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial from subgraph formulas");
  charpoly->add_option("file", file, "Graph file")->required();
  charpoly->add_option("--basis", basis, "x (normalized Laplacian), x1 (powers of x-1), adjacency")
      ->check(CLI::IsMember({"x", "x1", "adjacency"}));
  charpoly->add_flag("--oracle", oracle, "Compare against Faddeev-LeVerrier");

  auto* interlace = app.add_subcommand("interlace", "Edge-deletion interlacing");
  interlace->add_option("file", file, "Graph file")->required();
  interlace->add_option("--edge", edge, "Endpoints u v")->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "Run every theorem check on a graph");
  verify->add_option("file", file, "Graph file")->required();
  verify->add_flag("--json", json, "Machine-readable output");

  FuzzConfig cfg;
  std::string mode = "uniform_circle";
  auto add_fuzz_options = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "Number of random graphs")->required();
    sub->add_option("--seed", cfg.seed, "Random seed")->required();
    sub->add_option("--n-min", cfg.n_min, "Minimum order");
    sub->add_option("--n-max", cfg.n_max, "Maximum order");
    sub->add_option("--p", cfg.edge_probability, "Edge probability");
    sub->add_option("--gain-mode", mode, "all_one, signs, fourth_roots, uniform_circle")
        ->check(CLI::IsMember({"all_one", "signs", "fourth_roots", "uniform_circle"}));
  };
  auto* fuzz = app.add_subcommand("fuzz", "Theorem checks on random connected gain graphs");
  add_fuzz_options(fuzz);
  fuzz->add_flag("--json", json, "Machine-readable output");

  double tol = 1e-7;
  bool bipartite = false;
  auto* conjecture = app.add_subcommand("conjecture", "Search for a spectral-radius conjecture counterexample");
  add_fuzz_options(conjecture);
  conjecture->add_option("--tol", tol, "Coincidence tolerance");
  conjecture->add_flag("--bipartite", bipartite, "Sample bipartite underlying graphs only");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(file, matrix, out);
    if (*balance) return cmd_balance(file, out);
    if (*charpoly) return cmd_charpoly(file, basis, oracle, out);
    if (*interlace) return cmd_interlace(file, edge, out);
    if (*verify) return cmd_verify(file, json, out);
    cfg.gain_mode = parse_gain_mode(mode);
    if (*fuzz) return cmd_fuzz(cfg, json, out);
    if (bipartite) cfg.family = GraphFamily::connected_bipartite;
    return cmd_conjecture(cfg, tol, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gaingraph
