#include "gaingraph/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gaingraph/matrix.hpp"

namespace gaingraph {

// ---------------------------------------------------------------- interlacing

Spectrum padded_norm_lap_spectrum(const GainGraph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  std::vector<double> values(g.order() - keep.size(), 0.0);
  if (!keep.empty()) {
    const Spectrum core = eigenvalues(norm_laplacian(induced_subgraph(g, keep)));
    values.insert(values.end(), core.values.begin(), core.values.end());
  }
  std::sort(values.begin(), values.end());
  return Spectrum{std::move(values)};
}

namespace {

// lambda_{i} with lambda_{<=0} = 0 and lambda_{>n} = 2; i is 1-based.
double bounded(const Spectrum& s, int i) {
  if (i <= 0) return 0.0;
  if (i > s.size()) return 2.0;
  return s[i - 1];
}

bool interlaces(const Spectrum& lambda, const Spectrum& theta, int t, double tol) {
  for (int k = 1; k <= theta.size(); ++k) {
    if (bounded(lambda, k - t) > theta[k - 1] + tol) return false;
    if (theta[k - 1] > bounded(lambda, k + t) + tol) return false;
  }
  return true;
}

}  // namespace

InterlaceResult interlace_check(const GainGraph& g, Vertex u, Vertex v, double tol) {
  if (!g.has_edge(u, v)) {
    std::ostringstream os;
    os << "edge (" << u << ", " << v << ") not in graph";
    throw Error(Errc::EdgeNotPresent, os.str());
  }
  InterlaceResult r;
  r.lambda = eigenvalues(norm_laplacian(g));
  const std::pair<Vertex, Vertex> removed[] = {{u, v}};
  r.theta = padded_norm_lap_spectrum(remove_edges(g, removed));
  r.pass = interlaces(r.lambda, r.theta, 1, tol);
  return r;
}

bool multi_edge_interlace(const GainGraph& g, const GainGraph& h, double tol) {
  if (h.order() != g.order()) throw Error(Errc::NotSubgraph, "subgraph is not spanning");
  for (const auto& e : h.edges()) {
    auto idx = g.edge_index(e.u, e.v);
    if (!idx || std::abs(g.edges()[*idx].gain.value() - e.gain.value()) > 1e-12) {
      std::ostringstream os;
      os << "edge (" << e.u << ", " << e.v << ") of the subgraph is not an edge of the graph";
      throw Error(Errc::NotSubgraph, os.str());
    }
  }
  const int t = static_cast<int>(g.size() - h.size());
  return interlaces(padded_norm_lap_spectrum(g), padded_norm_lap_spectrum(h), t, tol);
}

// ---------------------------------------------------------------- suite

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::hypothesis_not_met: return "hypothesis_not_met";
  }
  return "unknown";
}

bool VerificationReport::any_failure() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* VerificationReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.check_id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> ids = {
      "eigenvalue_bounds",
      "trace_equals_order",
      "lambda2_upper_bound",
      "lambda_n_lower_bound_balanced",
      "balanced_complete_equality",
      "lambda_extremes_straddle_one",
      "normalized_adjacency_bipartite",
      "radius_adjacency",
      "radius_normalized_adjacency",
      "radius_normalized_laplacian",
      "switching_invariance",
      "spectrum_equals_underlying_iff_balanced",
      "singular_iff_balanced",
      "zero_eigenvalue_simple",
      "negation_reflection",
      "negation_spectrum_iff_symmetric",
      "radius_two_iff_balanced",
      "bipartite_balance_negation",
      "bipartite_symmetric_spectrum",
      "symmetric_spectrum_converse",
      "bipartite_balance_corollary",
      "bipartite_radius_implies_spectrum",
      "bipartite_radius_corollaries",
      "laplacian_quadratic_form",
      "normalized_quadratic_form",
      "rayleigh_quotient_bounds",
  };
  return ids;
}

namespace {

using Details = std::vector<std::pair<std::string, double>>;

CheckStatus verdict(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

// Everything the checks need, computed once.
struct Context {
  const GainGraph& g;
  const SuiteOptions& opts;
  int n = 0;
  bool connected = false;
  bool bipartite = false;
  bool balanced = false;
  bool neg_balanced = false;
  bool normalized = false;  // NL defined (no isolated vertices, n >= 1)
  Spectrum nl{}, nl_neg{}, nl_under{}, na_under{}, na_under_neg{};
};

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::vector<Complex> random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> d;
  std::vector<Complex> x(n);
  for (auto& z : x) z = {d(rng), d(rng)};
  return x;
}

double laplacian_edge_sum(const GainGraph& g, std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& e : g.edges()) s += std::norm(x[e.u] - e.gain.value() * x[e.v]);
  return s;
}

double normalized_edge_sum(const GainGraph& g, std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double du = std::sqrt(static_cast<double>(g.degree(e.u)));
    const double dv = std::sqrt(static_cast<double>(g.degree(e.v)));
    s += std::norm(x[e.u] / du - e.gain.value() * x[e.v] / dv);
  }
  return s;
}

CheckResult make(std::string id, CheckStatus status, Details details = {}) {
  return {std::move(id), status, std::move(details)};
}

CheckResult not_met(std::string id, Details details = {}) {
  return make(std::move(id), CheckStatus::hypothesis_not_met, std::move(details));
}

std::vector<CheckResult> run_checks(Context& c) {
  const double tol = c.opts.spectrum_tol;
  const int n = c.n;
  const bool conn_nl = c.connected && c.normalized;
  std::vector<CheckResult> out;

  // 0 <= lambda_i <= 2
  if (c.normalized) {
    const bool ok = c.nl.min() >= -1e-9 && c.nl.max() <= 2.0 + 1e-9;
    out.push_back(make("eigenvalue_bounds", verdict(ok), {{"lambda_min", c.nl.min()}, {"lambda_max", c.nl.max()}}));
  } else {
    out.push_back(not_met("eigenvalue_bounds"));
  }

  // sum lambda_i = n
  if (c.normalized) {
    const double s = c.nl.sum();
    out.push_back(make("trace_equals_order", verdict(std::abs(s - n) <= 1e-8 * n),
                       {{"sum", s}, {"n", double(n)}}));
  } else {
    out.push_back(not_met("trace_equals_order"));
  }

  const double bound = n >= 2 ? double(n) / (n - 1) : 0.0;
  if (conn_nl && n >= 2) {
    out.push_back(make("lambda2_upper_bound", verdict(c.nl[1] <= bound + tol),
                       {{"lambda_2", c.nl[1]}, {"bound", bound}}));
  } else {
    out.push_back(not_met("lambda2_upper_bound"));
  }

  if (conn_nl && n >= 2 && c.balanced) {
    out.push_back(make("lambda_n_lower_bound_balanced", verdict(c.nl.max() >= bound - tol),
                       {{"lambda_n", c.nl.max()}, {"bound", bound}}));
  } else {
    out.push_back(not_met("lambda_n_lower_bound_balanced"));
  }

  // Equality case sampled on balanced complete graphs only.
  const bool complete = c.g.size() == static_cast<std::size_t>(n) * (n - 1) / 2;
  if (conn_nl && n >= 2 && c.balanced && complete) {
    const bool ok = std::abs(c.nl[1] - bound) <= tol && std::abs(c.nl.max() - bound) <= tol;
    out.push_back(make("balanced_complete_equality", verdict(ok),
                       {{"lambda_2", c.nl[1]}, {"lambda_n", c.nl.max()}, {"bound", bound}}));
  } else {
    out.push_back(not_met("balanced_complete_equality"));
  }

  // lambda_1 < 1 < lambda_n; values inside the guard band are inconclusive.
  if (conn_nl && n >= 2) {
    const double lo = c.nl.min(), hi = c.nl.max();
    Details d{{"lambda_1", lo}, {"lambda_n", hi}};
    if (lo > 1.0 + kStrictGuard || hi < 1.0 - kStrictGuard) {
      out.push_back(make("lambda_extremes_straddle_one", CheckStatus::fail, d));
    } else if (lo < 1.0 - kStrictGuard && hi > 1.0 + kStrictGuard) {
      out.push_back(make("lambda_extremes_straddle_one", CheckStatus::pass, d));
    } else {
      out.push_back(not_met("lambda_extremes_straddle_one", d));
    }
  } else {
    out.push_back(not_met("lambda_extremes_straddle_one"));
  }

  // spec NA(G) = spec NA(-G) iff G bipartite
  if (conn_nl) {
    const bool same = spectra_equal(c.na_under, c.na_under_neg, tol);
    out.push_back(make("normalized_adjacency_bipartite", verdict(same == c.bipartite),
                       {{"spectra_equal", same}, {"bipartite", c.bipartite}}));
  } else {
    out.push_back(not_met("normalized_adjacency_bipartite"));
  }

  // Spectral radius comparisons against |M| and the underlying graph.
  if (c.connected && n >= 1) {
    const auto a = adjacency(c.g);
    const double r = spectral_radius(a);
    const double r_abs = spectral_radius(entrywise_abs(a));
    const double r_g = spectral_radius(adjacency(underlying(c.g)));
    out.push_back(make("radius_adjacency", verdict(r <= r_abs + tol && std::abs(r_abs - r_g) <= tol),
                       {{"rho", r}, {"rho_abs", r_abs}, {"rho_underlying", r_g}}));
  } else {
    out.push_back(not_met("radius_adjacency"));
  }
  if (conn_nl) {
    const auto na = norm_adjacency(c.g);
    const double r = spectral_radius(na);
    const double r_abs = spectral_radius(entrywise_abs(na));
    const double r_g = spectral_radius(c.na_under);
    out.push_back(make("radius_normalized_adjacency",
                       verdict(r <= r_abs + tol && std::abs(r_abs - r_g) <= tol),
                       {{"rho", r}, {"rho_abs", r_abs}, {"rho_underlying", r_g}}));

    const double rl = spectral_radius(c.nl);
    const double rl_abs = spectral_radius(entrywise_abs(norm_laplacian(c.g)));
    const double rl_neg_g = spectral_radius(norm_laplacian(negate(underlying(c.g))));
    out.push_back(make("radius_normalized_laplacian",
                       verdict(rl <= rl_abs + tol && std::abs(rl_abs - rl_neg_g) <= tol &&
                               std::abs(rl_neg_g - 2.0) <= tol),
                       {{"rho", rl}, {"rho_abs", rl_abs}, {"rho_neg_underlying", rl_neg_g}}));
  } else {
    out.push_back(not_met("radius_normalized_adjacency"));
    out.push_back(not_met("radius_normalized_laplacian"));
  }

  // Random switching preserves all four spectra.
  {
    std::mt19937_64 rng(c.opts.seed ^ 0x5eedULL);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<Gain> z;
    for (int v = 0; v < n; ++v) z.push_back(Gain::polar(angle(rng)));
    const GainGraph s = apply_switching(c.g, SwitchingFunction(std::move(z)));
    double worst = 0.0;
    auto cmp = [&](const HermitianMatrix& x, const HermitianMatrix& y) {
      const auto ex = eigenvalues(x), ey = eigenvalues(y);
      for (int i = 0; i < ex.size(); ++i) worst = std::max(worst, std::abs(ex[i] - ey[i]));
    };
    cmp(adjacency(c.g), adjacency(s));
    cmp(laplacian(c.g), laplacian(s));
    if (c.normalized) {
      cmp(norm_adjacency(c.g), norm_adjacency(s));
      cmp(norm_laplacian(c.g), norm_laplacian(s));
    }
    out.push_back(make("switching_invariance", verdict(worst <= tol), {{"max_deviation", worst}}));
  }

  // spec NL(Phi) = spec NL(G) iff Phi ~ (G,1)
  if (conn_nl) {
    const bool same = spectra_equal(c.nl, c.nl_under, tol);
    out.push_back(make("spectrum_equals_underlying_iff_balanced", verdict(same == c.balanced),
                       {{"spectra_equal", same}, {"balanced", c.balanced}}));
  } else {
    out.push_back(not_met("spectrum_equals_underlying_iff_balanced"));
  }

  // NL singular iff balanced; when singular, 0 is simple.
  if (conn_nl) {
    const double m = min_eig(c.nl);
    const bool singular = m < 1e-8;
    out.push_back(make("singular_iff_balanced", verdict(singular == c.balanced),
                       {{"min_eigenvalue", m}, {"balanced", c.balanced}}));
    if (singular) {
      const int mult = multiplicity(c.nl, 0.0, 1e-8);
      out.push_back(make("zero_eigenvalue_simple", verdict(mult == 1), {{"multiplicity", double(mult)}}));
    } else {
      out.push_back(not_met("zero_eigenvalue_simple", {{"min_eigenvalue", m}}));
    }
  } else {
    out.push_back(not_met("singular_iff_balanced"));
    out.push_back(not_met("zero_eigenvalue_simple"));
  }

  // alpha_i = 2 - lambda_{n-i+1}, and spec(-Phi) = spec(Phi) iff symmetric about 1
  if (c.normalized) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(c.nl_neg[i] - (2.0 - c.nl[n - 1 - i])));
    out.push_back(make("negation_reflection", verdict(worst <= 1e-9), {{"max_deviation", worst}}));
    const bool same = spectra_equal(c.nl, c.nl_neg, tol);
    const bool sym = symmetric_about_one(c.nl, tol);
    out.push_back(make("negation_spectrum_iff_symmetric", verdict(same == sym),
                       {{"spectra_equal", same}, {"symmetric_about_one", sym}}));
  } else {
    out.push_back(not_met("negation_reflection"));
    out.push_back(not_met("negation_spectrum_iff_symmetric"));
  }

  // rho(NL(-Phi)) = 2 iff Phi balanced; rho(NL(Phi)) = 2 iff -Phi balanced.
  if (conn_nl) {
    const double r_neg = spectral_radius(c.nl_neg);
    const double r = spectral_radius(c.nl);
    const bool ok = (std::abs(r_neg - 2.0) <= tol) == c.balanced &&
                    (std::abs(r - 2.0) <= tol) == c.neg_balanced;
    out.push_back(make("radius_two_iff_balanced", verdict(ok),
                       {{"rho", r}, {"rho_negated", r_neg}, {"balanced", c.balanced},
                        {"negation_balanced", c.neg_balanced}}));
  } else {
    out.push_back(not_met("radius_two_iff_balanced"));
  }

  // Bipartite G: Phi balanced => -Phi balanced.
  if (c.connected && c.bipartite && c.balanced) {
    out.push_back(make("bipartite_balance_negation", verdict(c.neg_balanced),
                       {{"negation_balanced", c.neg_balanced}}));
  } else {
    out.push_back(not_met("bipartite_balance_negation"));
  }

  const bool sym = c.normalized && symmetric_about_one(c.nl, tol);
  if (conn_nl && c.bipartite) {
    out.push_back(make("bipartite_symmetric_spectrum", verdict(sym), {{"symmetric_about_one", sym}}));
  } else {
    out.push_back(not_met("bipartite_symmetric_spectrum"));
  }

  // The converse does not hold; record instances where symmetry occurs
  // without bipartiteness.
  if (conn_nl) {
    out.push_back(make("symmetric_spectrum_converse", CheckStatus::pass,
                       {{"symmetric_about_one", sym},
                        {"bipartite", c.bipartite},
                        {"documented_non_implication", sym && !c.bipartite}}));
  } else {
    out.push_back(not_met("symmetric_spectrum_converse"));
  }

  if (conn_nl) {
    const bool has_two = multiplicity(c.nl, 2.0, tol) > 0;
    bool ok = true;
    if (c.balanced && c.bipartite) ok = ok && has_two;
    if (c.balanced && has_two) ok = ok && c.bipartite;
    if (c.bipartite && has_two) ok = ok && c.balanced;
    out.push_back(make("bipartite_balance_corollary", verdict(ok),
                       {{"two_in_spectrum", has_two}, {"balanced", c.balanced}, {"bipartite", c.bipartite}}));
  } else {
    out.push_back(not_met("bipartite_balance_corollary"));
  }

  // Bipartite G: rho(NL(Phi)) = rho(NL(G)) implies equal spectra.
  const double rho = c.normalized ? spectral_radius(c.nl) : 0.0;
  if (conn_nl && c.bipartite) {
    const double rho_g = spectral_radius(c.nl_under);
    const bool same_rho = std::abs(rho - rho_g) <= tol;
    const bool same_spec = spectra_equal(c.nl, c.nl_under, tol);
    out.push_back(make("bipartite_radius_implies_spectrum", verdict(!same_rho || same_spec),
                       {{"rho", rho}, {"rho_underlying", rho_g}, {"spectra_equal", same_spec}}));

    // spec(NL(G)) = spec(NL(Phi)) iff rho(NL(-G)) = rho(NL(Phi)), and
    // spec equality implies rho(NL(Phi)) = rho(NL(-Phi)).
    const double rho_neg_g = 2.0;
    const double rho_neg = spectral_radius(c.nl_neg);
    const bool ok = (same_spec == (std::abs(rho_neg_g - rho) <= tol)) &&
                    (!same_spec || std::abs(rho - rho_neg) <= tol);
    out.push_back(make("bipartite_radius_corollaries", verdict(ok),
                       {{"rho", rho}, {"rho_negated", rho_neg}, {"spectra_equal", same_spec}}));
  } else {
    out.push_back(not_met("bipartite_radius_implies_spectrum"));
    out.push_back(not_met("bipartite_radius_corollaries"));
  }

  // Quadratic-form identities and Rayleigh bounds on random vectors.
  {
    std::mt19937_64 rng(c.opts.seed);
    const auto lap = laplacian(c.g);
    double worst = 0.0;
    for (int t = 0; t < c.opts.random_vectors; ++t) {
      const auto x = random_vector(rng, n);
      worst = std::max(worst, rel_err(quadratic_form(lap, x), laplacian_edge_sum(c.g, x)));
    }
    out.push_back(make("laplacian_quadratic_form", verdict(worst <= 1e-9), {{"max_relative_error", worst}}));

    if (c.normalized) {
      const auto nl = norm_laplacian(c.g);
      worst = 0.0;
      for (int t = 0; t < c.opts.random_vectors; ++t) {
        const auto x = random_vector(rng, n);
        worst = std::max(worst, rel_err(quadratic_form(nl, x), normalized_edge_sum(c.g, x)));
      }
      out.push_back(make("normalized_quadratic_form", verdict(worst <= 1e-9), {{"max_relative_error", worst}}));

      double lo = INFINITY, hi = -INFINITY;
      for (int t = 0; t < c.opts.random_vectors; ++t) {
        const auto y = random_vector(rng, n);
        double denom = 0.0;
        for (int i = 0; i < n; ++i) denom += c.g.degree(i) * std::norm(y[i]);
        const double q = laplacian_edge_sum(c.g, y) / denom;
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
      const bool ok = c.nl.min() <= lo + 1e-9 && hi <= c.nl.max() + 1e-9;
      out.push_back(make("rayleigh_quotient_bounds", verdict(ok),
                         {{"min_quotient", lo}, {"max_quotient", hi},
                          {"lambda_1", c.nl.min()}, {"lambda_n", c.nl.max()}}));
    } else {
      out.push_back(not_met("normalized_quadratic_form"));
      out.push_back(not_met("rayleigh_quotient_bounds"));
    }
  }
  return out;
}

std::string summarize(const GainGraph& g, const Context& c) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.size() << (c.connected ? " connected" : " disconnected")
     << (c.bipartite ? " bipartite" : " non-bipartite") << (c.balanced ? " balanced" : " unbalanced");
  return os.str();
}

}  // namespace

VerificationReport theorem_suite(const GainGraph& g, const SuiteOptions& opts) {
  Context c{g, opts};
  c.n = g.order();
  c.connected = c.n > 0 && is_connected(g);
  c.bipartite = is_bipartite(g).bipartite;
  c.balanced = is_balanced(g).balanced;
  c.neg_balanced = is_balanced(negate(g)).balanced;
  c.normalized = c.n > 0 && !g.has_isolated_vertex();
  if (c.normalized) {
    c.nl = eigenvalues(norm_laplacian(g), opts.spectrum_tol);
    c.nl_neg = eigenvalues(norm_laplacian(negate(g)), opts.spectrum_tol);
    const GainGraph under = underlying(g);
    c.nl_under = eigenvalues(norm_laplacian(under), opts.spectrum_tol);
    c.na_under = eigenvalues(norm_adjacency(under), opts.spectrum_tol);
    c.na_under_neg = eigenvalues(norm_adjacency(negate(under)), opts.spectrum_tol);
  }
  VerificationReport report;
  report.graph_summary = summarize(g, c);
  report.checks = run_checks(c);
  return report;
}

// ---------------------------------------------------------------- fuzzing

std::string_view to_string(GainMode m) noexcept {
  switch (m) {
    case GainMode::all_one: return "all_one";
    case GainMode::signs: return "signs";
    case GainMode::fourth_roots: return "fourth_roots";
    case GainMode::uniform_circle: return "uniform_circle";
  }
  return "unknown";
}

GainMode parse_gain_mode(std::string_view name) {
  for (auto m : {GainMode::all_one, GainMode::signs, GainMode::fourth_roots, GainMode::uniform_circle}) {
    if (name == to_string(m)) return m;
  }
  throw Error(Errc::BadConfig, "unknown gain mode '" + std::string(name) + "'");
}

void validate(const FuzzConfig& cfg) {
  auto bad = [](const std::string& why) { throw Error(Errc::BadConfig, why); };
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) bad("need 1 <= n_min <= n_max");
  if (cfg.n_max > 64) bad("n_max above 64");
  if (!(cfg.edge_probability > 0.0 && cfg.edge_probability <= 1.0)) bad("edge probability must lie in (0, 1]");
  if (cfg.trials < 0) bad("negative trial count");
  if (cfg.family != GraphFamily::any && cfg.n_min < 2) bad("connected families need n_min >= 2");
}

namespace {

Gain draw_gain(GainMode mode, std::mt19937_64& rng) {
  switch (mode) {
    case GainMode::all_one: return Gain();
    case GainMode::signs: return Gain(rng() & 1 ? -1.0 : 1.0);
    case GainMode::fourth_roots: {
      static const Complex roots[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      return Gain(roots[rng() % 4]);
    }
    case GainMode::uniform_circle: {
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      return Gain::polar(angle(rng));
    }
  }
  return Gain();
}

constexpr int kMaxConnectAttempts = 10000;

}  // namespace

GainGraph random_gain_graph(const FuzzConfig& cfg, std::uint64_t trial) {
  validate(cfg);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> order(cfg.n_min, cfg.n_max);
  std::bernoulli_distribution coin(cfg.edge_probability);

  for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
    const int n = order(rng);
    std::vector<int> side(n, 0);
    if (cfg.family == GraphFamily::connected_bipartite) {
      for (auto& s : side) s = static_cast<int>(rng() & 1);
    }
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (cfg.family == GraphFamily::connected_bipartite && side[u] == side[v]) continue;
        if (coin(rng)) edges.push_back({u, v, draw_gain(cfg.gain_mode, rng)});
      }
    GainGraph g(n, edges);
    if (cfg.family == GraphFamily::any || is_connected(g)) return g;
  }
  throw Error(Errc::BadConfig, "could not sample a connected graph; raise the edge probability");
}

std::vector<GainGraph> random_gain_graphs(const FuzzConfig& cfg) {
  validate(cfg);
  std::vector<GainGraph> out;
  out.reserve(cfg.trials);
  for (int t = 0; t < cfg.trials; ++t) out.push_back(random_gain_graph(cfg, t));
  return out;
}

ConjectureResult conjecture_search(const FuzzConfig& cfg, double tol) {
  validate(cfg);
  ConjectureResult r;
  for (int t = 0; t < cfg.trials; ++t) {
    const GainGraph g = random_gain_graph(cfg, t);
    if (!is_connected(g) || g.has_isolated_vertex()) continue;
    const Spectrum s = eigenvalues(norm_laplacian(g));
    const Spectrum s_g = eigenvalues(norm_laplacian(underlying(g)));
    const double gap = std::abs(spectral_radius(s) - spectral_radius(s_g));

    if (is_bipartite(g).bipartite) {
      // Settled case: coincidence of radii forces equal spectra.
      ++r.bipartite_checked;
      if (gap < tol && !spectra_equal(s, s_g)) r.bipartite_violations.push_back(g);
      continue;
    }
    if (is_balanced(g).balanced) {
      ++r.skipped_balanced;
      continue;
    }
    ++r.examined;
    if (!r.nearest_miss || gap < *r.nearest_miss) {
      r.nearest_miss = gap;
      r.nearest_graph = g;
    }
    if (gap < tol && !r.counterexample) r.counterexample = g;
  }
  return r;
}

}  // namespace gaingraph
