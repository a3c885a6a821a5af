#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaingraph/eigen.hpp"
#include "gaingraph/gain_graph.hpp"

namespace gaingraph {

inline constexpr double kInterlaceTol = 1e-9;
// Guard band for strict inequalities; values inside it are inconclusive.
inline constexpr double kStrictGuard = 1e-9;

// ---------------------------------------------------------------- interlacing

/// Spectrum of the normalized Laplacian restricted to non-isolated
/// vertices, padded with one zero per isolated vertex.
Spectrum padded_norm_lap_spectrum(const GainGraph& g);

struct InterlaceResult {
  bool pass = false;
  Spectrum lambda;  // NL(Phi)
  Spectrum theta;   // NL(Phi - e), padded
};

/// Edge-deletion interlacing lambda_{i-1} <= theta_i <= lambda_{i+1} with
/// lambda_0 = 0 and lambda_{n+1} = 2. Throws EdgeNotPresent, IsolatedVertex.
InterlaceResult interlace_check(const GainGraph& g, Vertex u, Vertex v, double tol = kInterlaceTol);

/// lambda_{k-t} <= theta_k <= lambda_{k+t} for a spanning subgraph h that
/// drops t edges of g, with lambda_{<=0} = 0 and lambda_{>n} = 2.
/// Throws NotSubgraph.
bool multi_edge_interlace(const GainGraph& g, const GainGraph& h, double tol = kInterlaceTol);

// ---------------------------------------------------------------- suite

enum class CheckStatus { pass, fail, hypothesis_not_met };
std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::hypothesis_not_met;
  std::vector<std::pair<std::string, double>> details;
};

struct VerificationReport {
  std::string graph_summary;
  std::vector<CheckResult> checks;

  bool any_failure() const;
  const CheckResult* find(std::string_view id) const;
};

/// Identifiers of every check theorem_suite emits, in report order.
const std::vector<std::string>& registered_checks();

struct SuiteOptions {
  std::uint64_t seed = 0;   // random vectors and switching functions
  int random_vectors = 10;  // per quadratic-form identity
  double spectrum_tol = kSpectrumTol;
};

/// Runs every registered check on g. Never throws on a failed check.
VerificationReport theorem_suite(const GainGraph& g, const SuiteOptions& opts = {});

// ---------------------------------------------------------------- fuzzing

enum class GainMode { all_one, signs, fourth_roots, uniform_circle };
std::string_view to_string(GainMode m) noexcept;
/// Throws BadConfig for unknown names.
GainMode parse_gain_mode(std::string_view name);

enum class GraphFamily {
  any,                 // plain Erdos-Renyi
  connected,           // rejection-sampled until connected
  connected_bipartite  // random bipartition, cross edges only, connected
};

struct FuzzConfig {
  int n_min = 3;
  int n_max = 8;
  double edge_probability = 0.5;
  GainMode gain_mode = GainMode::uniform_circle;
  GraphFamily family = GraphFamily::connected;
  int trials = 100;
  std::uint64_t seed = 0;
};

/// Throws BadConfig.
void validate(const FuzzConfig& cfg);

/// Graph number `trial` of the stream defined by cfg; depends only on
/// (cfg, trial), so trials can be generated in any order.
GainGraph random_gain_graph(const FuzzConfig& cfg, std::uint64_t trial);
std::vector<GainGraph> random_gain_graphs(const FuzzConfig& cfg);

struct ConjectureResult {
  std::optional<GainGraph> counterexample;
  /// Smallest |rho(NL(Phi)) - rho(NL(G))| over unbalanced non-bipartite samples.
  std::optional<double> nearest_miss;
  std::optional<GainGraph> nearest_graph;
  int examined = 0;          // connected, non-bipartite, unbalanced
  int skipped_balanced = 0;
  int bipartite_checked = 0;
  /// Bipartite G where rho coincides but spectra differ: a theorem violation.
  std::vector<GainGraph> bipartite_violations;
};

ConjectureResult conjecture_search(const FuzzConfig& cfg, double tol);

}  // namespace gaingraph
