#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gaingraph/error.hpp"

namespace gaingraph {

using Complex = std::complex<double>;
using Vertex = int;

// Inputs within this distance of the unit circle are renormalized.
inline constexpr double kGainAcceptTol = 1e-6;
// |switched gain - 1| threshold used by balance and switching decisions.
inline constexpr double kBalanceTol = 1e-9;

/// A unit-modulus complex number. Construction normalizes values whose
/// modulus is within kGainAcceptTol of 1 and throws NonUnitGain otherwise.
class Gain {
 public:
  Gain() = default;
  Gain(Complex value);  // NOLINT(google-explicit-constructor)
  Gain(double re, double im = 0.0) : Gain(Complex(re, im)) {}

  /// Unit complex of angle theta (radians).
  static Gain polar(double theta);

  const Complex& value() const noexcept { return value_; }
  Gain conj() const noexcept;
  Gain operator-() const noexcept;
  friend Gain operator*(const Gain& a, const Gain& b) noexcept;

 private:
  struct Unchecked {};
  Gain(Complex value, Unchecked) : value_(value) {}

  Complex value_{1.0, 0.0};
};

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  Gain gain;  // gain of the orientation u -> v
};

struct EdgeSpec {
  Vertex u;
  Vertex v;
  Gain gain;
};

/// Simple undirected graph with a unit-complex gain on every oriented edge.
/// Each edge is stored once with u < v; the orientation v -> u carries the
/// conjugate gain. Immutable after construction.
class GainGraph {
 public:
  GainGraph() = default;

  /// Throws SelfLoop, DuplicateEdge, BadIndex. Non-unit gains are rejected
  /// earlier, when the Gain is constructed.
  GainGraph(int n, std::span<const EdgeSpec> edges);
  GainGraph(int n, std::initializer_list<EdgeSpec> edges)
      : GainGraph(n, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  /// Gain of the orientation a -> b. Throws EdgeNotPresent.
  Complex gain(Vertex a, Vertex b) const;
  int degree(Vertex v) const;
  /// Neighbors of v in increasing order.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  /// Index into edges() of the edge {a, b}, if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool has_isolated_vertex() const;

  friend bool operator==(const GainGraph& a, const GainGraph& b);

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

GainGraph build(int n, std::span<const EdgeSpec> edges);

/// -Phi: every gain multiplied by -1.
GainGraph negate(const GainGraph& g);
/// (G, 1): same edges, all gains 1.
GainGraph underlying(const GainGraph& g);
/// Same vertex set, listed edges removed. Throws EdgeNotPresent.
GainGraph remove_edges(const GainGraph& g,
                       std::span<const std::pair<Vertex, Vertex>> removed);
/// Induced gain subgraph on `keep` (ascending), vertices renumbered 0..k-1.
GainGraph induced_subgraph(const GainGraph& g, std::span<const Vertex> keep);

bool same_underlying_graph(const GainGraph& a, const GainGraph& b);
bool approx_equal(const GainGraph& a, const GainGraph& b, double tol);

int degree(const GainGraph& g, Vertex v);
bool is_connected(const GainGraph& g);
/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const GainGraph& g);

struct Bipartition {
  bool bipartite = false;
  /// Color 0/1 per vertex when bipartite.
  std::optional<std::vector<int>> coloring;
};
Bipartition is_bipartite(const GainGraph& g);

/// Vertex-indexed unit gains.
class SwitchingFunction {
 public:
  SwitchingFunction() = default;
  explicit SwitchingFunction(std::vector<Gain> values) : values_(std::move(values)) {}
  static SwitchingFunction identity(int n) { return SwitchingFunction(std::vector<Gain>(n)); }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const Gain& operator[](Vertex v) const { return values_.at(v); }
  const std::vector<Gain>& values() const noexcept { return values_; }

 private:
  std::vector<Gain> values_;
};

/// Gains become zeta(u)^-1 phi(u->v) zeta(v). Throws MissingVertexValue if
/// zeta does not cover every vertex.
GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& zeta);

/// Simple cycle of length >= 3 in canonical form: the smallest vertex comes
/// first and its smaller neighbor on the cycle comes second.
class Cycle {
 public:
  /// Throws NotACycle on fewer than 3 or repeated vertices.
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Product of oriented gains along the traversal v0 -> v1 -> ... -> v0.
/// Throws NotACycle if consecutive vertices are not adjacent in g.
Complex cycle_gain(const GainGraph& g, std::span<const Vertex> traversal);
/// Gain of the cycle traversed in its canonical order.
Complex cycle_gain(const GainGraph& g, const Cycle& c);

struct BalanceResult {
  bool balanced = false;
  /// Present when balanced: switching this makes every gain 1.
  std::optional<SwitchingFunction> zeta;
  /// Present when unbalanced: a cycle whose gain differs from 1.
  std::optional<Cycle> cycle;
};
BalanceResult is_balanced(const GainGraph& g);

/// Phi1 ~ Phi2 iff the edgewise ratio graph phi1 * conj(phi2) is balanced.
/// Throws DifferentUnderlyingGraph.
bool switching_equivalent(const GainGraph& a, const GainGraph& b);

}  // namespace gaingraph
