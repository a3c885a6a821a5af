// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls the library's enumeration or eigensolver code.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "gaingraph/gain_graph.hpp"
#include "gaingraph/matrix.hpp"

namespace testing {

using gaingraph::Complex;
using gaingraph::EdgeSpec;
using gaingraph::Gain;
using gaingraph::GainGraph;

inline const Complex I{0.0, 1.0};
inline const double kSqrt2 = std::numbers::sqrt2;

inline GainGraph complete_graph(int n, Gain gain) {
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, gain});
  return GainGraph(n, edges);
}

inline GainGraph cycle_graph(int n, Gain gain = Gain()) {
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n, gain});
  return GainGraph(n, edges);
}

inline GainGraph path_graph(int n, Gain gain = Gain()) {
  std::vector<EdgeSpec> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, gain});
  return GainGraph(n, edges);
}

// The two complete gain graphs on 3 vertices whose adjacency spectra agree
// but which are not switching equivalent.
inline GainGraph phi1() {
  return GainGraph(3, {{0, 1, I}, {0, 2, (1.0 + I) / kSqrt2}, {1, 2, -I}});
}
inline GainGraph phi2() {
  return GainGraph(3, {{0, 1, -(1.0 + I) / kSqrt2}, {0, 2, I}, {1, 2, -I}});
}

inline GainGraph random_graph(std::mt19937_64& rng, int n, double p, bool unit_circle = true) {
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, unit_circle ? Gain::polar(angle(rng)) : Gain(rng() & 1 ? 1.0 : -1.0)});
  return GainGraph(n, edges);
}

inline std::vector<Complex> random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> d;
  std::vector<Complex> x(n);
  for (auto& z : x) z = {d(rng), d(rng)};
  return x;
}

// det by the Leibniz permutation expansion.
inline Complex leibniz_det(const gaingraph::ComplexMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex det = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Complex term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < n && term != 0.0; ++i) term *= m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Simple cycles counted via vertex subsets and Hamiltonian orderings of each.
inline int brute_force_cycle_count(const GainGraph& g) {
  const int n = g.order();
  int count = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) vs.push_back(i);
    if (vs.size() < 3) continue;
    std::vector<int> rest(vs.begin() + 1, vs.end());
    int hamiltonian = 0;
    do {
      bool ok = g.has_edge(vs[0], rest.front()) && g.has_edge(rest.back(), vs[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
      if (ok) ++hamiltonian;
    } while (std::next_permutation(rest.begin(), rest.end()));
    count += hamiltonian / 2;
  }
  return count;
}

// Number of elementary subgraphs per covered-vertex count, by filtering every
// edge subset with the component-shape predicate (each component is a single
// edge or a cycle).
inline std::vector<long> brute_force_elementary_counts(const GainGraph& g) {
  const int n = g.order();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<long> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<int> deg(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (!(s >> i & 1)) continue;
      ++deg[edges[i].u];
      ++deg[edges[i].v];
      parent[find(edges[i].u)] = find(edges[i].v);
    }
    std::map<int, std::pair<int, int>> comp;  // root -> (vertices, edge endpoints)
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 0) continue;
      auto& c = comp[find(v)];
      ++c.first;
      c.second += deg[v];
    }
    bool ok = true;
    int covered = 0;
    for (int v = 0; v < n && ok; ++v) ok = deg[v] <= 2;
    for (const auto& [root, c] : comp) {
      const int vertices = c.first, edge_count = c.second / 2;
      const bool single_edge = vertices == 2 && edge_count == 1;
      const bool cycle = vertices >= 3 && edge_count == vertices;  // all degrees <= 2
      if (!single_edge && !cycle) ok = false;
      covered += vertices;
    }
    if (ok) ++counts[covered];
  }
  return counts;
}

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace testing
