#include "gaingraph/gain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace gaingraph {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NonUnitGain: return "NonUnitGain";
    case Errc::BadIndex: return "BadIndex";
    case Errc::MissingVertexValue: return "MissingVertexValue";
    case Errc::DifferentUnderlyingGraph: return "DifferentUnderlyingGraph";
    case Errc::NotACycle: return "NotACycle";
    case Errc::EdgeNotPresent: return "EdgeNotPresent";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonRealForm: return "NonRealForm";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonRealCoefficient: return "NonRealCoefficient";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotSubgraph: return "NotSubgraph";
    case Errc::BadConfig: return "BadConfig";
    case Errc::Syntax: return "Syntax";
    case Errc::BadHeader: return "BadHeader";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Gain

Gain::Gain(Complex value) {
  const double r = std::abs(value);
  if (!std::isfinite(r) || std::abs(r - 1.0) > kGainAcceptTol) {
    std::ostringstream os;
    os << "gain " << value << " has modulus " << r << ", expected 1";
    throw Error(Errc::NonUnitGain, os.str());
  }
  value_ = value / r;
}

Gain Gain::polar(double theta) { return Gain(std::polar(1.0, theta), Unchecked{}); }

Gain Gain::conj() const noexcept { return Gain(std::conj(value_), Unchecked{}); }

Gain Gain::operator-() const noexcept { return Gain(-value_, Unchecked{}); }

Gain operator*(const Gain& a, const Gain& b) noexcept {
  Complex p = a.value_ * b.value_;
  return Gain(p / std::abs(p), Gain::Unchecked{});
}

// ---------------------------------------------------------------- GainGraph

GainGraph::GainGraph(int n, std::span<const EdgeSpec> edges) : n_(n) {
  if (n < 0) throw Error(Errc::BadIndex, "negative vertex count");
  adj_.resize(n);
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      std::ostringstream os;
      os << "edge (" << e.u << ", " << e.v << ") outside [0, " << n << ")";
      throw Error(Errc::BadIndex, os.str());
    }
    if (e.u == e.v) {
      throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < e.v) {
      edges_.push_back({e.u, e.v, e.gain});
    } else {
      edges_.push_back({e.v, e.u, e.gain.conj()});
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      std::ostringstream os;
      os << "duplicate edge (" << edges_[i].u << ", " << edges_[i].v << ")";
      throw Error(Errc::DuplicateEdge, os.str());
    }
  }
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void GainGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(Errc::BadIndex, "vertex " + std::to_string(v) + " out of range");
  }
}

std::optional<std::size_t> GainGraph::edge_index(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const Vertex lo = std::min(a, b), hi = std::max(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(lo, hi),
                             [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::pair(e.u, e.v) < key;
                             });
  if (it == edges_.end() || it->u != lo || it->v != hi) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool GainGraph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

Complex GainGraph::gain(Vertex a, Vertex b) const {
  auto idx = edge_index(a, b);
  if (!idx) {
    std::ostringstream os;
    os << "no edge between " << a << " and " << b;
    throw Error(Errc::EdgeNotPresent, os.str());
  }
  const Complex& g = edges_[*idx].gain.value();
  return a < b ? g : std::conj(g);
}

int GainGraph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<Vertex>& GainGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool GainGraph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](const auto& nb) { return nb.empty(); });
}

bool operator==(const GainGraph& a, const GainGraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.gain.value() != y.gain.value()) return false;
  }
  return true;
}

GainGraph build(int n, std::span<const EdgeSpec> edges) { return GainGraph(n, edges); }

namespace {

template <class F>
GainGraph map_gains(const GainGraph& g, F&& f) {
  std::vector<EdgeSpec> out;
  out.reserve(g.size());
  for (const auto& e : g.edges()) out.push_back({e.u, e.v, f(e)});
  return GainGraph(g.order(), out);
}

}  // namespace

GainGraph negate(const GainGraph& g) {
  return map_gains(g, [](const Edge& e) { return -e.gain; });
}

GainGraph underlying(const GainGraph& g) {
  return map_gains(g, [](const Edge&) { return Gain(); });
}

GainGraph remove_edges(const GainGraph& g,
                       std::span<const std::pair<Vertex, Vertex>> removed) {
  std::vector<bool> drop(g.size(), false);
  for (auto [a, b] : removed) {
    auto idx = g.edge_index(a, b);
    if (!idx) {
      std::ostringstream os;
      os << "cannot remove missing edge (" << a << ", " << b << ")";
      throw Error(Errc::EdgeNotPresent, os.str());
    }
    drop[*idx] = true;
  }
  std::vector<EdgeSpec> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!drop[i]) out.push_back({g.edges()[i].u, g.edges()[i].v, g.edges()[i].gain});
  }
  return GainGraph(g.order(), out);
}

GainGraph induced_subgraph(const GainGraph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order()) throw Error(Errc::BadIndex, "bad vertex in subset");
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<EdgeSpec> out;
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      out.push_back({index[e.u], index[e.v], e.gain});
    }
  }
  return GainGraph(static_cast<int>(keep.size()), out);
}

bool same_underlying_graph(const GainGraph& a, const GainGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v) return false;
  }
  return true;
}

bool approx_equal(const GainGraph& a, const GainGraph& b, double tol) {
  if (!same_underlying_graph(a, b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.edges()[i].gain.value() - b.edges()[i].gain.value()) > tol) return false;
  }
  return true;
}

int degree(const GainGraph& g, Vertex v) { return g.degree(v); }

std::vector<std::vector<Vertex>> components(const GainGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const GainGraph& g) { return components(g).size() <= 1; }

Bipartition is_bipartite(const GainGraph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return {};
        }
      }
    }
  }
  return {true, std::move(color)};
}

GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& zeta) {
  if (zeta.size() != g.order()) {
    std::ostringstream os;
    os << "switching function covers " << zeta.size() << " of " << g.order() << " vertices";
    throw Error(Errc::MissingVertexValue, os.str());
  }
  return map_gains(g, [&](const Edge& e) { return zeta[e.u].conj() * e.gain * zeta[e.v]; });
}

// ---------------------------------------------------------------- Cycle

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw Error(Errc::NotACycle, "cycle needs at least 3 vertices");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::NotACycle, "cycle repeats a vertex");
  }
  auto min_it = std::min_element(vertices_.begin(), vertices_.end());
  std::rotate(vertices_.begin(), min_it, vertices_.end());
  if (vertices_[1] > vertices_.back()) std::reverse(vertices_.begin() + 1, vertices_.end());
}

Complex cycle_gain(const GainGraph& g, std::span<const Vertex> traversal) {
  if (traversal.size() < 3) throw Error(Errc::NotACycle, "cycle needs at least 3 vertices");
  Complex product{1.0, 0.0};
  for (std::size_t i = 0; i < traversal.size(); ++i) {
    Vertex a = traversal[i];
    Vertex b = traversal[(i + 1) % traversal.size()];
    if (a < 0 || a >= g.order() || b < 0 || b >= g.order() || !g.has_edge(a, b)) {
      std::ostringstream os;
      os << "vertices " << a << " and " << b << " are not adjacent";
      throw Error(Errc::NotACycle, os.str());
    }
    product *= g.gain(a, b);
  }
  return product;
}

Complex cycle_gain(const GainGraph& g, const Cycle& c) { return cycle_gain(g, c.vertices()); }

// ---------------------------------------------------------------- balance

BalanceResult is_balanced(const GainGraph& g) {
  const int n = g.order();
  std::vector<Complex> zeta(n, Complex(1.0, 0.0));
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, -1);

  // Spanning forest by BFS; zeta propagates so every tree edge switches to 1.
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (depth[w] >= 0) continue;
        depth[w] = depth[u] + 1;
        parent[w] = u;
        zeta[w] = zeta[u] * std::conj(g.gain(u, w));
        zeta[w] /= std::abs(zeta[w]);
        q.push(w);
      }
    }
  }

  for (const auto& e : g.edges()) {
    const Complex switched = std::conj(zeta[e.u]) * e.gain.value() * zeta[e.v];
    if (std::abs(switched - 1.0) <= kBalanceTol) continue;

    // Fundamental cycle of the offending non-tree edge: u .. lca .. v.
    std::vector<Vertex> up{e.u}, down{e.v};
    Vertex a = e.u, b = e.v;
    while (depth[a] > depth[b]) up.push_back(a = parent[a]);
    while (depth[b] > depth[a]) down.push_back(b = parent[b]);
    while (a != b) {
      up.push_back(a = parent[a]);
      down.push_back(b = parent[b]);
    }
    down.pop_back();  // lca already in `up`
    std::vector<Vertex> cycle = up;
    cycle.insert(cycle.end(), down.rbegin(), down.rend());
    return {false, std::nullopt, Cycle(std::move(cycle))};
  }

  std::vector<Gain> values;
  values.reserve(n);
  for (const auto& z : zeta) values.emplace_back(z);
  return {true, SwitchingFunction(std::move(values)), std::nullopt};
}

bool switching_equivalent(const GainGraph& a, const GainGraph& b) {
  if (!same_underlying_graph(a, b)) {
    throw Error(Errc::DifferentUnderlyingGraph, "gain graphs have different underlying graphs");
  }
  std::vector<EdgeSpec> ratio;
  ratio.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& e = a.edges()[i];
    ratio.push_back({e.u, e.v, e.gain * b.edges()[i].gain.conj()});
  }
  return is_balanced(GainGraph(a.order(), ratio)).balanced;
}

}  // namespace gaingraph
