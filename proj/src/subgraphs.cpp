#include "gaingraph/subgraphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <sstream>

namespace gaingraph {

// ---------------------------------------------------------------- statistics

std::vector<Vertex> ElementarySubgraph::vertex_set() const {
  std::vector<Vertex> vs;
  for (auto [u, v] : edges) {
    vs.push_back(u);
    vs.push_back(v);
  }
  for (const auto& c : cycles) vs.insert(vs.end(), c.vertices().begin(), c.vertices().end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

int ElementarySubgraph::vertex_count() const {
  int n = 2 * static_cast<int>(edges.size());
  for (const auto& c : cycles) n += static_cast<int>(c.length());
  return n;
}

int ElementarySubgraph::edge_count() const {
  int m = static_cast<int>(edges.size());
  for (const auto& c : cycles) m += static_cast<int>(c.length());
  return m;
}

int ElementarySubgraph::component_count() const {
  return static_cast<int>(edges.size() + cycles.size());
}

int ElementarySubgraph::rank() const { return vertex_count() - component_count(); }

int ElementarySubgraph::corank() const {
  return edge_count() - vertex_count() + component_count();
}

int ElementarySubgraph::odd_cycle_count() const {
  return static_cast<int>(
      std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.length() % 2; }));
}

std::vector<Vertex> DissectionSubgraph::vertex_set() const {
  std::vector<Vertex> vs = body.vertex_set();
  vs.insert(vs.end(), isolated.begin(), isolated.end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

int DissectionSubgraph::vertex_count() const {
  return body.vertex_count() + static_cast<int>(isolated.size());
}

int DissectionSubgraph::component_count() const {
  return body.component_count() + static_cast<int>(isolated.size());
}

int DissectionSubgraph::rank() const { return vertex_count() - component_count(); }

int DissectionSubgraph::corank() const {
  return body.edge_count() - vertex_count() + component_count();
}

double DissectionSubgraph::degree_product(const GainGraph& g) const {
  double d = 1.0;
  for (Vertex v : body.vertex_set()) d *= g.degree(v);
  return d;
}

double CharPolyCoeffs::evaluate(double x) const {
  const double t = basis == Basis::x_minus_1 ? x - 1.0 : x;
  double acc = 0.0;
  for (double c : coeffs) acc = acc * t + c;
  return acc;
}

// ---------------------------------------------------------------- enumeration

namespace {

using Mask = std::uint64_t;

void require_small(const GainGraph& g) {
  if (g.order() > kMaxCombinatorialOrder) {
    std::ostringstream os;
    os << "subgraph enumeration refused for n = " << g.order() << " > " << kMaxCombinatorialOrder;
    throw Error(Errc::TooLarge, os.str());
  }
}

Mask mask_of(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= Mask{1} << v;
  return m;
}

// Building blocks of elementary subgraphs: single edges, then cycles.
struct Piece {
  Mask mask = 0;
  int vertices = 0;
  int cycle_index = -1;  // -1 for a single edge
  std::size_t edge_index = 0;
};

struct PieceSet {
  std::vector<Cycle> cycles;
  std::vector<Piece> pieces;
};

PieceSet make_pieces(const GainGraph& g) {
  PieceSet ps;
  ps.cycles = enumerate_cycles(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& e = g.edges()[i];
    ps.pieces.push_back({(Mask{1} << e.u) | (Mask{1} << e.v), 2, -1, i});
  }
  for (std::size_t i = 0; i < ps.cycles.size(); ++i) {
    const auto& vs = ps.cycles[i].vertices();
    ps.pieces.push_back({mask_of(vs), static_cast<int>(vs.size()), static_cast<int>(i), 0});
  }
  return ps;
}

// Visits every set of pairwise disjoint pieces covering at most max_k
// vertices (the empty set included). `chosen` lists piece indices.
void for_each_disjoint(const PieceSet& ps, int max_k,
                       const std::function<void(const std::vector<int>&, Mask, int)>& visit) {
  std::vector<int> chosen;
  std::function<void(std::size_t, Mask, int)> rec = [&](std::size_t start, Mask used, int count) {
    visit(chosen, used, count);
    for (std::size_t i = start; i < ps.pieces.size(); ++i) {
      const Piece& p = ps.pieces[i];
      if ((p.mask & used) || count + p.vertices > max_k) continue;
      chosen.push_back(static_cast<int>(i));
      rec(i + 1, used | p.mask, count + p.vertices);
      chosen.pop_back();
    }
  };
  rec(0, 0, 0);
}

ElementarySubgraph materialize(const GainGraph& g, const PieceSet& ps,
                               const std::vector<int>& chosen) {
  ElementarySubgraph h;
  for (int idx : chosen) {
    const Piece& p = ps.pieces[idx];
    if (p.cycle_index < 0) {
      const auto& e = g.edges()[p.edge_index];
      h.edges.emplace_back(e.u, e.v);
    } else {
      h.cycles.push_back(ps.cycles[p.cycle_index]);
    }
  }
  return h;
}

// Per-subgraph quantities needed by all coefficient formulas.
struct Term {
  int vertices = 0;
  double weight = 1.0;      // (-1)^r 2^s prod Re(phi(C))
  double degree_prod = 1.0; // prod of Phi-degrees over V(H)
  int odd_cycles = 0;
};

template <class Sink>
void for_each_term(const GainGraph& g, int max_k, Sink&& sink) {
  const PieceSet ps = make_pieces(g);
  std::vector<double> cycle_re(ps.cycles.size());
  for (std::size_t i = 0; i < ps.cycles.size(); ++i) {
    cycle_re[i] = cycle_gain(g, ps.cycles[i]).real();
  }
  for_each_disjoint(ps, max_k, [&](const std::vector<int>& chosen, Mask used, int count) {
    Term t;
    t.vertices = count;
    int rank = 0;
    for (int idx : chosen) {
      const Piece& p = ps.pieces[idx];
      rank += p.vertices - 1;
      if (p.cycle_index >= 0) {
        t.weight *= 2.0 * cycle_re[p.cycle_index];
        if (p.vertices % 2) ++t.odd_cycles;
      }
    }
    if (rank % 2) t.weight = -t.weight;
    for (Mask m = used; m; m &= m - 1) t.degree_prod *= g.degree(std::countr_zero(m));
    sink(t);
  });
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_no_isolated(const GainGraph& g) {
  if (g.has_isolated_vertex()) {
    throw Error(Errc::IsolatedVertex, "normalized Laplacian undefined with isolated vertices");
  }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const GainGraph& g) {
  require_small(g);
  const int n = g.order();
  std::vector<Cycle> out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);

  // Cycles rooted at their minimum vertex s; only vertices > s are explored,
  // and each cycle is kept in the orientation whose second vertex is smaller
  // than its last.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        out.emplace_back(path);
      } else if (w > s && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        dfs(s, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementarySubgraph> enumerate_elementary(const GainGraph& g, int k) {
  require_small(g);
  if (k < 0 || k > g.order()) throw Error(Errc::BadIndex, "k outside [0, n]");
  const PieceSet ps = make_pieces(g);
  std::vector<ElementarySubgraph> out;
  for_each_disjoint(ps, k, [&](const std::vector<int>& chosen, Mask, int count) {
    if (count == k) out.push_back(materialize(g, ps, chosen));
  });
  return out;
}

std::vector<DissectionSubgraph> enumerate_dissection(const GainGraph& g, int k) {
  require_small(g);
  if (k < 0 || k > g.order()) throw Error(Errc::BadIndex, "k outside [0, n]");
  const int n = g.order();
  const PieceSet ps = make_pieces(g);
  std::vector<DissectionSubgraph> out;
  for_each_disjoint(ps, k, [&](const std::vector<int>& chosen, Mask used, int count) {
    const ElementarySubgraph body = materialize(g, ps, chosen);
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
      if (!(used >> v & 1)) free.push_back(v);
    const int need = k - count;
    // Every need-subset of the free vertices, in lexicographic order.
    std::vector<int> pick(need);
    std::function<void(int, int)> choose = [&](int from, int depth) {
      if (depth == need) {
        DissectionSubgraph d;
        d.body = body;
        for (int i : pick) d.isolated.push_back(free[i]);
        out.push_back(std::move(d));
        return;
      }
      for (int i = from; i < static_cast<int>(free.size()); ++i) {
        pick[depth] = i;
        choose(i + 1, depth + 1);
      }
    };
    choose(0, 0);
  });
  return out;
}

double elementary_weight(const GainGraph& g, const ElementarySubgraph& h) {
  double w = h.rank() % 2 ? -1.0 : 1.0;
  for (const auto& c : h.cycles) w *= 2.0 * cycle_gain(g, c).real();
  return w;
}

double det_adjacency(const GainGraph& g) {
  require_small(g);
  const int n = g.order();
  double det = 0.0;
  for_each_term(g, n, [&](const Term& t) {
    if (t.vertices == n) det += t.weight;
  });
  return det;
}

CharPolyCoeffs adjacency_coeffs(const GainGraph& g) {
  require_small(g);
  const int n = g.order();
  std::vector<double> sums(n + 1, 0.0);
  for_each_term(g, n, [&](const Term& t) { sums[t.vertices] += t.weight; });
  CharPolyCoeffs out{Basis::adjacency, std::vector<double>(n + 1)};
  for (int k = 0; k <= n; ++k) out.coeffs[k] = (k % 2 ? -1.0 : 1.0) * sums[k];
  return out;
}

CharPolyCoeffs norm_lap_c_coeffs(const GainGraph& g) {
  require_small(g);
  require_no_isolated(g);
  const int n = g.order();
  CharPolyCoeffs out{Basis::x_minus_1, std::vector<double>(n + 1, 0.0)};
  for_each_term(g, n, [&](const Term& t) { out.coeffs[t.vertices] += t.weight / t.degree_prod; });
  return out;
}

CharPolyCoeffs norm_lap_b_coeffs(const GainGraph& g) {
  require_small(g);
  require_no_isolated(g);
  const int n = g.order();
  // A dissection subgraph is an elementary body on j vertices plus k - j
  // isolated vertices; the isolated ones change neither the sign, 2^s nor
  // D_H, so each body is counted C(n - j, k - j) times.
  std::vector<double> body(n + 1, 0.0);
  for_each_term(g, n, [&](const Term& t) {
    const double sign = t.odd_cycles % 2 ? -1.0 : 1.0;
    body[t.vertices] += sign * t.weight / t.degree_prod;
  });
  CharPolyCoeffs out{Basis::x, std::vector<double>(n + 1, 0.0)};
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += binomial(n - j, k - j) * body[j];
    out.coeffs[k] = (k % 2 ? -1.0 : 1.0) * s;
  }
  return out;
}

// ---------------------------------------------------------------- oracles

namespace {

Complex determinant(ComplexMatrix a) {
  const int n = a.rows();
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace

std::vector<double> principal_minor_sums(const HermitianMatrix& m) {
  const int n = m.dim();
  if (n > kMaxCombinatorialOrder) throw Error(Errc::TooLarge, "principal minor sums refused");
  std::vector<double> sums(n + 1, 0.0);
  for (Mask subset = 0; subset < (Mask{1} << n); ++subset) {
    const int k = std::popcount(subset);
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (subset >> i & 1) idx.push_back(i);
    ComplexMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = m(idx[i], idx[j]);
    sums[k] += determinant(std::move(sub)).real();
  }
  return sums;
}

CharPolyCoeffs charpoly_oracle(const ComplexMatrix& m) {
  if (!m.square()) throw Error(Errc::DimensionMismatch, "characteristic polynomial needs a square matrix");
  const int n = m.rows();
  CharPolyCoeffs out{Basis::x, std::vector<double>(n + 1, 0.0)};
  out.coeffs[0] = 1.0;
  const ComplexMatrix id = ComplexMatrix::identity(n);
  ComplexMatrix mk = id;
  Complex prev = 1.0;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) mk = m * mk + prev * id;
    const Complex ck = -(m * mk).trace() / static_cast<double>(k);
    if (std::abs(ck.imag()) > 1e-9 * std::max(1.0, std::abs(ck.real()))) {
      std::ostringstream os;
      os << "coefficient " << k << " has imaginary part " << ck.imag();
      throw Error(Errc::NonRealCoefficient, os.str());
    }
    out.coeffs[k] = ck.real();
    prev = ck;
  }
  return out;
}

CharPolyCoeffs charpoly_oracle(const HermitianMatrix& m) { return charpoly_oracle(m.matrix()); }

CharPolyCoeffs basis_convert(const CharPolyCoeffs& c) {
  if (c.basis != Basis::x_minus_1) throw Error(Errc::BadConfig, "basis_convert expects the (x-1) basis");
  const int n = c.degree();
  CharPolyCoeffs out{Basis::x, std::vector<double>(n + 1, 0.0)};
  for (int k = 0; k <= n; ++k) {
    const int m = n - k;  // c_k (x-1)^m
    for (int j = 0; j <= m; ++j) {
      const double sign = (m - j) % 2 ? -1.0 : 1.0;
      out.coeffs[n - j] += c.coeffs[k] * binomial(m, j) * sign;
    }
  }
  return out;
}

std::vector<double> poly_from_roots(const std::vector<double>& roots) {
  std::vector<double> p{1.0};
  for (double r : roots) {
    p.push_back(0.0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= r * p[i - 1];
  }
  return p;
}

double max_coeff_deviation(const CharPolyCoeffs& a, const CharPolyCoeffs& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw Error(Errc::LengthMismatch, "degree mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) d = std::max(d, std::abs(a.coeffs[i] - b.coeffs[i]));
  return d;
}

}  // namespace gaingraph
