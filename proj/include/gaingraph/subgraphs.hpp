#pragma once

#include <cstdint>
#include <vector>

#include "gaingraph/gain_graph.hpp"
#include "gaingraph/matrix.hpp"

namespace gaingraph {

// Enumeration is exponential; graphs above this order are refused.
inline constexpr int kMaxCombinatorialOrder = 12;

/// Vertex-disjoint union of single edges and cycles.
struct ElementarySubgraph {
  std::vector<std::pair<Vertex, Vertex>> edges;  // matching edges, u < v
  std::vector<Cycle> cycles;

  std::vector<Vertex> vertex_set() const;  // ascending
  int vertex_count() const;
  int edge_count() const;       // matching edges plus cycle edges
  int component_count() const;  // p(H)
  int rank() const;             // r(H) = n_H - p(H)
  int corank() const;           // s(H) = m_H - n_H + p(H)
  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int odd_cycle_count() const;
};

/// Elementary subgraph padded with isolated vertices.
struct DissectionSubgraph {
  std::vector<Vertex> isolated;
  ElementarySubgraph body;

  std::vector<Vertex> vertex_set() const;
  int vertex_count() const;
  int component_count() const;
  int rank() const;
  int corank() const;
  int odd_cycle_count() const { return body.odd_cycle_count(); }
  /// D_H: product of Phi-degrees over vertices of H with nonzero H-degree.
  double degree_product(const GainGraph& g) const;
};

enum class Basis { x, x_minus_1, adjacency };

/// Characteristic polynomial coefficients; coeffs[0] = 1 is the leading
/// coefficient and coeffs[k] multiplies t^(n-k), with t = x or t = x - 1
/// depending on the basis.
struct CharPolyCoeffs {
  Basis basis = Basis::x;
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator[](int k) const { return coeffs.at(k); }
  /// Evaluates the polynomial at x (accounting for the basis).
  double evaluate(double x) const;
};

/// All simple cycles (length >= 3), each once, in canonical form, sorted.
std::vector<Cycle> enumerate_cycles(const GainGraph& g);

/// All elementary subgraphs covering exactly k vertices.
std::vector<ElementarySubgraph> enumerate_elementary(const GainGraph& g, int k);
/// All dissection subgraphs on exactly k vertices.
std::vector<DissectionSubgraph> enumerate_dissection(const GainGraph& g, int k);

/// (-1)^r(H) 2^s(H) prod Re(phi(C)) for one elementary subgraph.
double elementary_weight(const GainGraph& g, const ElementarySubgraph& h);

/// det A(Phi) as a sum over spanning elementary subgraphs.
double det_adjacency(const GainGraph& g);
/// Coefficients a_k of det(xI - A(Phi)) from elementary subgraphs.
CharPolyCoeffs adjacency_coeffs(const GainGraph& g);
/// Coefficients c_k of det(xI - NL(Phi)) in powers of (x - 1). Throws IsolatedVertex.
CharPolyCoeffs norm_lap_c_coeffs(const GainGraph& g);
/// Coefficients b_k of det(xI - NL(Phi)) from dissection subgraphs. Throws IsolatedVertex.
CharPolyCoeffs norm_lap_b_coeffs(const GainGraph& g);

/// Sum of all k x k principal minors of m, k = 0..n, by explicit
/// determinants of every principal submatrix.
std::vector<double> principal_minor_sums(const HermitianMatrix& m);

/// det(xI - M) by the Faddeev-LeVerrier recurrence. Throws NonRealCoefficient.
CharPolyCoeffs charpoly_oracle(const ComplexMatrix& m);
CharPolyCoeffs charpoly_oracle(const HermitianMatrix& m);

/// Expands sum c_k (x-1)^(n-k) into powers of x. Throws BadConfig for other bases.
CharPolyCoeffs basis_convert(const CharPolyCoeffs& c);

/// Coefficients of prod (x - r_i), leading first.
std::vector<double> poly_from_roots(const std::vector<double>& roots);

double max_coeff_deviation(const CharPolyCoeffs& a, const CharPolyCoeffs& b);

}  // namespace gaingraph
