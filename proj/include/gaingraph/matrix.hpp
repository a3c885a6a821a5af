#pragma once

#include <span>
#include <vector>

#include "gaingraph/gain_graph.hpp"

namespace gaingraph {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kQuadraticImagTol = 1e-10;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static ComplexMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Complex trace() const;
  double frobenius_norm() const;
  ComplexMatrix adjoint() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> x);
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square complex matrix verified Hermitian (within kHermitianTol) at
/// construction; the stored diagonal is made exactly real.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Throws NotHermitian for non-square or non-Hermitian input.
  explicit HermitianMatrix(ComplexMatrix m, double tol = kHermitianTol);

  int dim() const noexcept { return m_.rows(); }
  const Complex& operator()(int i, int j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

/// A(Phi): a_st = phi(s -> t) on edges.
HermitianMatrix adjacency(const GainGraph& g);
/// D(G) = diag(d_1, ..., d_n).
HermitianMatrix degree_matrix(const GainGraph& g);
/// L(Phi) = D - A(Phi).
HermitianMatrix laplacian(const GainGraph& g);
/// D^-1/2 A(Phi) D^-1/2. Throws IsolatedVertex.
HermitianMatrix norm_adjacency(const GainGraph& g);
/// I - D^-1/2 A(Phi) D^-1/2. Throws IsolatedVertex.
///
/// The general entry-wise definition distinguishes edges present in one
/// orientation only; every edge here carries both orientations with
/// conjugate gains, so off-diagonal entries are -phi(i -> j) / sqrt(d_i d_j).
HermitianMatrix norm_laplacian(const GainGraph& g);

/// Entry-wise modulus |M|.
HermitianMatrix entrywise_abs(const HermitianMatrix& m);

/// x* M x. Throws DimensionMismatch, or NonRealForm when the imaginary
/// residue exceeds kQuadraticImagTol (relative to max(1, |x*Mx|)).
double quadratic_form(const HermitianMatrix& m, std::span<const Complex> x);

}  // namespace gaingraph
