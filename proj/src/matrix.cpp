#include "gaingraph/matrix.hpp"

#include <cmath>
#include <sstream>

namespace gaingraph {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

template <class Op>
ComplexMatrix elementwise(const ComplexMatrix& a, const ComplexMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, "matrix shape mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = op(a(i, j), b(i, j));
  return out;
}

void require_no_isolated(const GainGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw Error(Errc::IsolatedVertex,
                  "vertex " + std::to_string(v) + " is isolated; normalized matrices undefined");
    }
  }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  return elementwise(a, b, std::plus<>{});
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return elementwise(a, b, std::minus<>{});
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != m.cols()) {
    throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
  }
  std::vector<Complex> y(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, "matrix shape mismatch");
  }
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (!m_.square()) throw Error(Errc::NotHermitian, "matrix is not square");
  for (int i = 0; i < m_.rows(); ++i) {
    for (int j = i; j < m_.cols(); ++j) {
      if (std::abs(m_(i, j) - std::conj(m_(j, i))) > tol) {
        std::ostringstream os;
        os << "entries (" << i << "," << j << ") and (" << j << "," << i << ") are not conjugate";
        throw Error(Errc::NotHermitian, os.str());
      }
    }
    m_(i, i) = m_(i, i).real();
  }
}

HermitianMatrix adjacency(const GainGraph& g) {
  ComplexMatrix a(g.order(), g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.gain.value();
    a(e.v, e.u) = std::conj(e.gain.value());
  }
  return HermitianMatrix(std::move(a));
}

HermitianMatrix degree_matrix(const GainGraph& g) {
  ComplexMatrix d(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) d(v, v) = g.degree(v);
  return HermitianMatrix(std::move(d));
}

HermitianMatrix laplacian(const GainGraph& g) {
  return HermitianMatrix(degree_matrix(g).matrix() - adjacency(g).matrix());
}

HermitianMatrix norm_adjacency(const GainGraph& g) {
  require_no_isolated(g);
  ComplexMatrix a(g.order(), g.order());
  for (const auto& e : g.edges()) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
    a(e.u, e.v) = scale * e.gain.value();
    a(e.v, e.u) = scale * std::conj(e.gain.value());
  }
  return HermitianMatrix(std::move(a));
}

HermitianMatrix norm_laplacian(const GainGraph& g) {
  return HermitianMatrix(ComplexMatrix::identity(g.order()) - norm_adjacency(g).matrix());
}

HermitianMatrix entrywise_abs(const HermitianMatrix& m) {
  ComplexMatrix out(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = std::abs(m(i, j));
  return HermitianMatrix(std::move(out));
}

double quadratic_form(const HermitianMatrix& m, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != m.dim()) {
    throw Error(Errc::DimensionMismatch, "vector length does not match matrix dimension");
  }
  Complex sum = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    Complex row = 0.0;
    for (int j = 0; j < m.dim(); ++j) row += m(i, j) * x[j];
    sum += std::conj(x[i]) * row;
  }
  if (std::abs(sum.imag()) > kQuadraticImagTol * std::max(1.0, std::abs(sum.real()))) {
    std::ostringstream os;
    os << "quadratic form has imaginary residue " << sum.imag();
    throw Error(Errc::NonRealForm, os.str());
  }
  return sum.real();
}

}  // namespace gaingraph
