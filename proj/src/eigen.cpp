#include "gaingraph/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gaingraph {

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary J, A <- J* A J, V <- V J, where
//   J(p,p) = c, J(q,q) = c, J(p,q) = s e, J(q,p) = -s conj(e), e = a(p,q)/|a(p,q)|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex e = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex jpq = s * e;
  const Complex jqp = -s * std::conj(e);

  const int n = a.rows();
  for (int k = 0; k < n; ++k) {  // columns
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  for (int k = 0; k < n; ++k) {  // rows
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (int k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
}

}  // namespace

Eigensystem jacobi_eigensystem(const HermitianMatrix& m, JacobiOptions opts) {
  const int n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = opts.rel_tol * a.frobenius_norm();

  int sweep = 0;
  if (n > 1) {
    while (off_diagonal_norm(a) >= threshold && threshold > 0.0) {
      if (sweep == opts.max_sweeps) {
        throw Error(Errc::NoConvergence,
                    "Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
      }
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
      ++sweep;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  Eigensystem out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Spectrum eigenvalues(const HermitianMatrix& m, double tol) {
  return Spectrum{jacobi_eigensystem(m).values, tol};
}

double spectral_radius(const Spectrum& s) {
  if (s.values.empty()) return 0.0;
  return std::max(std::abs(s.values.front()), std::abs(s.values.back()));
}

double spectral_radius(const HermitianMatrix& m) { return spectral_radius(eigenvalues(m)); }

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.values.size() != b.values.size()) {
    throw Error(Errc::LengthMismatch, "spectra have different lengths");
  }
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (std::abs(a.values[i] - b.values[i]) > tol) return false;
  }
  return true;
}

int multiplicity(const Spectrum& s, double lambda, double tol) {
  return static_cast<int>(std::count_if(s.values.begin(), s.values.end(),
                                        [&](double x) { return std::abs(x - lambda) <= tol; }));
}

double min_eig(const Spectrum& s) {
  if (s.values.empty()) throw Error(Errc::LengthMismatch, "empty spectrum");
  return s.values.front();
}

bool symmetric_about_one(const Spectrum& s, double tol) {
  const auto& v = s.values;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(v[i] - (2.0 - v[n - 1 - i])) > tol) return false;
  }
  return true;
}

}  // namespace gaingraph
