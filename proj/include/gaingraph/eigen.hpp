#pragma once

#include <vector>

#include "gaingraph/matrix.hpp"

namespace gaingraph {

inline constexpr double kSpectrumTol = 1e-8;

/// Real eigenvalues sorted ascending, with the tolerance used when
/// comparing this spectrum against others.
struct Spectrum {
  std::vector<double> values;
  double tol = kSpectrumTol;

  int size() const noexcept { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values.at(i); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double sum() const;
};

struct Eigensystem {
  std::vector<double> values;    // ascending
  ComplexMatrix vectors;         // column k belongs to values[k]
  int sweeps = 0;
};

struct JacobiOptions {
  double rel_tol = 1e-12;  // stop when off(M) < rel_tol * |M|_F
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi rotations on a private copy of m. Throws
/// NoConvergence when max_sweeps is exhausted.
Eigensystem jacobi_eigensystem(const HermitianMatrix& m, JacobiOptions opts = {});

Spectrum eigenvalues(const HermitianMatrix& m, double tol = kSpectrumTol);
double spectral_radius(const HermitianMatrix& m);
double spectral_radius(const Spectrum& s);

/// Sorted comparison within tol. Throws LengthMismatch.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = kSpectrumTol);
int multiplicity(const Spectrum& s, double lambda, double tol = kSpectrumTol);
double min_eig(const Spectrum& s);

/// True when the multiset {2 - lambda} equals the spectrum.
bool symmetric_about_one(const Spectrum& s, double tol = kSpectrumTol);

}  // namespace gaingraph
