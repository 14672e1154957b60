#pragma once

#include <complex>
#include <vector>

#include "twoterm/polynomial.h"

namespace twoterm {

struct Root {
  std::complex<double> value;
  // Relative backward error |q(z)| / sum |q_i| |z|^i on the deflated
  // polynomial q, evaluated in quad precision.
  double residual = 0;
  // Size of the cluster this root stands for; only an estimate.
  int multiplicity = 1;
};

struct RootSet {
  int zero_multiplicity = 0;  // exact
  std::vector<Root> roots;    // nonzero roots, sorted by (re, im)
  bool converged = true;
  // ReconstructionError of the quad-precision roots before rounding.
  double reconstruction_error = 0;

  // Roots counted with multiplicity, including the zero root.
  int Count() const;
  // Every root expanded by multiplicity, zeros included.
  std::vector<std::complex<double>> Expanded() const;
};

struct RootOptions {
  double residual_tolerance = 1e-8;
  int max_sweeps = 200;
  int polish_steps = 50;
  double cluster_radius = 1e-6;
};

// All complex roots of f: the exact power of p is divided out, the rest is
// solved by Aberth-Ehrlich iteration in double from a circle of radius
// half the Fujiwara bound and polished by Newton-Aberth steps in quad precision. Real
// roots are snapped to the axis and complex ones paired with their conjugates
// when that keeps the residual within tolerance. Throws DomainError on the
// zero polynomial and ConvergenceError when a residual or the reconstruction
// check fails.
RootSet AllRoots(const Polynomial& f, const RootOptions& options = {});

// Same as AllRoots but reports failures in RootSet::converged instead of
// throwing.
RootSet AllRootsUnchecked(const Polynomial& f, const RootOptions& options = {});

// Relative coefficientwise distance between lc * prod (p - r_i) and f,
// measured against max |f_i|, using the rounded double roots.
double ReconstructionError(const Polynomial& f, const RootSet& roots);

// Roots of the complex polynomial sum c_i z^i (ascending, nonzero leading
// coefficient) in long double Aberth-Ehrlich iteration. Degree many values,
// repeated roots repeated.
std::vector<std::complex<long double>> SolveComplex(
    const std::vector<std::complex<long double>>& coefficients);

// |q(z)| / sum |q_i| |z|^i.
long double BackwardError(
    const std::vector<std::complex<long double>>& coefficients,
    std::complex<long double> z);

struct Region {
  enum class Kind { kLeftHalfPlane, kOutsideDisk, kRealInterval };

  Kind kind = Kind::kLeftHalfPlane;
  std::complex<double> center;  // outside-disk
  double radius = 0;            // outside-disk
  double a = 0;                 // real-interval
  double b = 0;

  static Region LeftHalfPlane();
  // |z - center| > radius.
  static Region OutsideDisk(std::complex<double> center, double radius);
  // Real z with a < z < b.
  static Region RealInterval(double a, double b);
};

struct RegionMatch {
  std::vector<Root> inside;
  // Roots within the tolerance of the region boundary; never counted inside.
  std::vector<Root> ambiguous;

  int Count() const;
  int AmbiguousCount() const;
};

// Strict membership on the floating root values. The exact zero root is
// decided exactly.
RegionMatch RegionFilter(const RootSet& roots, const Region& region,
                         double boundary_tolerance = 1e-9);

}  // namespace twoterm
