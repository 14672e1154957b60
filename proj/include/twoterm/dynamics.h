#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "twoterm/multigraph.h"
#include "twoterm/polynomial.h"
#include "twoterm/reliability.h"
#include "twoterm/rootfinder.h"

namespace twoterm {

// Requires deg(f) >= 2.
RootSet CriticalPoints(const Polynomial& f);

enum class OrbitOutcome { kEscaped, kBoundedHeuristic, kCycleDetected };
std::string OrbitOutcomeName(OrbitOutcome outcome);

struct OrbitVerdict {
  OrbitOutcome outcome = OrbitOutcome::kBoundedHeuristic;
  // Escape step, iterations performed, or cycle period.
  int step = 0;
  double max_modulus_seen = 0;
  double escape_radius = 0;
  // Set when an iterate overflowed to infinity or NaN.
  bool overflow = false;
  // Whether |f(z)| >= 2|z| was confirmed exactly at the escape point.
  bool escape_certified = false;
  // z_0, z_1, ... up to and including the last iterate computed.
  std::vector<std::complex<double>> orbit;
};

// Iterates z <- f(z) from z0 in double. Escaped at the first |z| > R_esc
// (certified divergence); cycle-detected when a point rounded to 12 decimals
// repeats; bounded-heuristic after max_iter steps otherwise.
OrbitVerdict ForwardOrbit(const Polynomial& f, std::complex<double> z0,
                          int max_iter = 1000);

// Exact check of |f(z)|^2 >= 4|z|^2 with z rounded to a rational point.
bool CertifyEscape(const Polynomial& f, std::complex<double> z);

// f^{on}(z) at 50 significant digits.
WideComplex IterateWide(const Polynomial& f, const WideComplex& z, int n);

struct CloudPoint {
  std::complex<double> z;
  int depth = 0;  // first level at which the point appeared
};

struct PointCloud {
  std::vector<CloudPoint> points;
  int depth = 0;  // levels performed
  bool budget_hit = false;
  // Preimages rejected because the solver's residual was too large.
  std::size_t dropped = 0;
};

struct InverseOrbitOptions {
  int depth = 10;
  // Largest frontier expanded with all preimages; beyond it every frontier
  // point contributes one seeded random preimage.
  std::size_t budget = 200000;
  std::uint64_t seed = 1;
  double resolution = 1e-9;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// Approximates the closure of the inverse orbit of 0. Requires deg(f) >= 2
// and f(0) = 0. Deterministic for a given seed regardless of thread count.
PointCloud InverseOrbit(const Polynomial& f,
                        const InverseOrbitOptions& options = {});

struct AttractorReport {
  Polynomial reliability;
  bool terminal_path = false;
  OriginReport origin;
  std::string structure;
  PointCloud cloud;
};

// The two-terminal attractor of a network: its reliability's inverse orbit
// of 0, or {0} when the pruned network is an s-t path.
AttractorReport Attractor(const Network& network,
                          const InverseOrbitOptions& options = {});

enum class Connectivity {
  kDisconnectedCertified,
  kConnectedHeuristic,
  kInconclusive,
};
std::string ConnectivityName(Connectivity verdict);

struct CriticalOrbit {
  std::complex<double> point;
  int multiplicity = 1;
  OrbitVerdict verdict;
};

struct ConnectivityVerdict {
  Connectivity verdict = Connectivity::kInconclusive;
  std::vector<CriticalOrbit> orbits;
};

// Forward orbits of every critical point: any certified escape means a
// disconnected Julia set; all orbits bounded or cyclic is only evidence of
// connectedness.
ConnectivityVerdict JuliaConnectivity(const Polynomial& f, int max_iter = 1000);

}  // namespace twoterm
