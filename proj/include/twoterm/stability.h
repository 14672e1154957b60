#pragma once

#include <complex>
#include <string>
#include <vector>

#include "twoterm/polynomial.h"

namespace twoterm {

enum class HermiteBiehlerCheck {
  kPassed,
  kLeadingSign,       // a nonzero part has a negative leading coefficient
  kNonRealRoots,      // a part has roots off the real line
  kPositiveRoots,     // a part has a positive real root
  kInterlacing,       // the root sequences do not interlace
};
std::string HermiteBiehlerCheckName(HermiteBiehlerCheck check);

// Distinct real root of f_even * f_odd with its multiplicity in each part.
struct InterlacingPoint {
  RealRootInterval location;
  int even_multiplicity = 0;
  int odd_multiplicity = 0;
};

struct HermiteBiehlerReport {
  bool weakly_stable = false;
  HermiteBiehlerCheck failed = HermiteBiehlerCheck::kPassed;
  // Which part failed: "even", "odd" or "" for interlacing.
  std::string failed_part;
  Polynomial normalized;  // f, negated when its leading coefficient is < 0
  Polynomial even;
  Polynomial odd;
  // Descending merged roots, filled when both parts are nonzero and pass the
  // real-root checks.
  std::vector<InterlacingPoint> merged;
  std::string detail;
};

// Weak stability (all roots in the closed left half-plane) by the
// Hermite-Biehler criterion on f(p) = E(p^2) + p O(p^2): both parts have
// positive leading coefficients and only real nonpositive roots, and their
// roots interlace as e_1 >= o_1 >= e_2 >= o_2 >= ... (largest root in E,
// multiplicities expanded, ties allowed). When one part vanishes the other
// only needs real nonpositive roots. Exact throughout. Throws DomainError on
// the zero polynomial.
HermiteBiehlerReport HermiteBiehler(const Polynomial& f);

enum class CycleParity { kBothEven, kNEvenKOdd, kNOddKEven, kBothOdd };
std::string CycleParityName(CycleParity parity);

struct CycleWitness {
  int n = 0;
  int k = 0;
  CycleParity parity = CycleParity::kBothEven;
  Polynomial g;  // p^(n-k) - p^(n-2k) - 1
  Polynomial f;  // (-1)^(n-k) g(-p)
  HermiteBiehlerReport stability;
  // Numeric roots of g with real part below -1e-7.
  std::vector<std::complex<double>> left_roots;
  bool numeric_agrees = false;  // not weakly stable and left_roots nonempty
};

// The cycle C_n with terminals at distance k has the nonzero roots of g; g
// has a root in the open left half-plane iff f does in the open right one.
// Throws DomainError unless n >= 3 and 1 <= k <= n/2.
CycleWitness CycleLeftHalfplaneWitness(int n, int k);

struct RealRootCensus {
  int degree = 0;
  int positive = 0;  // exact, with multiplicity
  int negative = 0;
  int zero = 0;
  int positive_bound = 0;  // sign changes of f
  int negative_bound = 0;  // sign changes of f(-p)

  int TotalReal() const { return positive + negative + zero; }
  bool AllReal() const { return TotalReal() == degree; }
  bool WithinBounds() const {
    return positive <= positive_bound && negative <= negative_bound;
  }
};

// Throws DomainError on the zero polynomial.
RealRootCensus CensusRealRoots(const Polynomial& f);

}  // namespace twoterm
