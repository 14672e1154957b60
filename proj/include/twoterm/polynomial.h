#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twoterm/precision.h"

namespace twoterm {

using Rational = mpq_class;
using Integer = mpz_class;

// Univariate polynomial in p with exact rational coefficients. Index i of the
// coefficient vector holds the coefficient of p^i; the highest stored
// coefficient is always nonzero, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial Constant(const Rational& c);
  static Polynomial Monomial(const Rational& c, int power);
  // The polynomial p.
  static Polynomial Identity();

  bool IsZero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  int Degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  // Index of the lowest nonzero coefficient (the multiplicity of the root at
  // zero); -1 for the zero polynomial.
  int Valuation() const;

  const std::vector<Rational>& Coefficients() const { return coefficients_; }
  // Coefficient of p^i, zero outside the stored range.
  Rational operator[](int i) const;
  const Rational& LeadingCoefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  Polynomial Pow(unsigned exponent) const;
  // this(inner(p)).
  Polynomial Compose(const Polynomial& inner) const;
  // this(-p).
  Polynomial Reflect() const;
  Polynomial Derivative() const;
  // Divides out p^k exactly; requires k <= Valuation().
  Polynomial ShiftDown(int k) const;

  Rational Evaluate(const Rational& x) const;
  std::complex<double> Evaluate(std::complex<double> z) const;
  QuadComplex Evaluate(const QuadComplex& z) const;
  // Exact evaluation at re + i*im; returns (real part, imaginary part).
  std::pair<Rational, Rational> EvaluateGaussian(const Rational& re,
                                                 const Rational& im) const;

  std::vector<double> ToDouble() const;
  std::vector<Quad> ToQuad() const;

  // Human-readable form in ascending powers, e.g. "2*p^2 - p^4".
  std::string ToString(const std::string& variable = "p") const;
  // Coefficients as decimal rational strings ("3", "-1/2"), ascending.
  std::vector<std::string> CoefficientStrings() const;
  static Polynomial FromCoefficientStrings(const std::vector<std::string>& c);

 private:
  void Normalize();

  std::vector<Rational> coefficients_;
};

Quad ToQuad(const Rational& x);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
// Euclidean division over the rationals. Throws DomainError on a zero divisor.
DivisionResult DivRem(const Polynomial& dividend, const Polynomial& divisor);
// Monic greatest common divisor; Gcd(0, 0) = 0.
Polynomial Gcd(Polynomial a, Polynomial b);
Polynomial MakeMonic(const Polynomial& f);
// Product of the distinct irreducible factors of f, made monic.
Polynomial SquareFreePart(const Polynomial& f);

struct SquareFreeFactor {
  Polynomial factor;  // monic, square-free, nonconstant
  int multiplicity;
};
// Yun's decomposition: f = c * prod factor_i^multiplicity_i.
std::vector<SquareFreeFactor> SquareFreeDecomposition(const Polynomial& f);

// Binomial coefficient C(n, k) as an exact integer.
Integer Binomial(unsigned n, unsigned k);

// Coefficients N_i in the basis p^i (1-p)^(m-i).
struct FForm {
  int m = 0;
  std::vector<Rational> counts;  // N_0 .. N_m

  bool IsIntegral() const;
  // 0 <= N_i <= C(m, i) for every i.
  bool IsBounded() const;
  // N_{i+1} * (i+1) >= N_i * (m-i): the count sequence of an upward-closed
  // family of subsets.
  bool IsUpwardClosed() const;
};

// Throws DomainError when deg(f) > m.
FForm ToFForm(const Polynomial& f, int m);
Polynomial FromFForm(const FForm& form);

// Descartes bound on positive roots: sign changes of the coefficient
// sequence, zeros skipped. Throws DomainError on the zero polynomial.
int SignChanges(const Polynomial& f);

struct EvenOddSplit {
  Polynomial even;  // sum a_{2i} x^i
  Polynomial odd;   // sum a_{2i+1} x^i
};
// f(p) = even(p^2) + p * odd(p^2).
EvenOddSplit SplitEvenOdd(const Polynomial& f);

// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& square_free);

  // Distinct real roots in (lower, upper]; std::nullopt means infinite.
  int CountRoots(const std::optional<Rational>& lower,
                 const std::optional<Rational>& upper) const;
  const Polynomial& Base() const { return chain_.front(); }

 private:
  int VariationsAt(const Rational& x) const;
  int VariationsAtInfinity(bool positive) const;

  std::vector<Polynomial> chain_;
};

// An isolated real root. When `exact` is set the root equals `lower` (and
// `upper`); otherwise it is the unique root of the square-free part of the
// polynomial in the open interval (lower, upper).
struct RealRootInterval {
  Rational lower;
  Rational upper;
  bool exact = false;
  int multiplicity = 1;

  Rational Width() const { return upper - lower; }
  double Midpoint() const;
};

// Real roots of f in ascending order, disjoint intervals, exact
// multiplicities. Throws DomainError on the zero polynomial.
std::vector<RealRootInterval> IsolateRealRoots(const Polynomial& f);
// Bisects an isolating interval of a root of f until its width is <= width.
RealRootInterval RefineRealRoot(const Polynomial& f, RealRootInterval root,
                                const Rational& width);

struct BoundsReport {
  double cauchy_bound = 0;   // 1 + C/|c_d|
  double escape_radius = 0;  // max(1, (C*d + 2)/|c_d|)
  double hickman_r = 0;      // max((2/|c_d|)^(1/(d-1)), C/|c_d| + 1)
};
// Throws DomainError when deg(f) < 2.
BoundsReport RootBounds(const Polynomial& f);
// 1 + max|c_i|/|c_d| for any nonconstant polynomial.
double CauchyBound(const Polynomial& f);

}  // namespace twoterm
