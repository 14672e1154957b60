#include "twoterm/polynomial.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twoterm/errors.h"

namespace twoterm {

namespace {

const Rational& ZeroRational() {
  static const Rational zero(0);
  return zero;
}

int Sign(const Rational& x) { return sgn(x); }

Rational Abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  Normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long c : coefficients) coefficients_.emplace_back(c);
  Normalize();
}

Polynomial Polynomial::Constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::Monomial(const Rational& c, int power) {
  if (power < 0) throw DomainError("negative monomial power");
  std::vector<Rational> coefficients(power + 1);
  coefficients[power] = c;
  return Polynomial(std::move(coefficients));
}

Polynomial Polynomial::Identity() { return Monomial(1, 1); }

void Polynomial::Normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

int Polynomial::Valuation() const {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational Polynomial::operator[](int i) const {
  if (i < 0 || i > Degree()) return 0;
  return coefficients_[i];
}

const Rational& Polynomial::LeadingCoefficient() const {
  return IsZero() ? ZeroRational() : coefficients_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial result = *this;
  for (auto& c : result.coefficients_) c = -c;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  Normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  Normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.IsZero() || b.IsZero()) return {};
  std::vector<Rational> product(a.coefficients_.size() +
                                b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(product));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

Polynomial Polynomial::Pow(unsigned exponent) const {
  Polynomial result = Constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::Compose(const Polynomial& inner) const {
  Polynomial result;
  for (int i = Degree(); i >= 0; --i) {
    result *= inner;
    result += Constant(coefficients_[i]);
  }
  return result;
}

Polynomial Polynomial::Reflect() const {
  Polynomial result = *this;
  for (std::size_t i = 1; i < result.coefficients_.size(); i += 2) {
    result.coefficients_[i] = -result.coefficients_[i];
  }
  return result;
}

Polynomial Polynomial::Derivative() const {
  if (Degree() < 1) return {};
  std::vector<Rational> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d[i - 1] = coefficients_[i] * static_cast<long>(i);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::ShiftDown(int k) const {
  if (k < 0 || (k > 0 && (IsZero() || k > Valuation()))) {
    throw DomainError("ShiftDown: p^k does not divide the polynomial");
  }
  if (IsZero()) return {};
  return Polynomial(std::vector<Rational>(coefficients_.begin() + k,
                                          coefficients_.end()));
}

Rational Polynomial::Evaluate(const Rational& x) const {
  Rational acc = 0;
  for (int i = Degree(); i >= 0; --i) acc = acc * x + coefficients_[i];
  return acc;
}

std::complex<double> Polynomial::Evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (int i = Degree(); i >= 0; --i) acc = acc * z + coefficients_[i].get_d();
  return acc;
}

QuadComplex Polynomial::Evaluate(const QuadComplex& z) const {
  QuadComplex acc(0);
  for (int i = Degree(); i >= 0; --i) {
    acc = acc * z + QuadComplex(twoterm::ToQuad(coefficients_[i]));
  }
  return acc;
}

std::pair<Rational, Rational> Polynomial::EvaluateGaussian(
    const Rational& re, const Rational& im) const {
  Rational acc_re = 0, acc_im = 0;
  for (int i = Degree(); i >= 0; --i) {
    Rational next_re = acc_re * re - acc_im * im + coefficients_[i];
    Rational next_im = acc_re * im + acc_im * re;
    acc_re = std::move(next_re);
    acc_im = std::move(next_im);
  }
  return {acc_re, acc_im};
}

std::vector<double> Polynomial::ToDouble() const {
  std::vector<double> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c.get_d());
  return out;
}

std::vector<Quad> Polynomial::ToQuad() const {
  std::vector<Quad> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(twoterm::ToQuad(c));
  return out;
}

Quad ToQuad(const Rational& x) {
  if (x.get_den() == 1) return Quad(x.get_num().get_str());
  return Quad(x.get_num().get_str()) / Quad(x.get_den().get_str());
}

std::string Polynomial::ToString(const std::string& variable) const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= Degree(); ++i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    Rational magnitude = Abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = magnitude == 1;
    if (i == 0 || !unit) out << magnitude.get_str();
    if (i == 0) continue;
    if (!unit) out << "*";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::vector<std::string> Polynomial::CoefficientStrings() const {
  std::vector<std::string> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c.get_str());
  return out;
}

Polynomial Polynomial::FromCoefficientStrings(
    const std::vector<std::string>& c) {
  std::vector<Rational> coefficients;
  coefficients.reserve(c.size());
  for (const auto& s : c) {
    Rational value;
    if (value.set_str(s, 10) != 0) {
      throw DomainError("malformed rational coefficient: " + s);
    }
    coefficients.push_back(value);
  }
  return Polynomial(std::move(coefficients));
}

DivisionResult DivRem(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.IsZero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> remainder = dividend.Coefficients();
  const int dd = divisor.Degree();
  const int n = dividend.Degree();
  if (n < dd) return {Polynomial(), dividend};
  std::vector<Rational> quotient(n - dd + 1);
  const Rational& lead = divisor.LeadingCoefficient();
  for (int i = n; i >= dd; --i) {
    if (remainder[i] == 0) continue;
    Rational q = remainder[i] / lead;
    quotient[i - dd] = q;
    for (int j = 0; j <= dd; ++j) remainder[i - dd + j] -= q * divisor[j];
  }
  remainder.resize(dd);
  return {Polynomial(std::move(quotient)), Polynomial(std::move(remainder))};
}

Polynomial MakeMonic(const Polynomial& f) {
  if (f.IsZero()) return f;
  Rational inv = 1 / f.LeadingCoefficient();
  return f * inv;
}

Polynomial Gcd(Polynomial a, Polynomial b) {
  while (!b.IsZero()) {
    Polynomial r = DivRem(a, b).remainder;
    a = std::move(b);
    b = MakeMonic(r);
  }
  return MakeMonic(a);
}

Polynomial SquareFreePart(const Polynomial& f) {
  if (f.Degree() < 1) return MakeMonic(f);
  Polynomial g = Gcd(f, f.Derivative());
  return MakeMonic(DivRem(f, g).quotient);
}

std::vector<SquareFreeFactor> SquareFreeDecomposition(const Polynomial& f) {
  std::vector<SquareFreeFactor> factors;
  if (f.Degree() < 1) return factors;
  Polynomial a = Gcd(f, f.Derivative());
  Polynomial b = DivRem(f, a).quotient;
  Polynomial c = DivRem(f.Derivative(), a).quotient;
  Polynomial d = c - b.Derivative();
  for (int i = 1; b.Degree() >= 1; ++i) {
    Polynomial ai = Gcd(b, d);
    b = DivRem(b, ai).quotient;
    c = DivRem(d, ai).quotient;
    d = c - b.Derivative();
    if (ai.Degree() >= 1) factors.push_back({MakeMonic(ai), i});
  }
  return factors;
}

Integer Binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

bool FForm::IsIntegral() const {
  return std::all_of(counts.begin(), counts.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

bool FForm::IsBounded() const {
  for (int i = 0; i <= m; ++i) {
    if (counts[i] < 0 || counts[i] > Rational(Binomial(m, i))) return false;
  }
  return true;
}

bool FForm::IsUpwardClosed() const {
  for (int i = 0; i < m; ++i) {
    if (counts[i + 1] * (i + 1) < counts[i] * (m - i)) return false;
  }
  return true;
}

FForm ToFForm(const Polynomial& f, int m) {
  if (m < 0 || f.Degree() > m) {
    throw DomainError("F-form needs deg(f) <= m");
  }
  // p^j = sum_{i>=j} C(m-j, i-j) p^i (1-p)^(m-i).
  FForm form{m, std::vector<Rational>(m + 1)};
  for (int j = 0; j <= f.Degree(); ++j) {
    if (f[j] == 0) continue;
    for (int i = j; i <= m; ++i) {
      form.counts[i] += f[j] * Rational(Binomial(m - j, i - j));
    }
  }
  return form;
}

Polynomial FromFForm(const FForm& form) {
  if (form.m < 0 || static_cast<int>(form.counts.size()) != form.m + 1) {
    throw DomainError("F-form must carry m + 1 counts");
  }
  const Polynomial one_minus_p({1, -1});
  Polynomial result;
  for (int i = 0; i <= form.m; ++i) {
    if (form.counts[i] == 0) continue;
    result += Polynomial::Monomial(form.counts[i], i) *
              one_minus_p.Pow(form.m - i);
  }
  return result;
}

int SignChanges(const Polynomial& f) {
  if (f.IsZero()) throw DomainError("sign changes of the zero polynomial");
  int changes = 0;
  int last = 0;
  for (const auto& c : f.Coefficients()) {
    int s = Sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

EvenOddSplit SplitEvenOdd(const Polynomial& f) {
  std::vector<Rational> even, odd;
  for (int i = 0; i <= f.Degree(); ++i) {
    (i % 2 == 0 ? even : odd).push_back(f[i]);
  }
  return {Polynomial(std::move(even)), Polynomial(std::move(odd))};
}

SturmSequence::SturmSequence(const Polynomial& square_free) {
  if (square_free.IsZero()) throw DomainError("Sturm sequence of zero");
  chain_.push_back(square_free);
  if (square_free.Degree() < 1) return;
  chain_.push_back(square_free.Derivative());
  while (chain_.back().Degree() > 0) {
    Polynomial r = DivRem(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.IsZero()) break;
    // Positive rescaling keeps signs and curbs coefficient growth.
    Rational scale = 1 / Abs(r.LeadingCoefficient());
    chain_.push_back(-(r * scale));
  }
}

int SturmSequence::VariationsAt(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = Sign(p.Evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::VariationsAtInfinity(bool positive) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = Sign(p.LeadingCoefficient());
    if (!positive && p.Degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::CountRoots(const std::optional<Rational>& lower,
                              const std::optional<Rational>& upper) const {
  int at_lower = lower ? VariationsAt(*lower) : VariationsAtInfinity(false);
  int at_upper = upper ? VariationsAt(*upper) : VariationsAtInfinity(true);
  return at_lower - at_upper;
}

double RealRootInterval::Midpoint() const {
  Rational mid = (lower + upper) / 2;
  return mid.get_d();
}

namespace {

Rational RationalCauchyBound(const Polynomial& f) {
  Rational max_ratio = 0;
  for (int i = 0; i < f.Degree(); ++i) {
    Rational r = Abs(f[i] / f.LeadingCoefficient());
    if (r > max_ratio) max_ratio = r;
  }
  return max_ratio + 1;
}

void Bisect(const SturmSequence& sturm, const Rational& lower,
            const Rational& upper, int count,
            std::vector<RealRootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    if (sturm.Base().Evaluate(upper) == 0) {
      out.push_back({upper, upper, true, 1});
    } else {
      out.push_back({lower, upper, false, 1});
    }
    return;
  }
  Rational mid = (lower + upper) / 2;
  int left = sturm.CountRoots(lower, mid);
  Bisect(sturm, lower, mid, left, out);
  Bisect(sturm, mid, upper, count - left, out);
}

bool FactorVanishesIn(const Polynomial& factor, const RealRootInterval& root) {
  if (root.exact) return factor.Evaluate(root.lower) == 0;
  SturmSequence sturm(factor);
  return sturm.CountRoots(root.lower, root.upper) > 0;
}

}  // namespace

std::vector<RealRootInterval> IsolateRealRoots(const Polynomial& f) {
  if (f.IsZero()) throw DomainError("real roots of the zero polynomial");
  std::vector<RealRootInterval> roots;
  if (f.Degree() < 1) return roots;
  Polynomial g = SquareFreePart(f);
  SturmSequence sturm(g);
  Rational bound = RationalCauchyBound(g);
  int total = sturm.CountRoots(-bound, bound);
  Bisect(sturm, -bound, bound, total, roots);

  auto factors = SquareFreeDecomposition(f);
  for (auto& root : roots) {
    for (const auto& [factor, multiplicity] : factors) {
      if (FactorVanishesIn(factor, root)) {
        root.multiplicity = multiplicity;
        break;
      }
    }
  }
  return roots;
}

RealRootInterval RefineRealRoot(const Polynomial& f, RealRootInterval root,
                                const Rational& width) {
  if (root.exact || root.Width() <= width) return root;
  Polynomial g = SquareFreePart(f);
  SturmSequence sturm(g);
  while (!root.exact && root.Width() > width) {
    Rational mid = (root.lower + root.upper) / 2;
    if (g.Evaluate(mid) == 0) {
      root.lower = root.upper = mid;
      root.exact = true;
    } else if (sturm.CountRoots(root.lower, mid) > 0) {
      root.upper = mid;
    } else {
      root.lower = mid;
    }
  }
  return root;
}

double CauchyBound(const Polynomial& f) {
  if (f.Degree() < 1) throw DomainError("Cauchy bound of a constant");
  return RationalCauchyBound(f).get_d();
}

BoundsReport RootBounds(const Polynomial& f) {
  const int d = f.Degree();
  if (d < 2) throw DomainError("root bounds need degree >= 2");
  Rational c = 0;
  for (int i = 0; i < d; ++i) c = std::max(c, Abs(f[i]));
  Rational lead = Abs(f.LeadingCoefficient());
  BoundsReport report;
  report.cauchy_bound = Rational(1 + c / lead).get_d();
  report.escape_radius =
      std::max(1.0, Rational((c * d + 2) / lead).get_d());
  report.hickman_r =
      std::max(std::pow(Rational(2 / lead).get_d(), 1.0 / (d - 1)),
               Rational(c / lead + 1).get_d());
  return report;
}

}  // namespace twoterm
