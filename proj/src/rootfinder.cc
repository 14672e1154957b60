#include "twoterm/rootfinder.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "twoterm/errors.h"

namespace twoterm {

int RootSet::Count() const {
  int total = zero_multiplicity;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

std::vector<std::complex<double>> RootSet::Expanded() const {
  std::vector<std::complex<double>> out(zero_multiplicity, 0.0);
  for (const auto& r : roots) out.insert(out.end(), r.multiplicity, r.value);
  return out;
}

namespace {

using Cd = std::complex<double>;
using Cl = std::complex<long double>;

template <typename C>
void HornerWithDerivative(const std::vector<C>& c, const C& z, C& value,
                          C& derivative) {
  value = c.back();
  derivative = C(0);
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    derivative = derivative * z + value;
    value = value * z + c[i];
  }
}

// One Gauss-Seidel Aberth sweep; returns the largest relative correction.
template <typename C, typename R>
R AberthSweep(const std::vector<C>& c, std::vector<C>& z) {
  R largest = 0;
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    C value, derivative;
    HornerWithDerivative(c, z[i], value, derivative);
    if (value == C(0)) continue;
    C sum(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum += C(1) / (z[i] - z[j]);
    }
    C denominator = derivative - value * sum;
    if (denominator == C(0)) denominator = C(R(1e-30));
    C step = value / denominator;
    z[i] -= step;
    R scale = std::max(R(abs(z[i])), R(1e-300));
    largest = std::max(largest, R(abs(step)) / scale);
  }
  return largest;
}

Quad QuadBackwardError(const std::vector<Quad>& c, const QuadComplex& z) {
  QuadComplex value(0);
  Quad magnitude = 0;
  Quad modulus = abs(z);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    value = value * z + QuadComplex(c[i]);
    magnitude = magnitude * modulus + abs(c[i]);
  }
  if (magnitude == 0) return 0;
  return abs(value) / magnitude;
}

QuadComplex ToQuadComplex(Cd z) {
  return QuadComplex(Quad(z.real()), Quad(z.imag()));
}

Cd ToCd(const QuadComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

struct Cluster {
  QuadComplex value;
  int size;
};

std::vector<Cluster> ClusterRoots(const std::vector<QuadComplex>& z,
                                  double radius) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(z[i] - z[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<Cluster> clusters;
  std::vector<int> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(clusters.size());
      clusters.push_back({QuadComplex(0), 0});
    }
    clusters[slot[r]].value += z[i];
    clusters[slot[r]].size += 1;
  }
  for (auto& c : clusters) c.value /= Quad(c.size);
  return clusters;
}

// Nonzero roots only; the power of p is taken from f.
double ReconstructionErrorQuad(const Polynomial& f,
                               const std::vector<QuadComplex>& roots) {
  std::vector<QuadComplex> product(f.Valuation(), QuadComplex(0));
  product.push_back(QuadComplex(ToQuad(f.LeadingCoefficient())));
  // Ascending coefficients; multiplying by (p - r) shifts up and subtracts r*.
  for (const auto& r : roots) {
    product.push_back(QuadComplex(0));
    for (std::size_t i = product.size() - 1; i > 0; --i) {
      product[i] = product[i - 1] - r * product[i];
    }
    product[0] = -r * product[0];
  }
  if (static_cast<int>(product.size()) != f.Degree() + 1) {
    return std::numeric_limits<double>::infinity();
  }
  Quad scale = 0;
  Quad worst = 0;
  for (int i = 0; i <= f.Degree(); ++i) {
    QuadComplex c(ToQuad(f[i]));
    scale = std::max(scale, Quad(abs(c)));
    worst = std::max(worst, Quad(abs(product[i] - c)));
  }
  return static_cast<double>(worst / scale);
}

}  // namespace

RootSet AllRootsUnchecked(const Polynomial& f, const RootOptions& options) {
  if (f.IsZero()) throw DomainError("roots of the zero polynomial");
  RootSet result;
  result.zero_multiplicity = f.Valuation();
  const Polynomial q = f.ShiftDown(result.zero_multiplicity);
  const int n = q.Degree();
  if (n == 0) return result;

  const Rational& lc = q.LeadingCoefficient();
  std::vector<Cd> monic(n + 1);
  std::vector<Quad> monic_quad(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rational c = q[i] / lc;
    monic[i] = c.get_d();
    monic_quad[i] = ToQuad(c);
  }

  // Half the Fujiwara bound; the Cauchy bound overflows z^n for iterated
  // compositions with huge middle coefficients.
  double radius = 0;
  for (int i = 0; i < n; ++i) {
    double a = std::abs(monic[i]);
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0 / (n - i)));
  }
  std::vector<Cd> z(n);
  for (int i = 0; i < n; ++i) {
    z[i] = std::polar(radius, 2 * std::numbers::pi * i / n + 0.4);
  }
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (AberthSweep<Cd, double>(monic, z) < 1e-14) break;
  }

  std::vector<QuadComplex> zq(n);
  std::vector<QuadComplex> cq(n + 1);
  for (int i = 0; i < n; ++i) zq[i] = ToQuadComplex(z[i]);
  for (int i = 0; i <= n; ++i) cq[i] = QuadComplex(monic_quad[i]);
  for (int step = 0; step < options.polish_steps; ++step) {
    if (AberthSweep<QuadComplex, Quad>(cq, zq) < Quad(1e-32)) break;
  }

  auto clusters = ClusterRoots(zq, options.cluster_radius);

  // A cluster of size m stands for a root of multiplicity m, which is a simple
  // root of the (m-1)-th derivative.
  for (auto& c : clusters) {
    if (c.size == 1) continue;
    std::vector<QuadComplex> d = cq;
    for (int order = 1; order < c.size; ++order) {
      for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = d[i] * Quad(i);
      d.pop_back();
    }
    for (int step = 0; step < options.polish_steps; ++step) {
      QuadComplex value, derivative;
      HornerWithDerivative(d, c.value, value, derivative);
      if (derivative == QuadComplex(0)) break;
      QuadComplex correction = value / derivative;
      if (abs(correction) > options.cluster_radius) break;
      c.value -= correction;
      if (abs(correction) <= Quad(1e-32) * abs(c.value)) break;
    }
  }

  // Coefficients are real: snap near-real roots and symmetrize pairs.
  const Quad tolerance = options.residual_tolerance;
  for (auto& c : clusters) {
    Quad im = abs(c.value.imag());
    if (im != 0 && im <= Quad(1e-10) * std::max(Quad(1), Quad(abs(c.value)))) {
      QuadComplex snapped(c.value.real(), Quad(0));
      if (QuadBackwardError(monic_quad, snapped) <= tolerance) c.value = snapped;
    }
  }
  std::vector<bool> paired(clusters.size(), false);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (paired[i] || clusters[i].value.imag() <= 0) continue;
    int best = -1;
    Quad best_distance = options.cluster_radius;
    for (std::size_t j = 0; j < clusters.size(); ++j) {
      if (paired[j] || clusters[j].value.imag() >= 0 ||
          clusters[j].size != clusters[i].size) {
        continue;
      }
      Quad d = abs(clusters[j].value - conj(clusters[i].value));
      if (d <= best_distance) {
        best_distance = d;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) continue;
    QuadComplex mean = (clusters[i].value + conj(clusters[best].value)) / Quad(2);
    clusters[i].value = mean;
    clusters[best].value = conj(mean);
    paired[i] = paired[best] = true;
  }

  for (const auto& c : clusters) {
    Root root;
    root.value = ToCd(c.value);
    root.residual = static_cast<double>(QuadBackwardError(monic_quad, c.value));
    root.multiplicity = c.size;
    if (!(root.residual <= options.residual_tolerance)) result.converged = false;
    result.roots.push_back(root);
  }
  {
    std::vector<QuadComplex> expanded;
    for (const auto& c : clusters) expanded.insert(expanded.end(), c.size, c.value);
    result.reconstruction_error = ReconstructionErrorQuad(f, expanded);
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const Root& a, const Root& b) {
              if (a.value.real() != b.value.real()) {
                return a.value.real() < b.value.real();
              }
              return a.value.imag() < b.value.imag();
            });
  if (!(result.reconstruction_error <= 1e-6)) result.converged = false;
  return result;
}

RootSet AllRoots(const Polynomial& f, const RootOptions& options) {
  RootSet result = AllRootsUnchecked(f, options);
  if (!result.converged) {
    double worst = 0;
    for (const auto& r : result.roots) worst = std::max(worst, r.residual);
    std::ostringstream message;
    message << "root finding did not converge for degree " << f.Degree()
            << " (worst residual " << worst << ", reconstruction error "
            << result.reconstruction_error << ")";
    throw ConvergenceError(message.str());
  }
  return result;
}

double ReconstructionError(const Polynomial& f, const RootSet& roots) {
  std::vector<QuadComplex> expanded;
  for (const auto& r : roots.roots) {
    expanded.insert(expanded.end(), r.multiplicity, ToQuadComplex(r.value));
  }
  return ReconstructionErrorQuad(f, expanded);
}

std::vector<Cl> SolveComplex(const std::vector<Cl>& coefficients) {
  std::size_t low = 0;
  while (low < coefficients.size() && coefficients[low] == Cl(0)) ++low;
  if (low == coefficients.size()) throw DomainError("zero polynomial");
  std::vector<Cl> c(coefficients.begin() + low, coefficients.end());
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Cl> roots(low, Cl(0));
  if (n == 0) return roots;
  const Cl lead = c.back();
  for (auto& x : c) x /= lead;

  long double radius = 0;
  for (int i = 0; i < n; ++i) {
    long double a = std::abs(c[i]);
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0L / (n - i)));
  }
  std::vector<Cl> z(n);
  for (int i = 0; i < n; ++i) {
    z[i] = std::polar(radius, 2 * std::numbers::pi_v<long double> * i / n + 0.4L);
  }
  for (int sweep = 0; sweep < 500; ++sweep) {
    if (AberthSweep<Cl, long double>(c, z) < 1e-18L) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

long double BackwardError(const std::vector<Cl>& coefficients, Cl z) {
  Cl value(0);
  long double magnitude = 0;
  long double modulus = std::abs(z);
  for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
    value = value * z + coefficients[i];
    magnitude = magnitude * modulus + std::abs(coefficients[i]);
  }
  if (magnitude == 0) return 0;
  return std::abs(value) / magnitude;
}

Region Region::LeftHalfPlane() { return {}; }

Region Region::OutsideDisk(std::complex<double> center, double radius) {
  Region r;
  r.kind = Kind::kOutsideDisk;
  r.center = center;
  r.radius = radius;
  return r;
}

Region Region::RealInterval(double a, double b) {
  Region r;
  r.kind = Kind::kRealInterval;
  r.a = a;
  r.b = b;
  return r;
}

int RegionMatch::Count() const {
  int total = 0;
  for (const auto& r : inside) total += r.multiplicity;
  return total;
}

int RegionMatch::AmbiguousCount() const {
  int total = 0;
  for (const auto& r : ambiguous) total += r.multiplicity;
  return total;
}

RegionMatch RegionFilter(const RootSet& roots, const Region& region,
                         double boundary_tolerance) {
  RegionMatch match;
  if (roots.zero_multiplicity > 0) {
    bool inside = false;
    switch (region.kind) {
      case Region::Kind::kLeftHalfPlane: inside = false; break;
      case Region::Kind::kOutsideDisk:
        inside = std::abs(region.center) > region.radius;
        break;
      case Region::Kind::kRealInterval:
        inside = region.a < 0 && 0 < region.b;
        break;
    }
    if (inside) match.inside.push_back({0.0, 0.0, roots.zero_multiplicity});
  }
  for (const auto& root : roots.roots) {
    const Cd z = root.value;
    double margin = 0;  // positive inside, negative outside
    switch (region.kind) {
      case Region::Kind::kLeftHalfPlane:
        margin = -z.real();
        break;
      case Region::Kind::kOutsideDisk:
        margin = std::abs(z - region.center) - region.radius;
        break;
      case Region::Kind::kRealInterval:
        if (std::abs(z.imag()) > boundary_tolerance) continue;
        margin = std::min(z.real() - region.a, region.b - z.real());
        if (z.imag() != 0) margin = std::min(margin, 0.0);
        break;
    }
    if (std::abs(margin) <= boundary_tolerance) {
      match.ambiguous.push_back(root);
    } else if (margin > 0) {
      match.inside.push_back(root);
    }
  }
  return match;
}

}  // namespace twoterm
