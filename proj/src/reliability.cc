#include "twoterm/reliability.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "twoterm/errors.h"

namespace twoterm {

Polynomial ReliabilitySolver::Compute(const Network& network) {
  const auto& g = network.graph;
  WeightedGraph graph;
  graph.vertex_count = static_cast<int>(g.Order());
  graph.s = static_cast<int>(g.IndexOf(network.terminals.s));
  graph.t = static_cast<int>(g.IndexOf(network.terminals.t));
  if (graph.s == graph.t) throw GraphError("terminals must be distinct");
  const Polynomial p = Polynomial::Identity();
  for (const auto& e : g.Edges()) {
    graph.edges.push_back({static_cast<int>(g.IndexOf(e.u)),
                           static_cast<int>(g.IndexOf(e.v)), p});
  }
  return Solve(std::move(graph));
}

std::size_t ReliabilitySolver::CacheSize() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::vector<std::pair<std::string, Polynomial>> ReliabilitySolver::Snapshot()
    const {
  std::vector<std::pair<std::string, Polynomial>> entries;
  {
    std::shared_lock lock(mutex_);
    entries.assign(memo_.begin(), memo_.end());
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return entries;
}

void ReliabilitySolver::Insert(const std::string& key,
                               const Polynomial& value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(key, value);
}

namespace {

Polynomial ParallelMerge(const Polynomial& a, const Polynomial& b) {
  return a + b - a * b;
}

}  // namespace

bool ReliabilitySolver::Reduce(WeightedGraph& graph, Polynomial& value) {
  std::vector<detail::IndexedEdge> indexed;
  indexed.reserve(graph.edges.size());
  for (const auto& e : graph.edges) indexed.push_back({e.u, e.v});
  auto relevant =
      detail::RelevantEdges(graph.vertex_count, indexed, graph.s, graph.t);
  if (!relevant) {
    value = Polynomial();
    return false;
  }
  std::vector<WeightedEdge> kept;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    if ((*relevant)[i]) kept.push_back(std::move(graph.edges[i]));
  }
  graph.edges = std::move(kept);

  bool changed = true;
  while (changed) {
    changed = false;

    std::map<std::pair<int, int>, std::size_t> slot;
    std::vector<WeightedEdge> merged;
    for (auto& e : graph.edges) {
      auto key = std::minmax(e.u, e.v);
      auto [it, inserted] = slot.emplace(key, merged.size());
      if (inserted) {
        merged.push_back(std::move(e));
      } else {
        merged[it->second].weight =
            ParallelMerge(merged[it->second].weight, e.weight);
        changed = true;
      }
    }
    graph.edges = std::move(merged);

    std::vector<std::vector<int>> incident(graph.vertex_count);
    for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
      incident[graph.edges[i].u].push_back(i);
      incident[graph.edges[i].v].push_back(i);
    }
    std::vector<bool> dirty(graph.vertex_count, false);
    std::vector<bool> dead(graph.edges.size(), false);
    for (int v = 0; v < graph.vertex_count; ++v) {
      if (v == graph.s || v == graph.t || dirty[v]) continue;
      if (incident[v].size() != 2) continue;
      auto& first = graph.edges[incident[v][0]];
      auto& second = graph.edges[incident[v][1]];
      int a = first.u == v ? first.v : first.u;
      int b = second.u == v ? second.v : second.u;
      if (dirty[a] || dirty[b]) continue;
      // a == b cannot survive pruning and parallel merging.
      first.u = a;
      first.v = b;
      first.weight = first.weight * second.weight;
      dead[incident[v][1]] = true;
      dirty[v] = dirty[a] = dirty[b] = true;
      changed = true;
    }
    std::vector<WeightedEdge> alive;
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      if (!dead[i]) alive.push_back(std::move(graph.edges[i]));
    }
    graph.edges = std::move(alive);
  }

  // Compact vertex numbering to the vertices still in use.
  std::vector<int> rename(graph.vertex_count, -1);
  int next = 0;
  rename[graph.s] = next++;
  rename[graph.t] = next++;
  for (auto& e : graph.edges) {
    for (int* end : {&e.u, &e.v}) {
      if (rename[*end] == -1) rename[*end] = next++;
      *end = rename[*end];
    }
  }
  graph.vertex_count = next;
  graph.s = 0;
  graph.t = 1;

  if (graph.edges.size() == 1) {
    value = graph.edges.front().weight;
    return false;
  }
  return true;
}

std::string ReliabilitySolver::Key(const WeightedGraph& graph) {
  std::vector<detail::IndexedEdge> indexed;
  for (const auto& e : graph.edges) indexed.push_back({e.u, e.v});
  std::vector<int> tie_rank(graph.vertex_count);
  std::iota(tie_rank.begin(), tie_rank.end(), 0);
  auto order = detail::CanonicalOrder(graph.vertex_count, indexed, graph.s,
                                      graph.t, tie_rank);
  std::vector<std::string> parts;
  parts.reserve(graph.edges.size());
  for (const auto& e : graph.edges) {
    int a = order[e.u], b = order[e.v];
    std::ostringstream part;
    part << std::min(a, b) << "-" << std::max(a, b) << ":";
    for (const auto& c : e.weight.CoefficientStrings()) part << c << ",";
    parts.push_back(part.str());
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream key;
  key << "w" << graph.vertex_count << ";t" << order[graph.t] << ";";
  for (const auto& part : parts) key << part << "|";
  return key.str();
}

Polynomial ReliabilitySolver::Solve(WeightedGraph graph) {
  Polynomial value;
  if (!Reduce(graph, value)) return value;
  const std::string key = Key(graph);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ++branches_;

  std::vector<int> degree(graph.vertex_count, 0);
  for (const auto& e : graph.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  int chosen = -1;
  int best_degree = -1;
  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
    const auto& e = graph.edges[i];
    if (e.u != graph.s && e.v != graph.s) continue;
    int other = e.u == graph.s ? e.v : e.u;
    if (degree[other] > best_degree) {
      best_degree = degree[other];
      chosen = i;
    }
  }
  const WeightedEdge edge = graph.edges[chosen];
  const int other = edge.u == graph.s ? edge.v : edge.u;

  WeightedGraph deleted = graph;
  deleted.edges.erase(deleted.edges.begin() + chosen);

  Polynomial contracted_value;
  if (other == graph.t) {
    contracted_value = Polynomial::Constant(1);
  } else {
    WeightedGraph contracted;
    contracted.vertex_count = graph.vertex_count;
    contracted.s = graph.s;
    contracted.t = graph.t;
    for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
      if (i == chosen) continue;
      WeightedEdge e = graph.edges[i];
      if (e.u == other) e.u = graph.s;
      if (e.v == other) e.v = graph.s;
      if (e.u != e.v) contracted.edges.push_back(std::move(e));
    }
    contracted_value = Solve(std::move(contracted));
  }
  Polynomial result = edge.weight * contracted_value +
                      (Polynomial::Constant(1) - edge.weight) *
                          Solve(std::move(deleted));
  Insert(key, result);
  return result;
}

Polynomial TwoTerminalReliability(const Network& network) {
  ReliabilitySolver solver;
  return solver.Compute(network);
}

Polynomial FamilyReliability(const FamilySpec& spec) {
  spec.Validate();
  const Polynomial p = Polynomial::Identity();
  const Polynomial one = Polynomial::Constant(1);
  switch (spec.family) {
    case Family::kCycle:
      return Polynomial::Monomial(1, spec.k) +
             Polynomial::Monomial(1, spec.n - spec.k) -
             Polynomial::Monomial(1, spec.n);
    case Family::kTheta:
      return one - (one - Polynomial::Monomial(1, spec.l)).Pow(spec.k);
    case Family::kBundle:
      return one - (one - p).Pow(spec.m);
    case Family::kPath:
      return Polynomial::Monomial(1, spec.l);
  }
  return {};
}

Polynomial ComposeGadget(const Network& host, const Network& gadget) {
  ReliabilitySolver solver;
  return solver.Compute(host).Compose(solver.Compute(gadget));
}

OriginReport ClassifyOrigin(const Polynomial& f) {
  if (f[0] != 0) throw DomainError("origin is not a fixed point: f(0) != 0");
  Rational multiplier = f[1];
  Rational magnitude = abs(multiplier);
  OriginKind kind;
  if (magnitude == 0) {
    kind = OriginKind::kSuperattracting;
  } else if (magnitude < 1) {
    kind = OriginKind::kAttracting;
  } else if (magnitude == 1) {
    kind = OriginKind::kRationallyIndifferent;
  } else {
    kind = OriginKind::kRepelling;
  }
  return {kind, multiplier};
}

std::string OriginKindName(OriginKind kind) {
  switch (kind) {
    case OriginKind::kSuperattracting: return "superattracting";
    case OriginKind::kAttracting: return "attracting";
    case OriginKind::kRationallyIndifferent: return "rationally-indifferent";
    case OriginKind::kRepelling: return "repelling";
  }
  return "";
}

namespace {

QuadComplex PowQuad(QuadComplex base, long exponent) {
  QuadComplex result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

QuadComplex ToQuadComplex(std::complex<double> z) {
  return QuadComplex(Quad(z.real()), Quad(z.imag()));
}

std::complex<double> ToDouble(const QuadComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// All m-th roots of w, computed in quad precision.
std::vector<QuadComplex> RootsOf(const QuadComplex& w, int m) {
  const Quad two_pi = 2 * boost::math::constants::pi<Quad>();
  Quad modulus = pow(abs(w), Quad(1) / m);
  Quad angle = atan2(w.imag(), w.real());
  std::vector<QuadComplex> roots;
  roots.reserve(m);
  for (int q = 0; q < m; ++q) {
    Quad a = (angle + two_pi * q) / m;
    roots.emplace_back(modulus * cos(a), modulus * sin(a));
  }
  return roots;
}

}  // namespace

double ThetaResidual(std::complex<double> z, int l, int k) {
  QuadComplex x = ToQuadComplex(z);
  QuadComplex inner = QuadComplex(1) - PowQuad(x, l);
  return static_cast<double>(abs(QuadComplex(1) - PowQuad(inner, k)));
}

namespace {

// Smallest-denominator fraction j/k in the open interval (x, y), 0 <= x < y
// <= 1, found by descending the Stern-Brocot tree in batched steps.
std::optional<std::pair<long, long>> SimplestFraction(long double x,
                                                      long double y,
                                                      long max_den) {
  long ln = 0, ld = 1, hn = 1, hd = 0;
  while (true) {
    const long mn = ln + hn, md = ld + hd;
    if (md > max_den) return std::nullopt;
    const long double m = static_cast<long double>(mn) / md;
    if (m <= x) {
      // Largest t with (ln + t hn) / (ld + t hd) <= x.
      long double t = std::floor((x * ld - ln) / (hn - x * hd));
      long step = std::max(1L, static_cast<long>(std::min<long double>(t, max_den)));
      while (step > 1 && static_cast<long double>(ln + step * hn) / (ld + step * hd) > x) --step;
      ln += step * hn;
      ld += step * hd;
    } else if (m >= y) {
      long double t = hd == 0 ? 1 : std::floor((hn - y * hd) / (y * ld - ln));
      long step = std::max(1L, static_cast<long>(std::min<long double>(t, max_den)));
      while (step > 1 && static_cast<long double>(hn + step * ln) / (hd + step * ld) < y) --step;
      hn += step * ln;
      hd += step * ld;
    } else {
      return std::make_pair(mn, md);
    }
    if (ld > max_den && hd > max_den) return std::nullopt;
  }
}

}  // namespace

ThetaRootHit FindRootNearDiskZero(std::complex<double> target, double eps,
                                  const ThetaSearchLimits& limits) {
  const double radius = std::abs(target);
  if (!(radius > 0 && radius < 1)) {
    throw DomainError("target must satisfy 0 < |target| < 1");
  }
  if (!(eps > 0)) throw DomainError("eps must be positive");
  constexpr double kPi = std::numbers::pi;
  constexpr double kTwoPi = 2 * kPi;

  auto validate = [&](int l, long k, long j) {
    const Quad two_pi = 2 * boost::math::constants::pi<Quad>();
    Quad angle = two_pi * j / k;
    QuadComplex wq = QuadComplex(1) - QuadComplex(cos(angle), sin(angle));
    QuadComplex nearest;
    Quad nearest_distance = -1;
    for (const auto& r : RootsOf(wq, l)) {
      Quad d = abs(r - ToQuadComplex(target));
      if (nearest_distance < 0 || d < nearest_distance) {
        nearest_distance = d;
        nearest = r;
      }
    }
    ThetaRootHit hit;
    hit.l = l;
    hit.k = static_cast<int>(k);
    hit.j = static_cast<int>(j);
    hit.root = ToDouble(nearest);
    hit.distance = std::abs(hit.root - target);
    hit.residual = ThetaResidual(hit.root, l, hit.k);
    hit.found = hit.distance < eps && hit.residual < limits.residual_tolerance;
    return hit;
  };

  // For omega = e^{i alpha}, 1 - omega = 2 sin(alpha/2) e^{i(alpha - pi)/2},
  // so each branch q of the l-th root traces a curve nu_q(alpha). For every l
  // the alpha-intervals whose root lands in the eps-disk are located by
  // sampling the modulus and bisecting, then j/k is the simplest fraction in
  // the interval. The hit of least degree l*k wins.
  std::optional<ThetaRootHit> best_hit;
  double best_miss = std::numeric_limits<double>::infinity();
  int miss_l = 1;
  double miss_alpha = kPi;
  constexpr int kSamples = 64;
  const double rho_lo = std::max(radius - eps, 0.0);
  const double rho_hi = radius + eps;
  const double target_arg = std::arg(target);

  for (int l = 1; l <= limits.max_l; ++l) {
    if (best_hit && static_cast<long>(l) * 2 > static_cast<long>(best_hit->l) * best_hit->k) break;
    const double top = std::pow(2.0, 1.0 / l);
    auto alpha_of = [&](double rho) {
      return 2 * std::asin(std::min(1.0, std::pow(rho, l) / 2));
    };
    const double a_lo = alpha_of(rho_lo);
    const double a_hi = alpha_of(std::min(rho_hi, top));
    for (int side = 0; side < 2; ++side) {
      // side 0: alpha in [a_lo, a_hi]; side 1: the mirror 2 pi - alpha.
      auto alpha_at = [&](double s) {
        double a = a_lo + (a_hi - a_lo) * s;
        return side == 0 ? a : kTwoPi - a;
      };
      const double mid_arg = (alpha_at(0.5) / 2 - kPi / 2);
      const long q0 = std::lround((target_arg * l - mid_arg) / kTwoPi);
      for (long q = q0 - 1; q <= q0 + 1; ++q) {
        auto gap = [&](double s) {
          double a = alpha_at(s);
          double modulus = std::pow(2 * std::sin(a / 2), 1.0 / l);
          std::complex<double> nu =
              std::polar(modulus, (a / 2 - kPi / 2 + kTwoPi * q) / l);
          return std::abs(nu - target) - eps;
        };
        std::array<double, kSamples + 1> g;
        int argmin = 0;
        for (int i = 0; i <= kSamples; ++i) {
          g[i] = gap(static_cast<double>(i) / kSamples);
          if (g[i] < g[argmin]) argmin = i;
        }
        // Golden-section refinement of the minimum between samples.
        double lo = std::max(0, argmin - 1) / static_cast<double>(kSamples);
        double hi = std::min(kSamples, argmin + 1) / static_cast<double>(kSamples);
        for (int it = 0; it < 80; ++it) {
          double m1 = lo + (hi - lo) * 0.381966, m2 = hi - (hi - lo) * 0.381966;
          if (gap(m1) < gap(m2)) hi = m2; else lo = m1;
        }
        const double s_min = (lo + hi) / 2;
        const double g_min = gap(s_min);
        if (g_min >= 0) {
          if (g_min < best_miss) {
            best_miss = g_min;
            miss_l = l;
            miss_alpha = alpha_at(s_min);
          }
          continue;
        }
        // Expand around s_min to the boundary of {gap < 0}.
        auto edge = [&](double inside, double step) {
          double outside = inside;
          while (true) {
            outside = std::clamp(outside + step, 0.0, 1.0);
            if (gap(outside) >= 0) break;
            inside = outside;
            if (outside == 0.0 || outside == 1.0) return inside;
          }
          for (int it = 0; it < 100; ++it) {
            double m = (inside + outside) / 2;
            (gap(m) < 0 ? inside : outside) = m;
          }
          return inside;
        };
        const double s1 = edge(s_min, -1.0 / kSamples);
        const double s2 = edge(s_min, 1.0 / kSamples);
        long double x = alpha_at(s1) / kTwoPi, y = alpha_at(s2) / kTwoPi;
        if (x > y) std::swap(x, y);
        if (!(x < y)) {
          long double c = alpha_at(s_min) / kTwoPi;
          x = std::nextafter(c, 0.0L);
          y = std::nextafter(c, 1.0L);
        }
        auto fraction = SimplestFraction(x, y, limits.max_k);
        if (!fraction || fraction->second < 2) continue;
        const auto [j, k] = *fraction;
        if (best_hit && static_cast<long>(l) * k >=
                            static_cast<long>(best_hit->l) * best_hit->k) {
          continue;
        }
        ThetaRootHit hit = validate(l, k, j);
        if (hit.found) {
          best_hit = hit;
        } else if (hit.distance - eps < best_miss) {
          best_miss = hit.distance - eps;
          miss_l = l;
          miss_alpha = kTwoPi * j / k;
        }
      }
    }
  }
  if (best_hit) return *best_hit;
  // Best miss: nearest fraction to the closest angle within the limits.
  const long double x = miss_alpha / kTwoPi;
  long best_j = 1, best_k = 2;
  long double best_error = std::numeric_limits<long double>::infinity();
  for (long k = 2; k <= std::min<long>(limits.max_k, 1 << 16); ++k) {
    long j = std::clamp(std::lround(x * k), 1L, k - 1);
    long double error = std::fabs(static_cast<long double>(j) / k - x);
    if (error < best_error) {
      best_error = error;
      best_j = j;
      best_k = k;
    }
  }
  return validate(miss_l, best_k, best_j);
}

std::vector<std::complex<double>> LiftRootsDiskOne(std::complex<double> r,
                                                   int m) {
  if (m < 1) throw DomainError("bundle size must be at least 1");
  std::vector<std::complex<double>> lifted;
  lifted.reserve(m);
  for (const auto& zeta : RootsOf(QuadComplex(1) - ToQuadComplex(r), m)) {
    lifted.push_back(ToDouble(QuadComplex(1) - zeta));
  }
  return lifted;
}

}  // namespace twoterm
