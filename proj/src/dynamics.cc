#include "twoterm/dynamics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>
#include <unordered_map>

#include "twoterm/errors.h"

namespace twoterm {

RootSet CriticalPoints(const Polynomial& f) {
  if (f.Degree() < 2) throw DomainError("critical points need degree >= 2");
  return AllRoots(f.Derivative());
}

std::string OrbitOutcomeName(OrbitOutcome outcome) {
  switch (outcome) {
    case OrbitOutcome::kEscaped: return "escaped";
    case OrbitOutcome::kBoundedHeuristic: return "bounded-heuristic";
    case OrbitOutcome::kCycleDetected: return "cycle-detected";
  }
  return "";
}

bool CertifyEscape(const Polynomial& f, std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  Rational re(z.real());
  Rational im(z.imag());
  auto [a, b] = f.EvaluateGaussian(re, im);
  return a * a + b * b >= 4 * (re * re + im * im);
}

OrbitVerdict ForwardOrbit(const Polynomial& f, std::complex<double> z0,
                          int max_iter) {
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");
  OrbitVerdict verdict;
  verdict.escape_radius = RootBounds(f).escape_radius;
  const double radius = verdict.escape_radius;

  auto key = [](std::complex<double> z) {
    return std::make_pair(std::nearbyint(z.real() * 1e12),
                          std::nearbyint(z.imag() * 1e12));
  };
  std::map<std::pair<double, double>, int> seen;

  std::complex<double> z = z0;
  verdict.orbit.push_back(z);
  verdict.max_modulus_seen = std::abs(z);
  for (int step = 0;; ++step) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      verdict.outcome = OrbitOutcome::kEscaped;
      verdict.step = step;
      verdict.overflow = true;
      verdict.max_modulus_seen = std::numeric_limits<double>::infinity();
      return verdict;
    }
    verdict.max_modulus_seen = std::max(verdict.max_modulus_seen, std::abs(z));
    if (std::abs(z) > radius) {
      verdict.outcome = OrbitOutcome::kEscaped;
      verdict.step = step;
      verdict.escape_certified = CertifyEscape(f, z);
      return verdict;
    }
    auto [it, inserted] = seen.emplace(key(z), step);
    if (!inserted) {
      verdict.outcome = OrbitOutcome::kCycleDetected;
      verdict.step = step - it->second;
      return verdict;
    }
    if (step == max_iter) break;
    z = f.Evaluate(z);
    verdict.orbit.push_back(z);
  }
  verdict.outcome = OrbitOutcome::kBoundedHeuristic;
  verdict.step = max_iter;
  return verdict;
}

namespace {

Wide ToWide(const Rational& x) {
  return Wide(x.get_num().get_str()) / Wide(x.get_den().get_str());
}

using Cl = std::complex<long double>;

long double ToLongDouble(const Rational& x) {
  return static_cast<long double>(ToQuad(x));
}

// Dedup grid: a point is new unless an accepted point lies within the
// resolution. Cells have the resolution as side, so neighbours suffice.
class PointGrid {
 public:
  explicit PointGrid(double resolution) : resolution_(resolution) {}

  bool Insert(std::complex<double> z) {
    const std::int64_t cx = Cell(z.real());
    const std::int64_t cy = Cell(z.imag());
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(Key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const auto& other : it->second) {
          if (std::abs(other - z) < resolution_) return false;
        }
      }
    }
    cells_[Key(cx, cy)].push_back(z);
    return true;
  }

 private:
  std::int64_t Cell(double x) const {
    return static_cast<std::int64_t>(std::floor(x / resolution_));
  }
  static std::pair<std::int64_t, std::int64_t> Key(std::int64_t x,
                                                   std::int64_t y) {
    return {x, y};
  }
  struct Hash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
      return std::hash<std::int64_t>()(k.first * 0x9E3779B97F4A7C15LL ^ k.second);
    }
  };

  double resolution_;
  std::unordered_map<std::pair<std::int64_t, std::int64_t>,
                     std::vector<std::complex<double>>, Hash>
      cells_;
};

constexpr long double kPreimageTolerance = 1e-12L;

struct Preimages {
  std::vector<Cl> roots;
  std::size_t dropped = 0;
};

Preimages SolvePreimages(const std::vector<Cl>& coefficients, Cl w,
                         int choice) {
  std::vector<Cl> shifted = coefficients;
  shifted[0] -= w;
  std::vector<Cl> roots = SolveComplex(shifted);
  std::sort(roots.begin(), roots.end(), [](const Cl& a, const Cl& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  if (choice >= 0) roots = {roots[choice % roots.size()]};
  Preimages out;
  for (const auto& z : roots) {
    if (BackwardError(shifted, z) <= kPreimageTolerance) {
      out.roots.push_back(z);
    } else {
      ++out.dropped;
    }
  }
  return out;
}

}  // namespace

WideComplex IterateWide(const Polynomial& f, const WideComplex& z, int n) {
  std::vector<Wide> c;
  for (const auto& x : f.Coefficients()) c.push_back(ToWide(x));
  WideComplex current = z;
  for (int step = 0; step < n; ++step) {
    WideComplex acc(0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      acc = acc * current + WideComplex(c[i]);
    }
    current = acc;
  }
  return current;
}

PointCloud InverseOrbit(const Polynomial& f,
                        const InverseOrbitOptions& options) {
  if (f.Degree() < 2) throw DomainError("inverse orbit needs degree >= 2");
  if (f[0] != 0) throw DomainError("inverse orbit of 0 needs f(0) = 0");
  if (options.depth < 0) throw DomainError("depth must be nonnegative");
  if (!(options.resolution > 0)) throw DomainError("resolution must be positive");

  std::vector<Cl> coefficients;
  for (const auto& x : f.Coefficients()) coefficients.emplace_back(ToLongDouble(x));
  const std::size_t degree = static_cast<std::size_t>(f.Degree());

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  PointCloud cloud;
  PointGrid grid(options.resolution);
  grid.Insert(0.0);
  cloud.points.push_back({0.0, 0});
  std::vector<Cl> frontier{Cl(0)};
  std::mt19937_64 rng(options.seed);

  for (int level = 1; level <= options.depth; ++level) {
    if (frontier.empty()) break;
    const bool full = degree * frontier.size() <= options.budget;
    std::vector<int> choices(frontier.size(), -1);
    if (!full) {
      cloud.budget_hit = true;
      std::uniform_int_distribution<int> pick(0, static_cast<int>(degree) - 1);
      for (auto& c : choices) c = pick(rng);
    }

    std::vector<Preimages> results(frontier.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        results[i] = SolvePreimages(coefficients, frontier[i], choices[i]);
      }
    };
    const std::size_t chunk = (frontier.size() + threads - 1) / threads;
    if (threads == 1 || frontier.size() < 64) {
      work(0, frontier.size());
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t begin = 0; begin < frontier.size(); begin += chunk) {
        pool.emplace_back(work, begin, std::min(frontier.size(), begin + chunk));
      }
    }

    std::vector<Cl> next;
    for (const auto& r : results) {
      cloud.dropped += r.dropped;
      for (const auto& z : r.roots) {
        std::complex<double> point(static_cast<double>(z.real()),
                                   static_cast<double>(z.imag()));
        if (grid.Insert(point)) {
          cloud.points.push_back({point, level});
          next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
    cloud.depth = level;
  }
  return cloud;
}

AttractorReport Attractor(const Network& network,
                          const InverseOrbitOptions& options) {
  AttractorReport report;
  report.reliability = TwoTerminalReliability(network);
  report.terminal_path = IsTerminalPath(network);
  report.origin = ClassifyOrigin(report.reliability);
  if (report.terminal_path) {
    report.structure = "s-t path: the attractor is {0}";
    report.cloud.points.push_back({0.0, 0});
    return report;
  }
  if (report.origin.multiplier >= 1) {
    report.structure =
        "adjacent terminals: 0 lies in the Julia set, the attractor "
        "approximates J(T)";
  } else {
    report.structure =
        "nonadjacent terminals: 0 is superattracting, the attractor is the "
        "inverse orbit of 0 and J(T) is its accumulation set";
  }
  report.cloud = InverseOrbit(report.reliability, options);
  return report;
}

std::string ConnectivityName(Connectivity verdict) {
  switch (verdict) {
    case Connectivity::kDisconnectedCertified: return "disconnected-certified";
    case Connectivity::kConnectedHeuristic: return "connected-heuristic";
    case Connectivity::kInconclusive: return "inconclusive";
  }
  return "";
}

ConnectivityVerdict JuliaConnectivity(const Polynomial& f, int max_iter) {
  RootSet critical = CriticalPoints(f);
  ConnectivityVerdict result;
  if (critical.zero_multiplicity > 0) {
    result.orbits.push_back(
        {0.0, critical.zero_multiplicity, ForwardOrbit(f, 0.0, max_iter)});
  }
  for (const auto& root : critical.roots) {
    result.orbits.push_back(
        {root.value, root.multiplicity, ForwardOrbit(f, root.value, max_iter)});
  }
  bool certified_escape = false;
  bool all_bounded = true;
  for (const auto& orbit : result.orbits) {
    if (orbit.verdict.outcome == OrbitOutcome::kEscaped) {
      all_bounded = false;
      if (orbit.verdict.escape_certified) certified_escape = true;
    }
  }
  if (certified_escape) {
    result.verdict = Connectivity::kDisconnectedCertified;
  } else if (all_bounded) {
    result.verdict = Connectivity::kConnectedHeuristic;
  } else {
    result.verdict = Connectivity::kInconclusive;
  }
  return result;
}

}  // namespace twoterm
