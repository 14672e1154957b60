// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.h"
#include "twoterm/dynamics.h"
#include "twoterm/io.h"
#include "twoterm/multigraph.h"
#include "twoterm/polynomial.h"
#include "twoterm/reliability.h"
#include "twoterm/rootfinder.h"
#include "twoterm/stability.h"
#include "twoterm/sweep.h"

namespace {

using namespace twoterm;
using Cd = std::complex<double>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Polynomial FromIntegers(const std::vector<mpz_class>& c) {
  std::vector<Rational> r(c.begin(), c.end());
  return Polynomial(r);
}

std::string Sci(double x) {
  std::ostringstream s;
  s.precision(4);
  s << x;
  return s.str();
}

Polynomial CycleAt(int n, int k) {
  return TwoTerminalReliability(BuildFamily({Family::kCycle, n, k, 0, 0}));
}

Network K23Adjacent() {
  return FromEdgeList({"a", "b", "x", "y", "z"},
                      {{"a", "x"}, {"a", "y"}, {"a", "z"},
                       {"b", "x"}, {"b", "y"}, {"b", "z"}},
                      "a", "x");
}

Outcome ExactIdentities() {
  struct Case {
    std::string name;
    Polynomial actual;
    Polynomial expected;
  };
  std::vector<Case> cases = {
      {"C3", CycleAt(3, 1), Polynomial{0, 1, 1, -1}},
      {"C4 antipodal", CycleAt(4, 2), Polynomial{0, 0, 2, 0, -1}},
      {"C4 adjacent", CycleAt(4, 1), Polynomial{0, 1, 0, 1, -1}},
      {"K2,3 adjacent", TwoTerminalReliability(K23Adjacent()),
       Polynomial{0, 1, 0, 2, -2, -1, 1}},
  };
  Outcome out{true, ""};
  for (const auto& c : cases) {
    if (!(c.actual == c.expected)) {
      out.pass = false;
      out.detail += c.name + " gave " + c.actual.ToString() + "; ";
    }
  }
  if (out.pass) out.detail = "C3, C4 (both pairs), K2,3 exact";
  return out;
}

// Shared by criteria 2 and 11.
std::vector<oracle::Graph> OracleCorpus() {
  std::vector<oracle::Graph> corpus;
  oracle::EnumerateConnected(5, 8, [&](const oracle::Graph& g) {
    corpus.push_back(g);
  });
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) {
    corpus.push_back(oracle::RandomConnectedGraph(rng, 2, 7, 10));
  }
  return corpus;
}

Outcome OracleEquivalence(const std::vector<oracle::Graph>& corpus) {
  ReliabilitySolver solver;
  std::size_t mismatches = 0;
  for (const auto& g : corpus) {
    Polynomial expected = FromIntegers(
        oracle::CountsToCoefficients(oracle::SubsetCounts(g)));
    if (!(solver.Compute(oracle::ToNetwork(g)) == expected)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(corpus.size()) + " graphs, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome CompositionTheorem() {
  std::mt19937_64 rng(7);
  ReliabilitySolver solver;
  int checks = 0;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    Network host = oracle::ToNetwork(oracle::RandomGraph(rng, 2, 5, 1, 6));
    // Gadgets must be connected; hosts need not be.
    Network gadget =
        oracle::ToNetwork(oracle::RandomConnectedGraph(rng, 2, 5, 6));
    const Polynomial expected =
        solver.Compute(host).Compose(solver.Compute(gadget));
    for (auto orientation :
         {GadgetOrientation::kLowerToU, GadgetOrientation::kLowerToV}) {
      ++checks;
      if (!(solver.Compute(SubstituteGadget(host, gadget, orientation)) ==
            expected)) {
        ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " substitutions, " +
                             std::to_string(failures) + " failures"};
}

Outcome RootValues() {
  const Polynomial f{0, 0, 2, 0, -1};
  RootSet roots = AllRoots(f);
  const double sqrt2 = std::sqrt(2.0);
  bool ok = roots.zero_multiplicity == 2 && roots.roots.size() == 2;
  double worst = 0;
  if (ok) {
    worst = std::max(std::abs(roots.roots[0].value - Cd(-sqrt2, 0)),
                     std::abs(roots.roots[1].value - Cd(sqrt2, 0)));
    ok = worst < 1e-10;
  }
  RegionMatch outside = RegionFilter(roots, Region::OutsideDisk({1, 0}, 1));
  bool minus_sqrt2_outside = false;
  for (const auto& r : outside.inside) {
    if (std::abs(r.value + sqrt2) < 1e-10) minus_sqrt2_outside = true;
  }
  return {ok && minus_sqrt2_outside,
          "max error " + Sci(worst) + ", -sqrt2 outside |z-1|<=1: " +
              (minus_sqrt2_outside ? "yes" : "no")};
}

Outcome GoldenAttractor() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  InverseOrbitOptions options;
  options.depth = 12;
  PointCloud cloud = InverseOrbit(Polynomial{0, 0, 2, 0, -1}, options);
  double best = INFINITY;
  for (const auto& p : cloud.points) best = std::min(best, std::abs(p.z + phi));
  return {best < 1e-6, std::to_string(cloud.points.size()) +
                           " points, nearest to -phi at " + Sci(best)};
}

Outcome NegativeThetaRoot() {
  const Polynomial f = FamilyReliability({Family::kTheta, 0, 2, 8, 0});
  const Rational width(1, 10000000000);
  // -2^(1/8) is the unique real root below -1.
  for (const auto& r : IsolateRealRoots(f)) {
    if (r.exact) continue;
    RealRootInterval refined = RefineRealRoot(f, r, width);
    if (refined.upper >= -1) continue;
    // Independent bracket: x^8 - 2 changes sign across the interval.
    const Rational lo8 = refined.lower * refined.lower * refined.lower *
                         refined.lower * refined.lower * refined.lower *
                         refined.lower * refined.lower;
    const Rational hi8 = refined.upper * refined.upper * refined.upper *
                         refined.upper * refined.upper * refined.upper *
                         refined.upper * refined.upper;
    const bool brackets = lo8 > 2 && hi8 < 2;
    return {brackets && refined.Width() < Rational(1, 1000000000),
            "root in [" + std::to_string(refined.lower.get_d()) + ", " +
                std::to_string(refined.upper.get_d()) + "], width " +
                Sci(refined.Width().get_d())};
  }
  return {false, "no real root below -1 isolated"};
}

// |R(theta)(R(B_m)(z))| evaluated nested in quad precision.
double ComposedResidual(Cd z, int l, int k, int m) {
  const QuadComplex one(1);
  const QuadComplex zq(Quad(z.real()), Quad(z.imag()));
  const QuadComplex w = one - pow(one - zq, m);
  return static_cast<double>(abs(one - pow(one - pow(w, l), k)));
}

Outcome DensityDemo() {
  std::mt19937_64 rng(2023);
  std::uniform_real_distribution<double> radius(0.1, 0.9);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  const int m = 3;
  int found = 0;
  int lifted_ok = 0;
  double worst_root = 0;
  double worst_lift = 0;
  for (int i = 0; i < 20; ++i) {
    const Cd target = std::polar(radius(rng), angle(rng));
    ThetaRootHit hit = FindRootNearDiskZero(target, 0.05);
    // Residual recomputed here rather than trusted from the search.
    const double residual = ComposedResidual(hit.root, hit.l, hit.k, 1);
    if (hit.found && residual < 1e-10 && std::abs(hit.root - target) < 0.05) {
      ++found;
    }
    worst_root = std::max(worst_root, residual);
    for (Cd z : LiftRootsDiskOne(hit.root, m)) {
      const double r = ComposedResidual(z, hit.l, hit.k, m);
      worst_lift = std::max(worst_lift, r);
      if (r < 1e-10) ++lifted_ok;
    }
  }
  return {found == 20 && lifted_ok == 60,
          std::to_string(found) + "/20 targets (max residual " +
              Sci(worst_root) + "), " + std::to_string(lifted_ok) +
              "/60 lifted points (max residual " + Sci(worst_lift) + ")"};
}

Outcome HermiteBiehlerSweep() {
  int cases = 0;
  int agree = 0;
  bool parities[4] = {false, false, false, false};
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      ++cases;
      CycleWitness w = CycleLeftHalfplaneWitness(n, k);
      parities[static_cast<int>(w.parity)] = true;
      if (!w.stability.weakly_stable && !w.left_roots.empty()) ++agree;
    }
  }
  const bool all_parities = parities[0] && parities[1] && parities[2] &&
                            parities[3];
  return {agree == cases && all_parities,
          std::to_string(agree) + "/" + std::to_string(cases) +
              " (n,k) pairs not weakly stable with a left root; parity cases " +
              (all_parities ? "all exercised" : "missing")};
}

Outcome C4AdjacentModulus() {
  const std::vector<long> f = {0, 1, 0, 1, -1};
  const oracle::QuadraticField r1{mpq_class(-1, 8), mpq_class(1, 8), 15};
  const mpq_class exact =
      oracle::Evaluate(f, oracle::Evaluate(f, r1)).NormSquared();
  const mpq_class expected(388912639, 4294967296);
  // The library iterates numerically at 50 digits.
  const Wide sqrt15 = sqrt(Wide(15));
  WideComplex z(Wide(-1) / 8, sqrt15 / 8);
  WideComplex w = IterateWide(Polynomial{0, 1, 0, 1, -1}, z, 2);
  const Wide norm = w.real() * w.real() + w.imag() * w.imag();
  const Wide target = Wide(388912639) / Wide(4294967296.0);
  const double relative = static_cast<double>(abs(norm - target) / target);
  return {exact == expected && relative < 1e-20,
          "exact value " + exact.get_str() + ", numeric relative error " +
              Sci(relative)};
}

Outcome ConnectivityVerdicts() {
  std::string detail;
  bool pass = true;
  ConnectivityVerdict c3 = JuliaConnectivity(CycleAt(3, 1));
  pass = pass && c3.verdict == Connectivity::kConnectedHeuristic;
  detail += "C3 " + ConnectivityName(c3.verdict);

  ConnectivityVerdict c6 = JuliaConnectivity(CycleAt(6, 3));
  bool cycles = !c6.orbits.empty();
  for (const auto& o : c6.orbits) {
    cycles = cycles && o.verdict.outcome == OrbitOutcome::kCycleDetected;
  }
  pass = pass && c6.verdict == Connectivity::kConnectedHeuristic && cycles;
  detail += "; C6 " + ConnectivityName(c6.verdict) +
            (cycles ? " (all critical orbits cyclic)" : "");

  const Polynomial k23 = TwoTerminalReliability(K23Adjacent());
  ConnectivityVerdict v = JuliaConnectivity(k23);
  const CriticalOrbit* escaping = nullptr;
  for (const auto& o : v.orbits) {
    if (o.verdict.outcome == OrbitOutcome::kEscaped && o.verdict.escape_certified) {
      escaping = &o;
    }
  }
  pass = pass && v.verdict == Connectivity::kDisconnectedCertified && escaping;
  detail += "; K2,3 " + ConnectivityName(v.verdict);
  if (escaping) {
    const double distance = std::abs(escaping->point - Cd(-1.157582493, 0));
    const WideComplex third =
        IterateWide(k23, WideComplex(Wide(escaping->point.real())), 3);
    const double modulus = static_cast<double>(abs(third));
    pass = pass && distance < 1e-6 && modulus >= 1e14 && modulus <= 2e14;
    detail += ", r = " + std::to_string(escaping->point.real()) +
              ", |f^3(r)| = " + Sci(modulus) + " (band [1e14, 2e14])";
  }
  return {pass, detail};
}

Outcome CoherenceProperties(const std::vector<oracle::Graph>& corpus) {
  ReliabilitySolver solver;
  std::size_t violations = 0;
  std::string first;
  for (const auto& g : corpus) {
    const Polynomial f = solver.Compute(oracle::ToNetwork(g));
    const int m = static_cast<int>(g.edges.size());
    FForm form = ToFForm(f, m);
    bool ok = f.Evaluate(Rational(0)) == 0 && f.Evaluate(Rational(1)) == 1;
    for (int i = 0; i <= m; ++i) {
      ok = ok && form.counts[i] >= 0;
      // Each working i-set extends to m - i supersets that also work, and
      // each (i+1)-set arises from at most i + 1 of them.
      if (i < m) ok = ok && form.counts[i + 1] * (i + 1) >= form.counts[i] * (m - i);
    }
    const Polynomial diff = f - Polynomial::Identity();
    if (!diff.IsZero()) {
      SturmSequence sturm(SquareFreePart(diff));
      // Roots in (0, 1]; p = 1 is always one of them.
      const int crossings =
          sturm.CountRoots(Rational(0), Rational(1)) - 1;
      ok = ok && crossings <= 1;
    }
    if (!ok) {
      ++violations;
      if (first.empty()) first = " first: " + f.ToString();
    }
  }
  return {violations == 0, std::to_string(corpus.size()) + " graphs, " +
                               std::to_string(violations) + " violations" +
                               first};
}

Outcome FigureTwoAnalogue() {
  const std::filesystem::path corpus =
      std::filesystem::path(TWOTERM_TEST_DATA_DIR) / "connected_order_le6.g6";
  std::ifstream in(corpus);
  if (!in) return {false, "cannot read " + corpus.string()};
  std::ostringstream csv;
  std::ostringstream warnings;
  ReliabilitySolver solver;
  SweepSummary summary = SweepGraph6(in, csv, solver, {}, warnings);
  const std::filesystem::path out_dir(TWOTERM_TEST_OUTPUT_DIR);
  WriteFile(out_dir / "order_le6_roots.csv", csv.str());
  WriteFile(out_dir / "order_le6_roots.svg",
            RenderSvg(summary.cloud, "two-terminal roots, order <= 6"));
  double min_re = INFINITY;
  double max_modulus = 0;
  for (Cd z : summary.cloud) {
    min_re = std::min(min_re, z.real());
    max_modulus = std::max(max_modulus, std::abs(z));
  }
  return {summary.malformed == 0 && summary.unconverged == 0 &&
              min_re < -1.35 && max_modulus > 1.5,
          std::to_string(summary.graphs) + " graphs, " +
              std::to_string(summary.tasks) + " pairs, " +
              std::to_string(summary.cloud.size()) + " roots, min Re " +
              Sci(min_re) + ", max |z| " + Sci(max_modulus)};
}

Outcome DescartesCensus() {
  const Polynomial f = CycleAt(7, 3);
  RealRootCensus c = CensusRealRoots(f);
  // Cross-check the exact count against numeric roots.
  int numeric_real = 0;
  for (Cd z : AllRoots(f).Expanded()) {
    if (std::abs(z.imag()) < 1e-9) ++numeric_real;
  }
  return {c.TotalReal() < c.degree && c.WithinBounds() &&
              numeric_real == c.TotalReal(),
          std::to_string(c.TotalReal()) + " real roots of degree " +
              std::to_string(c.degree) + " (" + std::to_string(c.positive) +
              " positive, " + std::to_string(c.negative) + " negative, " +
              std::to_string(c.zero) + " zero); numeric count " +
              std::to_string(numeric_real)};
}

}  // namespace

int main() {
  std::vector<oracle::Graph> corpus;
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "exact polynomial identities", ExactIdentities},
      {2, "brute-force oracle equivalence",
       [&] {
         if (corpus.empty()) corpus = OracleCorpus();
         return OracleEquivalence(corpus);
       }},
      {3, "gadget substitution equals composition", CompositionTheorem},
      {4, "roots of 2p^2 - p^4", RootValues},
      {5, "golden-ratio point in the attractor", GoldenAttractor},
      {6, "theta root -2^(1/8) isolated", NegativeThetaRoot},
      {7, "density search and bundle lifts", DensityDemo},
      {8, "cycle witnesses not weakly stable", HermiteBiehlerSweep},
      {9, "C4 adjacent second iterate modulus", C4AdjacentModulus},
      {10, "Julia connectivity verdicts", ConnectivityVerdicts},
      {11, "coherence and shape properties",
       [&] {
         if (corpus.empty()) corpus = OracleCorpus();
         return CoherenceProperties(corpus);
       }},
      {12, "order <= 6 sweep root cloud", FigureTwoAnalogue},
      {13, "C7 real root census", DescartesCensus},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!outcome.pass) ++failed;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id
              << ": " << c.name << " -- " << outcome.detail << " ["
              << time.str() << "s]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
