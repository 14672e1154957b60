#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twoterm/multigraph.h"
#include "twoterm/polynomial.h"

namespace twoterm {

// Exact two-terminal reliability by factoring with series-parallel reductions.
//
// Each recursive call works on a graph whose edges carry reliability
// polynomials (initially p). It prunes edges off every s-t path, merges
// parallel edges (1 - (1-a)(1-b)), merges series edges through non-terminal
// degree-2 vertices (a*b), and then factors on an edge at s whose other
// endpoint has maximum degree:
//
//   R(G) = w * R(G / e) + (1 - w) * R(G - e).
//
// Reduced graphs are memoized on their normal key, weights included. The memo
// is shared by every Compute call on the same solver and is safe for
// concurrent use.
class ReliabilitySolver {
 public:
  ReliabilitySolver() = default;
  ReliabilitySolver(const ReliabilitySolver&) = delete;
  ReliabilitySolver& operator=(const ReliabilitySolver&) = delete;

  Polynomial Compute(const Network& network);

  std::size_t CacheSize() const;
  // Memo entries sorted by key.
  std::vector<std::pair<std::string, Polynomial>> Snapshot() const;
  void Insert(const std::string& key, const Polynomial& value);

  std::uint64_t Branches() const { return branches_.load(); }

 private:
  struct WeightedEdge {
    int u;
    int v;
    Polynomial weight;
  };
  struct WeightedGraph {
    int vertex_count = 0;
    std::vector<WeightedEdge> edges;
    int s = 0;
    int t = 1;
  };

  Polynomial Solve(WeightedGraph graph);
  // Returns false with `value` set when the graph reduces to a closed form.
  static bool Reduce(WeightedGraph& graph, Polynomial& value);
  static std::string Key(const WeightedGraph& graph);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Polynomial> memo_;
  std::atomic<std::uint64_t> branches_{0};
};

// Convenience wrapper with a private solver.
Polynomial TwoTerminalReliability(const Network& network);

// Closed forms: cycle p^k + p^(n-k) - p^n, theta 1 - (1 - p^l)^k,
// bundle 1 - (1-p)^m, path p^l.
Polynomial FamilyReliability(const FamilySpec& spec);

// R(G)(R(H)): reliability of G[H(u,v)] without building it.
Polynomial ComposeGadget(const Network& host, const Network& gadget);

enum class OriginKind {
  kSuperattracting,        // multiplier 0
  kAttracting,             // 0 < |multiplier| < 1
  kRationallyIndifferent,  // |multiplier| = 1
  kRepelling,              // |multiplier| > 1
};

struct OriginReport {
  OriginKind kind;
  Rational multiplier;  // f'(0), the number of parallel s-t edges for R(G)
};

// Classifies the fixed point 0 of f. Throws DomainError unless f(0) = 0.
OriginReport ClassifyOrigin(const Polynomial& f);
std::string OriginKindName(OriginKind kind);

// A root of the theta reliability 1 - (1 - p^l)^k near a target point.
struct ThetaRootHit {
  bool found = false;
  int l = 0;
  int k = 0;
  int j = 0;  // omega = exp(2 pi i j / k)
  std::complex<double> root;
  double distance = 0;  // |root - target|
  double residual = 0;  // |1 - (1 - root^l)^k|
};

struct ThetaSearchLimits {
  int max_l = 512;
  int max_k = 1 << 24;
  double residual_tolerance = 1e-10;
};

// Searches theta parameters (l, k) and a root nu of 1 - (1 - p^l)^k with
// |nu - target| < eps: nu^l = 1 - omega for a k-th root of unity omega.
// Among hits within the limits the one of least degree l*k is returned.
// Throws DomainError unless 0 < |target| < 1 and eps > 0. When the limits are
// exhausted the best candidate is returned with found = false.
ThetaRootHit FindRootNearDiskZero(std::complex<double> target, double eps,
                                  const ThetaSearchLimits& limits = {});

// |1 - (1 - z^l)^k| evaluated in quad precision.
double ThetaResidual(std::complex<double> z, int l, int k);

// {1 - zeta : zeta^m = 1 - r}: roots of R(G[B_m]) lying over a root r of R(G).
// Throws DomainError when m < 1.
std::vector<std::complex<double>> LiftRootsDiskOne(std::complex<double> r,
                                                   int m);

}  // namespace twoterm
