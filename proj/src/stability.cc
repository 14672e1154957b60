#include "twoterm/stability.h"

#include <algorithm>
#include <sstream>

#include "twoterm/errors.h"
#include "twoterm/rootfinder.h"

namespace twoterm {

std::string HermiteBiehlerCheckName(HermiteBiehlerCheck check) {
  switch (check) {
    case HermiteBiehlerCheck::kPassed: return "passed";
    case HermiteBiehlerCheck::kLeadingSign: return "leading-sign";
    case HermiteBiehlerCheck::kNonRealRoots: return "non-real-roots";
    case HermiteBiehlerCheck::kPositiveRoots: return "positive-roots";
    case HermiteBiehlerCheck::kInterlacing: return "interlacing";
  }
  return "";
}

namespace {

// Sign of the isolated root r of a polynomial whose square-free part has
// Sturm chain `sturm`.
int SignOfRoot(const SturmSequence& sturm, const RealRootInterval& r) {
  if (r.exact) return sgn(r.lower);
  if (r.lower >= 0) return 1;
  if (r.upper <= 0) return -1;
  // The root lies in (lower, upper) and 0 is strictly inside.
  if (sturm.Base().Evaluate(Rational(0)) == 0) return 0;
  return sturm.CountRoots(r.lower, Rational(0)) == 1 ? -1 : 1;
}

int CountWithMultiplicity(const std::vector<RealRootInterval>& roots) {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

// Multiplicity in f of the unique root of `square_free` isolated by r.
int MultiplicityAt(const std::vector<SquareFreeFactor>& factors,
                   const RealRootInterval& r) {
  for (const auto& [factor, multiplicity] : factors) {
    bool vanishes;
    if (r.exact) {
      vanishes = factor.Evaluate(r.lower) == 0;
    } else {
      vanishes = SturmSequence(factor).CountRoots(r.lower, r.upper) == 1;
    }
    if (vanishes) return multiplicity;
  }
  return 0;
}

struct PartCheck {
  HermiteBiehlerCheck failed = HermiteBiehlerCheck::kPassed;
  std::string detail;
};

PartCheck CheckPart(const Polynomial& part) {
  PartCheck out;
  if (part.IsZero() || part.Degree() == 0) {
    if (!part.IsZero() && part[0] < 0) {
      out.failed = HermiteBiehlerCheck::kLeadingSign;
      out.detail = "negative constant";
    }
    return out;
  }
  if (part.LeadingCoefficient() < 0) {
    out.failed = HermiteBiehlerCheck::kLeadingSign;
    out.detail = "negative leading coefficient";
    return out;
  }
  auto roots = IsolateRealRoots(part);
  int real = CountWithMultiplicity(roots);
  if (real < part.Degree()) {
    std::ostringstream s;
    s << real << " real roots of " << part.Degree();
    out.failed = HermiteBiehlerCheck::kNonRealRoots;
    out.detail = s.str();
    return out;
  }
  SturmSequence sturm(SquareFreePart(part));
  for (const auto& r : roots) {
    if (SignOfRoot(sturm, r) > 0) {
      std::ostringstream s;
      s << "positive root near " << r.Midpoint();
      out.failed = HermiteBiehlerCheck::kPositiveRoots;
      out.detail = s.str();
      return out;
    }
  }
  return out;
}

}  // namespace

HermiteBiehlerReport HermiteBiehler(const Polynomial& f) {
  if (f.IsZero()) throw DomainError("stability of the zero polynomial");
  HermiteBiehlerReport report;
  report.normalized = f.LeadingCoefficient() < 0 ? -f : f;
  auto split = SplitEvenOdd(report.normalized);
  report.even = split.even;
  report.odd = split.odd;

  for (const auto& [part, name] :
       {std::pair{&report.even, "even"}, std::pair{&report.odd, "odd"}}) {
    PartCheck check = CheckPart(*part);
    if (check.failed != HermiteBiehlerCheck::kPassed) {
      report.failed = check.failed;
      report.failed_part = name;
      report.detail = std::string(name) + " part: " + check.detail;
      return report;
    }
  }
  if (report.even.IsZero() || report.odd.IsZero()) {
    report.weakly_stable = true;
    return report;
  }

  Polynomial product = report.even * report.odd;
  if (product.Degree() > 0) {
    auto even_factors = SquareFreeDecomposition(report.even);
    auto odd_factors = SquareFreeDecomposition(report.odd);
    for (const auto& r : IsolateRealRoots(product)) {
      report.merged.push_back({r, MultiplicityAt(even_factors, r),
                               MultiplicityAt(odd_factors, r)});
    }
    std::reverse(report.merged.begin(), report.merged.end());
  }

  // Walk the merged roots from the largest down; ties may be ordered freely,
  // so a group with a even and b odd roots continues an alternating sequence
  // iff the counts differ by at most one in the right direction.
  bool expect_even = true;
  for (const auto& point : report.merged) {
    const int a = point.even_multiplicity;
    const int b = point.odd_multiplicity;
    const int lead = expect_even ? a : b;
    const int other = expect_even ? b : a;
    if (lead == other) continue;
    if (lead == other + 1) {
      expect_even = !expect_even;
      continue;
    }
    std::ostringstream s;
    s << "roots near " << point.location.Midpoint() << " break interlacing ("
      << a << " even, " << b << " odd)";
    report.failed = HermiteBiehlerCheck::kInterlacing;
    report.detail = s.str();
    return report;
  }
  report.weakly_stable = true;
  return report;
}

std::string CycleParityName(CycleParity parity) {
  switch (parity) {
    case CycleParity::kBothEven: return "n and k both even";
    case CycleParity::kNEvenKOdd: return "n even, k odd";
    case CycleParity::kNOddKEven: return "n odd, k even";
    case CycleParity::kBothOdd: return "n and k both odd";
  }
  return "";
}

CycleWitness CycleLeftHalfplaneWitness(int n, int k) {
  if (n < 3 || k < 1 || 2 * k > n) {
    throw DomainError("cycle witness needs n >= 3 and 1 <= k <= n/2");
  }
  CycleWitness w;
  w.n = n;
  w.k = k;
  const bool n_even = n % 2 == 0;
  const bool k_even = k % 2 == 0;
  if (n_even && k_even) {
    w.parity = CycleParity::kBothEven;
  } else if (n_even) {
    w.parity = CycleParity::kNEvenKOdd;
  } else if (k_even) {
    w.parity = CycleParity::kNOddKEven;
  } else {
    w.parity = CycleParity::kBothOdd;
  }
  w.g = Polynomial::Monomial(1, n - k) - Polynomial::Monomial(1, n - 2 * k) -
        Polynomial::Constant(1);
  w.f = w.g.Reflect();
  if ((n - k) % 2 != 0) w.f = -w.f;
  w.stability = HermiteBiehler(w.f);
  for (const auto& root : AllRoots(w.g).roots) {
    if (root.value.real() < -1e-7) w.left_roots.push_back(root.value);
  }
  w.numeric_agrees = !w.stability.weakly_stable && !w.left_roots.empty();
  return w;
}

RealRootCensus CensusRealRoots(const Polynomial& f) {
  if (f.IsZero()) throw DomainError("census of the zero polynomial");
  RealRootCensus census;
  census.degree = f.Degree();
  census.zero = f.Valuation();
  census.positive_bound = SignChanges(f);
  census.negative_bound = SignChanges(f.Reflect());
  const Polynomial q = f.ShiftDown(census.zero);
  if (q.Degree() > 0) {
    SturmSequence sturm(SquareFreePart(q));
    for (const auto& r : IsolateRealRoots(q)) {
      if (SignOfRoot(sturm, r) > 0) {
        census.positive += r.multiplicity;
      } else {
        census.negative += r.multiplicity;
      }
    }
  }
  return census;
}

}  // namespace twoterm
