#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twoterm/reliability.h"

namespace twoterm {

struct SweepOptions {
  // When set, only this terminal pair; otherwise every pair s < t.
  std::optional<std::pair<int, int>> terminals;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t malformed = 0;
  std::size_t tasks = 0;
  // Terminal pairs in different components (reliability 0, no rows).
  std::size_t disconnected = 0;
  std::size_t distinct_polynomials = 0;
  // Root finding failures; their rows are still written.
  std::size_t unconverged = 0;
  std::vector<std::complex<double>> cloud;  // all roots, with multiplicity
};

// Reads graph6 lines, computes the reliability and roots of every task
// (graph, terminal pair) on a thread pool sharing `solver`, and writes roots
// CSV rows to `csv` in task order, so the output does not depend on
// scheduling. Malformed lines are skipped with a warning on `warnings`.
SweepSummary SweepGraph6(std::istream& in, std::ostream& csv,
                         ReliabilitySolver& solver,
                         const SweepOptions& options, std::ostream& warnings);

}  // namespace twoterm
