#include "twoterm/sweep.h"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <set>
#include <thread>

#include "twoterm/errors.h"
#include "twoterm/io.h"
#include "twoterm/rootfinder.h"

namespace twoterm {

namespace {

struct Task {
  std::size_t graph;
  int s;
  int t;
};

struct TaskResult {
  std::string polynomial;
  std::string rows;
  std::vector<std::complex<double>> roots;
  bool disconnected = false;
  bool unconverged = false;
  std::string error;
};

}  // namespace

SweepSummary SweepGraph6(std::istream& in, std::ostream& csv,
                         ReliabilitySolver& solver,
                         const SweepOptions& options, std::ostream& warnings) {
  SweepSummary summary;
  std::vector<SimpleGraph> graphs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      graphs.push_back(ParseGraph6(line));
    } catch (const InputError& e) {
      ++summary.malformed;
      warnings << "warning: line " << line_number << ": " << e.what() << "\n";
    }
  }
  summary.graphs = graphs.size();

  std::vector<Task> tasks;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const int n = graphs[g].n;
    if (options.terminals) {
      auto [s, t] = *options.terminals;
      if (s >= 0 && t >= 0 && s < n && t < n && s != t) {
        tasks.push_back({g, s, t});
      } else {
        warnings << "warning: graph " << g << " has no terminal pair (" << s
                 << ", " << t << ")\n";
      }
      continue;
    }
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) tasks.push_back({g, s, t});
    }
  }
  summary.tasks = tasks.size();

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      TaskResult& result = results[i];
      try {
        Polynomial f = solver.Compute(ToNetwork(graphs[task.graph], task.s, task.t));
        result.polynomial = f.ToString();
        if (f.IsZero()) {
          result.disconnected = true;
          continue;
        }
        RootSet roots = AllRootsUnchecked(f);
        result.unconverged = !roots.converged;
        result.rows = RootsCsvRows(std::to_string(task.graph),
                                   std::to_string(task.s),
                                   std::to_string(task.t), roots);
        result.roots = roots.Expanded();
      } catch (const Error& e) {
        result.error = e.what();
      }
    }
  };
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  csv << RootsCsvHeader();
  std::set<std::string> distinct;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const TaskResult& r = results[i];
    if (!r.error.empty()) {
      warnings << "warning: graph " << tasks[i].graph << " pair ("
               << tasks[i].s << ", " << tasks[i].t << "): " << r.error << "\n";
      continue;
    }
    if (r.disconnected) {
      ++summary.disconnected;
      continue;
    }
    distinct.insert(r.polynomial);
    if (r.unconverged) ++summary.unconverged;
    csv << r.rows;
    summary.cloud.insert(summary.cloud.end(), r.roots.begin(), r.roots.end());
  }
  summary.distinct_polynomials = distinct.size();
  return summary;
}

}  // namespace twoterm
