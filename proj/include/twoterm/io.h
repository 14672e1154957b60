#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "twoterm/dynamics.h"
#include "twoterm/multigraph.h"
#include "twoterm/reliability.h"
#include "twoterm/rootfinder.h"

namespace twoterm {

// Graph JSON: {"vertices": [id, ...], "edges": [[u, v], ...], "s": id,
// "t": id}. Repeated pairs are parallel edges. Ids may be strings or
// integers; integers are read as their decimal spelling.
Network ParseGraphJson(const std::string& text);
Network ReadGraphJson(const std::filesystem::path& path);
std::string WriteGraphJson(const Network& network);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& content);

// Simple undirected graph on vertices 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, column-major order
};

// One graph6 line, trailing whitespace ignored. Throws InputError when the
// line is not valid graph6.
SimpleGraph ParseGraph6(const std::string& line);
std::string EncodeGraph6(const SimpleGraph& graph);
// Vertices "0".."n-1"; throws GraphError on invalid terminals.
Network ToNetwork(const SimpleGraph& graph, int s, int t);

std::string RootsCsvHeader();  // graph_id,s,t,re,im,residual,zero_mult
// One row per nonzero root, repeated by multiplicity, zero_mult 0; then one
// row at 0,0 carrying the zero multiplicity when it is positive.
std::string RootsCsvRows(const std::string& graph_id, const std::string& s,
                         const std::string& t, const RootSet& roots);

void WritePointCloudCsv(std::ostream& out, const PointCloud& cloud);

// Scatter plot on the fixed viewport [-2.2, 2.2]^2 with axes; points outside
// the viewport are skipped.
std::string RenderSvg(const std::vector<std::complex<double>>& points,
                      const std::string& title);

// Memo cache file: "TTMEMO" magic, format version, entry count, then
// length-prefixed keys and coefficient strings.
void SaveMemoCache(const ReliabilitySolver& solver,
                   const std::filesystem::path& path);
// Returns the number of entries loaded; a missing file loads nothing.
// Throws InputError on a corrupt or foreign file.
std::size_t LoadMemoCache(ReliabilitySolver& solver,
                          const std::filesystem::path& path);

}  // namespace twoterm
