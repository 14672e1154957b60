#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twoterm {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct TerminalPair {
  VertexId s;
  VertexId t;

  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

// Finite loopless multigraph with opaque string vertex ids. Immutable: every
// operation returns a new graph.
class Multigraph {
 public:
  Multigraph() = default;
  // Throws GraphError on duplicate vertex or edge ids, unknown endpoints and
  // loops.
  Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& Vertices() const { return vertices_; }
  const std::vector<Edge>& Edges() const { return edges_; }
  std::size_t Order() const { return vertices_.size(); }
  std::size_t Size() const { return edges_.size(); }

  bool HasVertex(const VertexId& v) const;
  bool HasEdge(const EdgeId& e) const;
  // Position of the vertex in Vertices(); throws GraphError when unknown.
  std::size_t IndexOf(const VertexId& v) const;
  const Edge& EdgeById(const EdgeId& e) const;
  std::size_t Degree(const VertexId& v) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vertex_index_;
  std::map<EdgeId, std::size_t> edge_index_;
};

// A multigraph with a distinguished pair of distinct terminals.
struct Network {
  Multigraph graph;
  TerminalPair terminals;
};

// Builds a network whose edges get ids "e0", "e1", ... in input order.
// Throws GraphError on duplicate vertex ids, unknown endpoints, loops and
// s == t.
Network FromEdgeList(const std::vector<VertexId>& vertices,
                     const std::vector<std::pair<VertexId, VertexId>>& edges,
                     const VertexId& s, const VertexId& t);
// Validates an already assembled network.
Network MakeNetwork(Multigraph graph, TerminalPair terminals);

Network DeleteEdge(const Network& network, const EdgeId& edge);

struct Contraction {
  Multigraph graph;
  // Empty when the contracted edge joined s and t.
  std::optional<TerminalPair> terminals;
  VertexId merged_vertex;

  bool TerminalsMerged() const { return !terminals.has_value(); }
};
// Identifies the endpoints of `edge` into its first endpoint; every edge that
// would become a loop is dropped, other parallel edges are kept.
Contraction ContractEdge(const Network& network, const EdgeId& edge);

// Replaces `edge` by a path of `parts` edges. Fresh vertices are named
// "<edge>:<i>" and fresh edges "<edge>.<i>".
Network Subdivide(const Network& network, const EdgeId& edge, int parts);

enum class GadgetOrientation {
  // u goes to the lexicographically smaller endpoint of each replaced edge.
  kLowerToU,
  kLowerToV,
};

// G[H(u,v)]: each edge {x,y} of G becomes a copy of H with u, v identified
// with x, y. Internal vertices of the copy are "<edge>:<i>", its edges
// "<edge>.<j>", i and j following H's vertex and edge order.
Network SubstituteGadget(const Network& host, const Network& gadget,
                         GadgetOrientation orientation =
                             GadgetOrientation::kLowerToU);

// Keeps only edges lying on some simple s-t path (the blocks along the s-t
// chain of the block-cut tree) and drops vertices left without edges, except
// the terminals. Throws GraphError when s and t are disconnected.
Network PruneIrrelevant(const Network& network);

// Deterministic key of the labeled structure after BFS-from-s renaming with
// degree tie-breaking. Equal keys imply identical relabeled structure; it is
// not an isomorphism invariant.
std::string NormalKey(const Network& network);

// Whether the pruned network is a single s-t path.
bool IsTerminalPath(const Network& network);

enum class Family { kCycle, kTheta, kBundle, kPath };

// Parameters of the closed-form families:
//   cycle  C_n with terminals at distance k (n >= 3, 1 <= k <= n/2),
//   theta  k internally disjoint s-t paths of length l (k, l >= 1),
//   bundle m parallel s-t edges (m >= 1),
//   path   a single s-t path of length l (l >= 1).
struct FamilySpec {
  Family family = Family::kCycle;
  int n = 0;
  int k = 0;
  int l = 0;
  int m = 0;

  // Throws DomainError when the parameters are out of range.
  void Validate() const;
  std::string Describe() const;
};

Family ParseFamily(const std::string& name);
std::string FamilyName(Family family);

// The explicit graph of a family, vertices "s", "t" and numbered internals.
Network BuildFamily(const FamilySpec& spec);

namespace detail {

// Index-based helpers shared with the reliability engine.
struct IndexedEdge {
  int u;
  int v;
};

// For each edge, whether it lies on a simple s-t path. std::nullopt when s
// and t lie in different components.
std::optional<std::vector<bool>> RelevantEdges(
    int vertex_count, const std::vector<IndexedEdge>& edges, int s, int t);

// BFS-from-s relabeling. `vertex_order[old] = new`. Unreached vertices come
// last. Ties among neighbours are broken by (degree, tie_rank[vertex]).
std::vector<int> CanonicalOrder(int vertex_count,
                                const std::vector<IndexedEdge>& edges, int s,
                                int t, const std::vector<int>& tie_rank);

}  // namespace detail

}  // namespace twoterm
