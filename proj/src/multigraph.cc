#include "twoterm/multigraph.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "twoterm/errors.h"

namespace twoterm {

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw GraphError("duplicate vertex id '" + vertices_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!edge_index_.emplace(e.id, i).second) {
      throw GraphError("duplicate edge id '" + e.id + "'");
    }
    if (!HasVertex(e.u) || !HasVertex(e.v)) {
      throw GraphError("edge '" + e.id + "' has an unknown endpoint");
    }
    if (e.u == e.v) throw GraphError("loop at vertex '" + e.u + "'");
  }
}

bool Multigraph::HasVertex(const VertexId& v) const {
  return vertex_index_.count(v) > 0;
}

bool Multigraph::HasEdge(const EdgeId& e) const {
  return edge_index_.count(e) > 0;
}

std::size_t Multigraph::IndexOf(const VertexId& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw GraphError("unknown vertex '" + v + "'");
  return it->second;
}

const Edge& Multigraph::EdgeById(const EdgeId& e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw GraphError("unknown edge '" + e + "'");
  return edges_[it->second];
}

std::size_t Multigraph::Degree(const VertexId& v) const {
  IndexOf(v);
  return std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.u == v || e.v == v;
  });
}

Network MakeNetwork(Multigraph graph, TerminalPair terminals) {
  if (terminals.s == terminals.t) {
    throw GraphError("terminals must be distinct");
  }
  if (!graph.HasVertex(terminals.s) || !graph.HasVertex(terminals.t)) {
    throw GraphError("terminal is not a vertex of the graph");
  }
  return Network{std::move(graph), std::move(terminals)};
}

Network FromEdgeList(const std::vector<VertexId>& vertices,
                     const std::vector<std::pair<VertexId, VertexId>>& edges,
                     const VertexId& s, const VertexId& t) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    list.push_back({"e" + std::to_string(i), edges[i].first, edges[i].second});
  }
  return MakeNetwork(Multigraph(vertices, std::move(list)), {s, t});
}

Network DeleteEdge(const Network& network, const EdgeId& edge) {
  network.graph.EdgeById(edge);
  std::vector<Edge> edges;
  for (const auto& e : network.graph.Edges()) {
    if (e.id != edge) edges.push_back(e);
  }
  return {Multigraph(network.graph.Vertices(), std::move(edges)),
          network.terminals};
}

Contraction ContractEdge(const Network& network, const EdgeId& edge) {
  const Edge target = network.graph.EdgeById(edge);
  const VertexId& keep = target.u;
  const VertexId& gone = target.v;
  std::vector<VertexId> vertices;
  for (const auto& v : network.graph.Vertices()) {
    if (v != gone) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  for (Edge e : network.graph.Edges()) {
    if (e.u == gone) e.u = keep;
    if (e.v == gone) e.v = keep;
    if (e.u != e.v) edges.push_back(std::move(e));
  }
  Contraction result{Multigraph(std::move(vertices), std::move(edges)),
                     std::nullopt, keep};
  TerminalPair terminals = network.terminals;
  if (terminals.s == gone) terminals.s = keep;
  if (terminals.t == gone) terminals.t = keep;
  if (terminals.s != terminals.t) result.terminals = terminals;
  return result;
}

namespace {

class FreshIds {
 public:
  explicit FreshIds(const Multigraph& graph) {
    for (const auto& v : graph.Vertices()) taken_.insert("v" + v);
    for (const auto& e : graph.Edges()) taken_.insert("e" + e.id);
  }
  VertexId Vertex(std::string base) { return Take('v', std::move(base)); }
  EdgeId Edge(std::string base) { return Take('e', std::move(base)); }

 private:
  std::string Take(char kind, std::string base) {
    while (!taken_.insert(kind + base).second) base += "'";
    return base;
  }
  std::set<std::string> taken_;
};

}  // namespace

Network Subdivide(const Network& network, const EdgeId& edge, int parts) {
  const Edge target = network.graph.EdgeById(edge);
  if (parts < 1) throw GraphError("subdivision needs at least one part");
  if (parts == 1) return network;
  FreshIds fresh(network.graph);
  std::vector<VertexId> vertices = network.graph.Vertices();
  std::vector<VertexId> chain{target.u};
  for (int i = 1; i < parts; ++i) {
    chain.push_back(fresh.Vertex(edge + ":" + std::to_string(i)));
    vertices.push_back(chain.back());
  }
  chain.push_back(target.v);
  std::vector<Edge> edges;
  for (const auto& e : network.graph.Edges()) {
    if (e.id != edge) {
      edges.push_back(e);
      continue;
    }
    for (int i = 0; i < parts; ++i) {
      edges.push_back({fresh.Edge(edge + "." + std::to_string(i + 1)),
                       chain[i], chain[i + 1]});
    }
  }
  return {Multigraph(std::move(vertices), std::move(edges)),
          network.terminals};
}

namespace {

std::vector<detail::IndexedEdge> IndexEdges(const Multigraph& graph) {
  std::vector<detail::IndexedEdge> out;
  out.reserve(graph.Size());
  for (const auto& e : graph.Edges()) {
    out.push_back({static_cast<int>(graph.IndexOf(e.u)),
                   static_cast<int>(graph.IndexOf(e.v))});
  }
  return out;
}

bool Reaches(const Network& network, const VertexId& from,
             const VertexId& to) {
  const auto& g = network.graph;
  std::vector<std::vector<int>> adjacency(g.Order());
  for (const auto& e : IndexEdges(g)) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  std::vector<bool> seen(g.Order());
  std::deque<int> queue{static_cast<int>(g.IndexOf(from))};
  seen[queue.front()] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen[g.IndexOf(to)];
}

}  // namespace

Network SubstituteGadget(const Network& host, const Network& gadget,
                         GadgetOrientation orientation) {
  const auto& h = gadget.graph;
  for (const auto& v : h.Vertices()) {
    if (!Reaches(gadget, gadget.terminals.s, v)) {
      throw GraphError("gadget must be connected");
    }
  }
  FreshIds fresh(host.graph);
  std::vector<VertexId> vertices = host.graph.Vertices();
  std::vector<Edge> edges;
  edges.reserve(host.graph.Size() * h.Size());
  for (const auto& e : host.graph.Edges()) {
    VertexId lower = std::min(e.u, e.v);
    VertexId upper = std::max(e.u, e.v);
    if (orientation == GadgetOrientation::kLowerToV) std::swap(lower, upper);
    std::map<VertexId, VertexId> image;
    image[gadget.terminals.s] = lower;
    image[gadget.terminals.t] = upper;
    int counter = 0;
    for (const auto& v : h.Vertices()) {
      if (image.count(v)) continue;
      image[v] = fresh.Vertex(e.id + ":" + std::to_string(++counter));
      vertices.push_back(image[v]);
    }
    counter = 0;
    for (const auto& he : h.Edges()) {
      edges.push_back({fresh.Edge(e.id + "." + std::to_string(++counter)),
                       image[he.u], image[he.v]});
    }
  }
  return {Multigraph(std::move(vertices), std::move(edges)), host.terminals};
}

namespace detail {

std::optional<std::vector<bool>> RelevantEdges(int vertex_count,
                                               const std::vector<IndexedEdge>& edges,
                                               int s, int t) {
  std::vector<std::vector<std::pair<int, int>>> adjacency(vertex_count);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adjacency[edges[i].u].push_back({edges[i].v, i});
    adjacency[edges[i].v].push_back({edges[i].u, i});
  }

  // Iterative Tarjan over the component of s; blocks are edge sets.
  std::vector<int> disc(vertex_count, -1), low(vertex_count, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> blocks;
  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack{{s, -1, 0}};
  int clock = 0;
  disc[s] = low[s] = clock++;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const int v = frame.vertex;
    if (frame.next < adjacency[v].size()) {
      auto [w, e] = adjacency[v][frame.next++];
      if (e == frame.parent_edge) continue;
      if (disc[w] == -1) {
        edge_stack.push_back(e);
        disc[w] = low[w] = clock++;
        stack.push_back({w, e, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    const int parent_edge = frame.parent_edge;
    stack.pop_back();
    if (stack.empty()) break;
    const int parent = stack.back().vertex;
    low[parent] = std::min(low[parent], low[v]);
    if (low[v] >= disc[parent]) {
      std::vector<int> block;
      while (true) {
        int top = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(top);
        if (top == parent_edge) break;
      }
      blocks.push_back(std::move(block));
    }
  }
  if (disc[t] == -1) return std::nullopt;

  // Block-vertex incidence tree: vertices are nodes 0..n-1, blocks n.. .
  const int node_count = vertex_count + static_cast<int>(blocks.size());
  std::vector<std::vector<int>> tree(node_count);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    std::set<int> members;
    for (int e : blocks[b]) {
      members.insert(edges[e].u);
      members.insert(edges[e].v);
    }
    for (int v : members) {
      tree[v].push_back(vertex_count + b);
      tree[vertex_count + b].push_back(v);
    }
  }
  std::vector<int> parent(node_count, -2);
  std::deque<int> queue{s};
  parent[s] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : tree[x]) {
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<bool> relevant(edges.size(), false);
  for (int x = t; x != -1; x = parent[x]) {
    if (x >= vertex_count) {
      for (int e : blocks[x - vertex_count]) relevant[e] = true;
    }
  }
  return relevant;
}

std::vector<int> CanonicalOrder(int vertex_count,
                                const std::vector<IndexedEdge>& edges, int s,
                                int t, const std::vector<int>& tie_rank) {
  std::vector<int> degree(vertex_count, 0);
  std::vector<std::vector<int>> adjacency(vertex_count);
  for (const auto& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  auto before = [&](int a, int b) {
    if (a == t || b == t) return a == t && b != t;
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return tie_rank[a] < tie_rank[b];
  };
  std::vector<int> order(vertex_count, -1);
  int next = 0;
  std::deque<int> queue{s};
  order[s] = next++;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    std::vector<int> fresh;
    for (int y : adjacency[x]) {
      if (order[y] == -1 &&
          std::find(fresh.begin(), fresh.end(), y) == fresh.end()) {
        fresh.push_back(y);
      }
    }
    std::sort(fresh.begin(), fresh.end(), before);
    for (int y : fresh) {
      order[y] = next++;
      queue.push_back(y);
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < vertex_count; ++v) {
    if (order[v] == -1) rest.push_back(v);
  }
  std::sort(rest.begin(), rest.end(), before);
  for (int v : rest) order[v] = next++;
  return order;
}

}  // namespace detail

Network PruneIrrelevant(const Network& network) {
  const auto& g = network.graph;
  auto indexed = IndexEdges(g);
  auto relevant = detail::RelevantEdges(
      static_cast<int>(g.Order()), indexed,
      static_cast<int>(g.IndexOf(network.terminals.s)),
      static_cast<int>(g.IndexOf(network.terminals.t)));
  if (!relevant) throw GraphError("terminals lie in different components");
  std::vector<bool> keep_vertex(g.Order(), false);
  keep_vertex[g.IndexOf(network.terminals.s)] = true;
  keep_vertex[g.IndexOf(network.terminals.t)] = true;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.Size(); ++i) {
    if (!(*relevant)[i]) continue;
    edges.push_back(g.Edges()[i]);
    keep_vertex[indexed[i].u] = keep_vertex[indexed[i].v] = true;
  }
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < g.Order(); ++i) {
    if (keep_vertex[i]) vertices.push_back(g.Vertices()[i]);
  }
  return {Multigraph(std::move(vertices), std::move(edges)),
          network.terminals};
}

std::string NormalKey(const Network& network) {
  const auto& g = network.graph;
  const int n = static_cast<int>(g.Order());
  auto indexed = IndexEdges(g);
  std::vector<int> by_id(n);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) {
    return g.Vertices()[a] < g.Vertices()[b];
  });
  std::vector<int> tie_rank(n);
  for (int r = 0; r < n; ++r) tie_rank[by_id[r]] = r;
  const int s = static_cast<int>(g.IndexOf(network.terminals.s));
  const int t = static_cast<int>(g.IndexOf(network.terminals.t));
  auto order = detail::CanonicalOrder(n, indexed, s, t, tie_rank);
  std::vector<std::pair<int, int>> relabeled;
  relabeled.reserve(indexed.size());
  for (const auto& e : indexed) {
    int a = order[e.u], b = order[e.v];
    relabeled.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(relabeled.begin(), relabeled.end());
  std::ostringstream key;
  key << "n" << n << ";t" << order[t] << ";";
  for (const auto& [a, b] : relabeled) key << a << "-" << b << ",";
  return key.str();
}

bool IsTerminalPath(const Network& network) {
  Network pruned = PruneIrrelevant(network);
  const auto& g = pruned.graph;
  if (g.Size() + 1 != g.Order()) return false;
  for (const auto& v : g.Vertices()) {
    bool terminal = v == pruned.terminals.s || v == pruned.terminals.t;
    if (g.Degree(v) != (terminal ? 1u : 2u)) return false;
  }
  return true;
}

}  // namespace twoterm

namespace twoterm {

void FamilySpec::Validate() const {
  switch (family) {
    case Family::kCycle:
      if (n < 3 || k < 1 || 2 * k > n) {
        throw DomainError("cycle needs n >= 3 and 1 <= k <= n/2");
      }
      return;
    case Family::kTheta:
      if (l < 1 || k < 1) throw DomainError("theta needs l >= 1 and k >= 1");
      return;
    case Family::kBundle:
      if (m < 1) throw DomainError("bundle needs m >= 1");
      return;
    case Family::kPath:
      if (l < 1) throw DomainError("path needs length l >= 1");
      return;
  }
}

std::string FamilySpec::Describe() const {
  switch (family) {
    case Family::kCycle:
      return "cycle(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    case Family::kTheta:
      return "theta(l=" + std::to_string(l) + ",k=" + std::to_string(k) + ")";
    case Family::kBundle:
      return "bundle(m=" + std::to_string(m) + ")";
    case Family::kPath:
      return "path(l=" + std::to_string(l) + ")";
  }
  return "";
}

Family ParseFamily(const std::string& name) {
  if (name == "cycle") return Family::kCycle;
  if (name == "theta") return Family::kTheta;
  if (name == "bundle") return Family::kBundle;
  if (name == "path") return Family::kPath;
  throw DomainError("unknown family '" + name + "'");
}

std::string FamilyName(Family family) {
  switch (family) {
    case Family::kCycle: return "cycle";
    case Family::kTheta: return "theta";
    case Family::kBundle: return "bundle";
    case Family::kPath: return "path";
  }
  return "";
}

namespace {

// Appends a path of `length` edges from `from` to `to` through fresh
// vertices "<prefix><i>".
void AddPath(const VertexId& from, const VertexId& to, int length,
             const std::string& prefix, std::vector<VertexId>& vertices,
             std::vector<std::pair<VertexId, VertexId>>& edges) {
  VertexId previous = from;
  for (int i = 1; i < length; ++i) {
    VertexId next = prefix + std::to_string(i);
    vertices.push_back(next);
    edges.emplace_back(previous, next);
    previous = next;
  }
  edges.emplace_back(previous, to);
}

}  // namespace

Network BuildFamily(const FamilySpec& spec) {
  spec.Validate();
  std::vector<VertexId> vertices{"s", "t"};
  std::vector<std::pair<VertexId, VertexId>> edges;
  switch (spec.family) {
    case Family::kCycle:
      AddPath("s", "t", spec.k, "a", vertices, edges);
      AddPath("t", "s", spec.n - spec.k, "b", vertices, edges);
      break;
    case Family::kTheta:
      for (int i = 0; i < spec.k; ++i) {
        AddPath("s", "t", spec.l, "x" + std::to_string(i) + "_", vertices,
                edges);
      }
      break;
    case Family::kBundle:
      for (int i = 0; i < spec.m; ++i) edges.emplace_back("s", "t");
      break;
    case Family::kPath:
      AddPath("s", "t", spec.l, "a", vertices, edges);
      break;
  }
  return FromEdgeList(vertices, edges, "s", "t");
}

}  // namespace twoterm
