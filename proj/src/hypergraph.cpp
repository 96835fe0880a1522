#include "ghzcert/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "ghzcert/error.hpp"

namespace ghzcert {

namespace {

using Mask = std::uint32_t;

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

void check_vertex(const Hypergraph& h, int v) {
  if (v < 1 || v > h.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " is outside 1.." +
                    std::to_string(h.vertex_count()));
  }
}

// Preconditions shared by the exhaustive cut routines.
void require_cut_enumerable(const Hypergraph& h) {
  validate(h);
  if (h.vertex_count() < 2) {
    throw Error(ErrorCode::TooFewVertices, "cuts need at least 2 vertices");
  }
  if (h.vertex_count() > kMaxCutVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "exhaustive cut enumeration is limited to " +
                    std::to_string(kMaxCutVertices) + " vertices");
  }
}

void require_connected(const Hypergraph& h) {
  if (!is_connected(h)) {
    throw Error(ErrorCode::Disconnected, "hypergraph is not connected");
  }
}

std::vector<Mask> edge_masks(const Hypergraph& h) {
  std::vector<Mask> masks;
  masks.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    Mask m = 0;
    for (int v : e.vertices) m |= Mask{1} << (v - 1);
    masks.push_back(m);
  }
  return masks;
}

std::vector<int> mask_to_side(Mask s, int k) {
  std::vector<int> side;
  for (int v = 1; v <= k; ++v) {
    if (s & (Mask{1} << (v - 1))) side.push_back(v);
  }
  return side;
}

// Calls visit(S) for every bipartition with vertex 1 in S and S != V.
template <typename Visit>
void for_each_bipartition(int k, Visit&& visit) {
  const Mask rest = (Mask{1} << (k - 1)) - 1;
  for (Mask m = 0; m < rest; ++m) visit(static_cast<Mask>((m << 1) | 1U));
}

int crossing_count(const std::vector<Mask>& masks, Mask s, Mask full) {
  int count = 0;
  for (Mask em : masks) {
    if ((em & s) != 0 && (em & ~s & full) != 0) ++count;
  }
  return count;
}

// `removed` is a bitmask over the first 64 edges.
bool connected_without(const Hypergraph& h, std::uint64_t removed) {
  const auto k = static_cast<std::size_t>(h.vertex_count());
  UnionFind uf(k);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (e < 64 && (removed & (std::uint64_t{1} << e))) continue;
    const auto& vs = h.edge(e).vertices;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      uf.unite(static_cast<std::size_t>(vs[0] - 1),
               static_cast<std::size_t>(vs[i] - 1));
    }
  }
  for (std::size_t v = 1; v < k; ++v) {
    if (uf.find(v) != uf.find(0)) return false;
  }
  return true;
}

}  // namespace

Hypergraph::Hypergraph(int k, std::vector<Edge> edges)
    : k_(k), edges_(std::move(edges)) {
  incident_.resize(static_cast<std::size_t>(std::max(k_, 0)));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& vs = edges_[e].vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) {
      if (v >= 1 && v <= k_) incident_[static_cast<std::size_t>(v - 1)].push_back(e);
    }
  }
}

bool Hypergraph::is_incident(int j, std::size_t e) const {
  const auto& vs = edges_.at(e).vertices;
  return std::binary_search(vs.begin(), vs.end(), j);
}

bool Hypergraph::all_levels_equal(int r) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [r](const Edge& e) { return e.level == r; });
}

void validate(const Hypergraph& h) {
  if (h.vertex_count() < 1) {
    throw Error(ErrorCode::TooFewVertices, "hypergraph needs at least one vertex");
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    if (edge.vertices.empty()) {
      throw Error(ErrorCode::EmptyEdge, "edge " + std::to_string(e) + " is empty", e);
    }
    for (int v : edge.vertices) {
      if (v < 1 || v > h.vertex_count()) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge " + std::to_string(e) + " has vertex " +
                        std::to_string(v) + " outside 1.." +
                        std::to_string(h.vertex_count()),
                    e);
      }
    }
    if (edge.level < 2) {
      throw Error(ErrorCode::BadLevel,
                  "edge " + std::to_string(e) + " has level " +
                      std::to_string(edge.level) + " < 2",
                  e);
    }
  }
}

Cut make_cut(const Hypergraph& h, std::vector<int> side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  for (int v : side) check_vertex(h, v);
  Cut cut{std::move(side), {}, mpz_class(1)};
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    bool inside = false;
    bool outside = false;
    for (int v : h.edge(e).vertices) {
      (std::binary_search(cut.side.begin(), cut.side.end(), v) ? inside : outside) = true;
    }
    if (inside && outside) {
      cut.crossing.push_back(e);
      cut.rank *= h.edge(e).level;
    }
  }
  return cut;
}

bool is_connected(const Hypergraph& h) {
  validate(h);
  return connected_without(h, 0);
}

Cut minimum_cut(const Hypergraph& h) {
  require_cut_enumerable(h);
  require_connected(h);
  const int k = h.vertex_count();
  const Mask full = (Mask{1} << k) - 1;
  const auto masks = edge_masks(h);
  int best = std::numeric_limits<int>::max();
  Mask best_side = 0;
  for_each_bipartition(k, [&](Mask s) {
    const int c = crossing_count(masks, s, full);
    if (c < best) {
      best = c;
      best_side = s;
    }
  });
  return make_cut(h, mask_to_side(best_side, k));
}

int edge_connectivity(const Hypergraph& h) {
  return static_cast<int>(minimum_cut(h).crossing.size());
}

int edge_connectivity_by_removal(const Hypergraph& h) {
  validate(h);
  if (h.vertex_count() < 2) {
    throw Error(ErrorCode::TooFewVertices, "edge connectivity needs at least 2 vertices");
  }
  if (h.edge_count() > kMaxRemovalEdges) {
    throw Error(ErrorCode::TooManyEdges,
                "removal oracle is limited to " + std::to_string(kMaxRemovalEdges) +
                    " edges");
  }
  if (h.vertex_count() > kMaxCutVertices) {
    throw Error(ErrorCode::TooManyVertices, "too many vertices for the removal oracle");
  }
  if (!connected_without(h, 0)) {
    throw Error(ErrorCode::Disconnected, "hypergraph is not connected");
  }
  // Removing every edge always disconnects k >= 2 vertices.
  int best = static_cast<int>(h.edge_count());
  const std::uint64_t subsets = std::uint64_t{1} << h.edge_count();
  for (std::uint64_t removed = 1; removed < subsets; ++removed) {
    const int size = std::popcount(removed);
    if (size < best && !connected_without(h, removed)) best = size;
  }
  return best;
}

Cut minimum_rank_cut(const Hypergraph& h) {
  require_cut_enumerable(h);
  require_connected(h);
  const int k = h.vertex_count();
  const Mask full = (Mask{1} << k) - 1;
  const auto masks = edge_masks(h);
  mpz_class best;
  bool have = false;
  Mask best_side = 0;
  for_each_bipartition(k, [&](Mask s) {
    mpz_class rank = 1;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      if ((masks[e] & s) != 0 && (masks[e] & ~s & full) != 0) rank *= h.edge(e).level;
    }
    if (!have || rank < best) {
      best = rank;
      best_side = s;
      have = true;
    }
  });
  return make_cut(h, mask_to_side(best_side, k));
}

mpz_class min_cut_rank(const Hypergraph& h) { return minimum_rank_cut(h).rank; }

int min_cut_separating(const Hypergraph& h, int a, int b) {
  require_cut_enumerable(h);
  check_vertex(h, a);
  check_vertex(h, b);
  if (a == b) throw Error(ErrorCode::SameVertex, "a and b must differ");
  const int k = h.vertex_count();
  const Mask full = (Mask{1} << k) - 1;
  const Mask abit = Mask{1} << (a - 1);
  const Mask bbit = Mask{1} << (b - 1);
  const Mask free = full & ~abit & ~bbit;
  const auto masks = edge_masks(h);
  int best = std::numeric_limits<int>::max();
  // Enumerate all submasks of the free vertices.
  Mask sub = free;
  while (true) {
    best = std::min(best, crossing_count(masks, sub | abit, full));
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return best;
}

std::vector<EdgePath> edge_disjoint_paths(const Hypergraph& h, int a, int b) {
  validate(h);
  check_vertex(h, a);
  check_vertex(h, b);
  if (a == b) throw Error(ErrorCode::SameVertex, "a and b must differ");

  // Node ids: vertex v -> v-1; edge e -> entry k+2e, exit k+2e+1.
  const auto k = static_cast<std::size_t>(h.vertex_count());
  const std::size_t nodes = k + 2 * h.edge_count();
  struct Arc {
    std::size_t to;
    int cap;
    std::size_t rev;
    bool forward;
  };
  std::vector<std::vector<Arc>> net(nodes);
  auto add_arc = [&](std::size_t u, std::size_t v) {
    net[u].push_back({v, 1, net[v].size(), true});
    net[v].push_back({u, 0, net[u].size() - 1, false});
  };
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const std::size_t in = k + 2 * e;
    const std::size_t out = in + 1;
    add_arc(in, out);
    for (int v : h.edge(e).vertices) {
      add_arc(static_cast<std::size_t>(v - 1), in);
      add_arc(out, static_cast<std::size_t>(v - 1));
    }
  }

  const std::size_t source = static_cast<std::size_t>(a - 1);
  const std::size_t sink = static_cast<std::size_t>(b - 1);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> pred(nodes, {kNone, kNone});
    pred[source] = {source, kNone};
    std::queue<std::size_t> queue;
    queue.push(source);
    while (!queue.empty() && pred[sink].first == kNone) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t i = 0; i < net[u].size(); ++i) {
        const Arc& arc = net[u][i];
        if (arc.cap > 0 && pred[arc.to].first == kNone) {
          pred[arc.to] = {u, i};
          queue.push(arc.to);
        }
      }
    }
    if (pred[sink].first == kNone) break;
    for (std::size_t v = sink; v != source;) {
      const auto [u, i] = pred[v];
      Arc& arc = net[u][i];
      arc.cap -= 1;
      net[v][arc.rev].cap += 1;
      v = u;
    }
  }

  // Flow on a forward arc is its residual on the paired backward arc.
  auto flow_of = [&](std::size_t u, const Arc& arc) {
    (void)u;
    return arc.forward ? net[arc.to][arc.rev].cap : 0;
  };
  std::vector<std::vector<int>> flow(nodes);
  for (std::size_t u = 0; u < nodes; ++u) {
    for (const Arc& arc : net[u]) flow[u].push_back(flow_of(u, arc));
  }

  std::vector<EdgePath> paths;
  while (true) {
    EdgePath path;
    path.vertices.push_back(a);
    std::size_t at = source;
    bool stuck = false;
    while (at != sink) {
      // vertex -> edge entry
      std::size_t pick = kNone;
      for (std::size_t i = 0; i < net[at].size(); ++i) {
        if (flow[at][i] > 0) {
          pick = i;
          break;
        }
      }
      if (pick == kNone) {
        stuck = true;
        break;
      }
      flow[at][pick] -= 1;
      const std::size_t in = net[at][pick].to;
      const std::size_t e = (in - k) / 2;
      // entry -> exit -> next vertex
      flow[in][0] -= 1;
      const std::size_t out = in + 1;
      std::size_t next = kNone;
      for (std::size_t i = 0; i < net[out].size(); ++i) {
        if (net[out][i].forward && flow[out][i] > 0) {
          flow[out][i] -= 1;
          next = net[out][i].to;
          break;
        }
      }
      at = next;
      const int vertex = static_cast<int>(at) + 1;
      // A repeated vertex closes a circulation; drop it from the path.
      const auto seen = std::find(path.vertices.begin(), path.vertices.end(), vertex);
      if (seen != path.vertices.end()) {
        const auto keep = static_cast<std::size_t>(seen - path.vertices.begin());
        path.vertices.resize(keep + 1);
        path.edges.resize(keep);
      } else {
        path.edges.push_back(e);
        path.vertices.push_back(vertex);
      }
    }
    if (stuck) break;
    paths.push_back(std::move(path));
  }
  return paths;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw Error(ErrorCode::DimMismatch, "graph self-loops are not allowed");
  adj_.at(u * n_ + v) = 1;
  adj_.at(v * n_ + u) = 1;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const {
  return edge_list().size() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
}

Graph line_graph(const Hypergraph& h) {
  validate(h);
  Graph g(h.edge_count());
  for (int j = 1; j <= h.vertex_count(); ++j) {
    const auto& inc = h.incident_edges(j);
    for (std::size_t x = 0; x < inc.size(); ++x) {
      for (std::size_t y = x + 1; y < inc.size(); ++y) g.add_edge(inc[x], inc[y]);
    }
  }
  return g;
}

namespace {

bool connected_after_removal(const Graph& g, std::uint32_t removed) {
  const std::size_t n = g.size();
  std::size_t start = n;
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(removed & (1U << v))) {
      ++remaining;
      if (start == n) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && !(removed & (1U << v)) && g.adjacent(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == remaining;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.size() > 32) {
    throw Error(ErrorCode::TooLarge, "graph connectivity check is limited to 32 vertices");
  }
  return connected_after_removal(g, 0);
}

int vertex_connectivity(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kMaxVertexConnectivityOrder) {
    throw Error(ErrorCode::TooLarge,
                "vertex connectivity oracle is limited to " +
                    std::to_string(kMaxVertexConnectivityOrder) + " vertices");
  }
  if (n == 0) return 0;
  if (g.is_complete()) return static_cast<int>(n - 1);
  int best = static_cast<int>(n - 1);
  for (std::uint32_t removed = 0; removed < (1U << n); ++removed) {
    const int size = std::popcount(removed);
    if (size >= best || static_cast<std::size_t>(size) + 2 > n) continue;
    if (!connected_after_removal(g, removed)) best = size;
  }
  return best;
}

}  // namespace ghzcert
