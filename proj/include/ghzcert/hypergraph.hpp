#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ghzcert {

// Vertices are numbered 1..k; edges are identified by their 0-based position.
struct Edge {
  std::vector<int> vertices;
  int level = 2;
};

class Hypergraph {
 public:
  Hypergraph() = default;

  /// Vertex lists are sorted and deduplicated; nothing else is checked here,
  /// call validate() for that.
  Hypergraph(int k, std::vector<Edge> edges);

  int vertex_count() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// Ascending indices of the edges incident with vertex j (1-based).
  const std::vector<std::size_t>& incident_edges(int j) const {
    return incident_.at(static_cast<std::size_t>(j - 1));
  }
  bool is_incident(int j, std::size_t e) const;

  bool all_levels_equal(int r) const;

 private:
  int k_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Throws Error(EmptyEdge | VertexOutOfRange | BadLevel) naming the first
/// offending edge.
void validate(const Hypergraph& h);

struct Cut {
  std::vector<int> side;              // S, ascending
  std::vector<std::size_t> crossing;  // edges meeting both S and its complement
  mpz_class rank;                     // product of crossing levels
};

/// Cut induced by the vertex set `side`.
Cut make_cut(const Hypergraph& h, std::vector<int> side);

bool is_connected(const Hypergraph& h);

/// Minimum number of crossing edges over all bipartitions (levels ignored).
/// Exhaustive over 2^(k-1)-1 bipartitions; k is limited to kMaxCutVertices.
int edge_connectivity(const Hypergraph& h);

/// A bipartition achieving edge_connectivity(); the first one in enumeration
/// order, which always has vertex 1 on its side.
Cut minimum_cut(const Hypergraph& h);

/// Largest l such that removing any fewer than l edges keeps h connected.
/// Brute force over edge subsets; intended as a test oracle.
int edge_connectivity_by_removal(const Hypergraph& h);

/// Minimum over bipartitions of the product of crossing edge levels.
mpz_class min_cut_rank(const Hypergraph& h);

/// Bipartition achieving min_cut_rank().
Cut minimum_rank_cut(const Hypergraph& h);

/// Minimum number of crossing edges over bipartitions with a in S, b not in S.
int min_cut_separating(const Hypergraph& h, int a, int b);

struct EdgePath {
  std::vector<std::size_t> edges;
  // a = vertices.front(), b = vertices.back(); edges[i] joins vertices[i]
  // and vertices[i + 1].
  std::vector<int> vertices;
};

/// Maximum family of pairwise edge-disjoint a-b paths, by unit-capacity
/// max-flow on the vertex/edge incidence network.
std::vector<EdgePath> edge_disjoint_paths(const Hypergraph& h, int a, int b);

inline constexpr int kMaxCutVertices = 24;
inline constexpr std::size_t kMaxRemovalEdges = 16;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return adj_[u * n_ + v] != 0;
  }
  std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;
  bool is_complete() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

/// Vertices are the edges of h; two are adjacent iff they share a vertex.
Graph line_graph(const Hypergraph& h);

bool is_connected(const Graph& g);

/// Largest kappa such that deleting fewer than kappa vertices leaves g
/// connected (n - 1 for complete graphs). Exhaustive; n <= 16.
int vertex_connectivity(const Graph& g);

inline constexpr std::size_t kMaxVertexConnectivityOrder = 16;

}  // namespace ghzcert
