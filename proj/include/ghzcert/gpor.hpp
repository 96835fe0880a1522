#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghzcert/hypergraph.hpp"
#include "ghzcert/linalg.hpp"

namespace ghzcert {

/// Integer orthogonal representation of a graph: one vector in Z^d per
/// graph vertex, with non-adjacent vertices mapped to orthogonal vectors.
struct OrthRep {
  Graph graph;
  std::size_t d = 0;
  std::vector<IntVector> vectors;
};

struct OrthRepReport {
  std::vector<std::pair<std::size_t, std::size_t>> orthogonality_violations;
  std::vector<std::vector<std::size_t>> dependent_subsets;
  std::vector<std::size_t> zero_vectors;

  bool ok() const {
    return orthogonality_violations.empty() && dependent_subsets.empty() &&
           zero_vectors.empty();
  }
};

/// Recursive orthogonalization along `ordering`: the i-th vertex keeps the
/// component of f(v_i) orthogonal to the outputs of all earlier vertices it
/// is not adjacent to. The result is always an orthogonal representation of
/// g, and orthogonal representations are fixed points.
std::vector<RatVector> orthogonalize_map(const Graph& g, const std::vector<std::size_t>& ordering,
                                         const std::vector<RatVector>& f);

struct GporOptions {
  std::int64_t bound = 1000;
  int max_retries = 32;
};

/// Randomized search for a general-position orthogonal representation of g
/// in Z^d: uniform integer seeds in [-bound, bound], orthogonalized in natural
/// vertex order, scaled to coprime integers. Deterministic given seed.
/// Throws RetriesExhausted when no attempt verifies.
OrthRep find_gpor(const Graph& g, std::size_t d, std::uint64_t seed, const GporOptions& options = {});

/// Lists orthogonality violations, dependent min(d, n)-subsets and zero
/// vectors. Zero-dimensional representations have no zero-vector findings.
OrthRepReport verify_orthrep(const OrthRep& rep);

/// Assigns each of the d coordinates to a vertex of h such that every vertex
/// set U owns at most |edges meeting U| - lambda(h) coordinates (the Hall
/// condition for general position of vertex-supported vectors). Greedy in
/// vertex order; nullopt when it does not reach d or k > 16.
std::optional<std::vector<int>> coordinate_owners(const Hypergraph& h, std::size_t d);

/// GPOR of line_graph(h) in which c_e is supported on the coordinates owned
/// by vertices of e, with small nonzero entries there. Disjoint edges get
/// disjoint supports, so orthogonality holds by construction. nullopt when
/// no owner assignment exists or no attempt is in general position.
std::optional<OrthRep> find_supported_gpor(const Hypergraph& h, std::size_t d, std::uint64_t seed,
                                           int max_retries = 32);

}  // namespace ghzcert
