#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ghzcert/hypergraph.hpp"
#include "ghzcert/linalg.hpp"

namespace ghzcert {

/// One value i_e in [0, n-1] per edge.
using IndexTuple = std::vector<int>;

/// Integer quadratic form in the indices of the edges incident with one
/// vertex: sum q[e,f] i_e i_f (e <= f) + sum lin[e] i_e + constant.
struct LocalForm {
  std::map<std::pair<std::size_t, std::size_t>, Integer> quadratic;
  std::map<std::size_t, Integer> linear;
  Integer constant = 0;

  Integer evaluate(const IndexTuple& index) const;
  /// Edges mentioned by any nonzero term.
  std::vector<std::size_t> edges_used() const;

  friend bool operator==(const LocalForm&, const LocalForm&) = default;
};

/// forms[j - 1] is the exponent of the diagonal operator at vertex j.
struct QuadraticAssignment {
  std::vector<LocalForm> forms;

  Integer total(const IndexTuple& index) const;

  friend bool operator==(const QuadraticAssignment&, const QuadraticAssignment&) = default;
};

/// || sum_e c_e i_e - g ||^2
Integer target_exponent(const std::vector<IntVector>& c, const IntVector& g, const IndexTuple& index);

/// Splits the expansion of ||sum c_e i_e - g||^2 over the vertices so that
/// each vertex only sees indices of its incident edges. Diagonal and linear
/// terms of e go to the smallest vertex of e; the cross term of e < f goes to
/// their smallest common vertex; the constant <g,g> goes to vertex 1.
/// Throws NotOrthRep if a nonzero cross term has no common vertex.
QuadraticAssignment build_exponent_assignment(const Hypergraph& h, const std::vector<IntVector>& c,
                                              std::size_t d, const IntVector& g);

/// The polynomial sum_j form_j collected into one table, and the table of
/// the literal expansion of ||sum c_e i_e - g||^2. Equal iff the assignment
/// is complete.
LocalForm collect(const QuadraticAssignment& assignment);
LocalForm expand_target(const std::vector<IntVector>& c, std::size_t d, const IntVector& g);

/// 10^8, or the value of GHZCERT_MAX_GRID when set.
std::uint64_t default_max_grid();

/// n^l, saturating at UINT64_MAX.
std::uint64_t grid_size(int n, std::size_t l);

/// All tuples in [0, n-1]^l with sum_e i_e c_e = g, in lexicographic order.
/// Throws GridTooLarge when n^l exceeds max_grid.
std::vector<IndexTuple> enumerate_solutions(const std::vector<IntVector>& c, std::size_t d, int n,
                                            const IntVector& g,
                                            std::uint64_t max_grid = default_max_grid());

struct GChoice {
  IntVector g;
  std::uint64_t count = 0;  // M
};

/// Most frequent value of sum_e i_e c_e over the grid (ties broken by the
/// lexicographically smallest value) and its multiplicity.
GChoice choose_g(const std::vector<IntVector>& c, std::size_t d, int n,
                 std::uint64_t max_grid = default_max_grid());

/// C' = max over coordinates j of sum_e |c_e[j]| (0 when d = 0).
Integer row_sum_bound(const std::vector<IntVector>& c, std::size_t d);

/// ceil(n^l / (2 C' (n-1) + 1)^d), a lower bound on the mode's multiplicity.
Integer counting_floor(int n, std::size_t l, std::size_t d, const Integer& c_prime);

struct RateBound {
  bool uniform_level_two = false;
  int lambda = 0;          // unweighted edge connectivity
  Integer min_cut_rank;    // product of levels over the lightest cut
  double log2_rank = 0.0;  // GHZ_2 per copy
  Cut witness;             // cut achieving min_cut_rank
};

/// Optimal GHZ extraction rate: lambda(H) GHZ_2 states per copy for
/// uniform level 2, log2 of the minimum cut rank otherwise.
RateBound ghz_rate_bound(const Hypergraph& h);

struct EprRate {
  int t = 0;
  std::vector<EdgePath> paths;
};

/// t = minimum a-b cut, with t edge-disjoint paths as witness; the rate is
/// 1/t copies per EPR pair. Requires uniform level 2.
EprRate epr_rate(const Hypergraph& h, int a, int b);

}  // namespace ghzcert
