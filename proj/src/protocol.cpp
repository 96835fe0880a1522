#include "ghzcert/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "ghzcert/error.hpp"

namespace ghzcert {

namespace {

void require_coefficients(const std::vector<IntVector>& c, std::size_t d) {
  for (const auto& v : c) {
    if (v.size() != d) throw Error(ErrorCode::DimMismatch, "coefficient vector is not in Z^d");
  }
}

void require_level(int n) {
  if (n < 2) throw Error(ErrorCode::BadLevel, "n must be at least 2");
}

// Values of sum_e i_e c_e live in a box; mixed-radix positions inside the box
// turn each value into one scalar key whose order is lexicographic order.
struct ValueBox {
  std::vector<Integer> low;
  std::vector<Integer> range;
  std::vector<Integer> stride;
  Integer size = 1;
  Integer base = 0;              // key of the zero vector
  std::vector<Integer> offsets;  // key increment per unit of i_e

  ValueBox(const std::vector<IntVector>& c, std::size_t d, int n)
      : low(d), range(d), stride(d) {
    for (std::size_t j = 0; j < d; ++j) {
      Integer pos = 0;
      Integer neg = 0;
      for (const auto& v : c) (v[j] > 0 ? pos : neg) += abs(v[j]);
      low[j] = -neg * (n - 1);
      range[j] = (pos + neg) * (n - 1) + 1;
    }
    for (std::size_t j = d; j-- > 0;) {
      stride[j] = size;
      size *= range[j];
    }
    for (std::size_t j = 0; j < d; ++j) base -= low[j] * stride[j];
    for (const auto& v : c) {
      Integer off = 0;
      for (std::size_t j = 0; j < d; ++j) off += v[j] * stride[j];
      offsets.push_back(off);
    }
  }

  // Key of v, or -1 when v is outside the box.
  Integer encode(const IntVector& v) const {
    Integer key = 0;
    for (std::size_t j = 0; j < low.size(); ++j) {
      const Integer digit = v[j] - low[j];
      if (digit < 0 || digit >= range[j]) return Integer(-1);
      key += digit * stride[j];
    }
    return key;
  }

  IntVector decode(Integer key) const {
    IntVector v(low.size());
    for (std::size_t j = 0; j < low.size(); ++j) {
      const Integer digit = key / stride[j];
      key -= digit * stride[j];
      v[j] = digit + low[j];
    }
    return v;
  }
};

template <typename Scalar>
Scalar narrow(const Integer& x) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    return x;
  } else {
    return static_cast<Scalar>(x.get_si());
  }
}

// Walks [0, n-1]^l in lexicographic order, calling visit(index, key).
template <typename Scalar, typename Visit>
void walk_grid(const ValueBox& box, std::size_t l, int n, Visit&& visit) {
  std::vector<Scalar> step;
  std::vector<Scalar> wrap;
  for (const auto& off : box.offsets) {
    step.push_back(narrow<Scalar>(off));
    wrap.push_back(narrow<Scalar>(off * (n - 1)));
  }
  Scalar key = narrow<Scalar>(box.base);
  IndexTuple index(l, 0);
  while (true) {
    visit(static_cast<const IndexTuple&>(index), static_cast<const Scalar&>(key));
    std::size_t pos = l;
    while (pos > 0 && index[pos - 1] == n - 1) {
      index[pos - 1] = 0;
      key -= wrap[pos - 1];
      --pos;
    }
    if (pos == 0) return;
    ++index[pos - 1];
    key += step[pos - 1];
  }
}

bool fits_fast_path(const ValueBox& box) {
  return box.size < (Integer(1) << 62);
}

void require_grid(int n, std::size_t l, std::uint64_t max_grid) {
  const std::uint64_t size = grid_size(n, l);
  if (size > max_grid) {
    throw Error(ErrorCode::GridTooLarge, "grid n^l exceeds the limit of " +
                                             std::to_string(max_grid) +
                                             " (set GHZCERT_MAX_GRID to raise it)");
  }
}

template <typename Scalar>
GChoice choose_g_with(const ValueBox& box, std::size_t l, int n) {
  constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
  Scalar best_key{};
  std::uint64_t best = 0;
  auto consider = [&](const Scalar& key, std::uint64_t count) {
    if (count > best || (count == best && key < best_key)) {
      best = count;
      best_key = key;
    }
  };
  if constexpr (std::is_same_v<Scalar, std::int64_t>) {
    if (box.size <= kDenseLimit) {
      std::vector<std::uint64_t> hist(box.size.get_ui(), 0);
      walk_grid<Scalar>(box, l, n, [&](const IndexTuple&, const Scalar& key) {
        ++hist[static_cast<std::size_t>(key)];
      });
      for (std::size_t key = 0; key < hist.size(); ++key) {
        if (hist[key] > best) {
          best = hist[key];
          best_key = static_cast<Scalar>(key);
        }
      }
    } else {
      std::unordered_map<std::int64_t, std::uint64_t> hist;
      walk_grid<Scalar>(box, l, n, [&](const IndexTuple&, const Scalar& key) { ++hist[key]; });
      for (const auto& [key, count] : hist) consider(key, count);
    }
  } else {
    std::map<Integer, std::uint64_t> hist;
    walk_grid<Scalar>(box, l, n, [&](const IndexTuple&, const Scalar& key) { ++hist[key]; });
    for (const auto& [key, count] : hist) consider(key, count);
  }
  return GChoice{box.decode(Integer(best_key)), best};
}

}  // namespace

Integer LocalForm::evaluate(const IndexTuple& index) const {
  Integer acc = constant;
  for (const auto& [ef, q] : quadratic) acc += q * index.at(ef.first) * index.at(ef.second);
  for (const auto& [e, a] : linear) acc += a * index.at(e);
  return acc;
}

std::vector<std::size_t> LocalForm::edges_used() const {
  std::vector<std::size_t> edges;
  for (const auto& [ef, q] : quadratic) {
    if (q != 0) {
      edges.push_back(ef.first);
      edges.push_back(ef.second);
    }
  }
  for (const auto& [e, a] : linear) {
    if (a != 0) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Integer QuadraticAssignment::total(const IndexTuple& index) const {
  Integer acc = 0;
  for (const auto& form : forms) acc += form.evaluate(index);
  return acc;
}

Integer target_exponent(const std::vector<IntVector>& c, const IntVector& g, const IndexTuple& index) {
  IntVector v = g;
  for (auto& x : v) x = -x;
  for (std::size_t e = 0; e < c.size(); ++e) {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[e][j] * index.at(e);
  }
  return inner(v, v);
}

QuadraticAssignment build_exponent_assignment(const Hypergraph& h, const std::vector<IntVector>& c,
                                              std::size_t d, const IntVector& g) {
  validate(h);
  if (c.size() != h.edge_count()) {
    throw Error(ErrorCode::DimMismatch, "need one coefficient vector per edge");
  }
  require_coefficients(c, d);
  if (g.size() != d) throw Error(ErrorCode::DimMismatch, "g is not in Z^d");

  QuadraticAssignment out;
  out.forms.resize(static_cast<std::size_t>(h.vertex_count()));
  auto form_at = [&](int vertex) -> LocalForm& {
    return out.forms[static_cast<std::size_t>(vertex - 1)];
  };
  const std::size_t l = h.edge_count();
  for (std::size_t e = 0; e < l; ++e) {
    LocalForm& host = form_at(h.edge(e).vertices.front());
    const Integer square = inner(c[e], c[e]);
    if (square != 0) host.quadratic[{e, e}] += square;
    const Integer lin = -2 * inner(c[e], g);
    if (lin != 0) host.linear[e] += lin;
  }
  for (std::size_t e = 0; e < l; ++e) {
    for (std::size_t f = e + 1; f < l; ++f) {
      const Integer cross = inner(c[e], c[f]);
      if (cross == 0) continue;
      const auto& ve = h.edge(e).vertices;
      const auto& vf = h.edge(f).vertices;
      std::vector<int> common;
      std::set_intersection(ve.begin(), ve.end(), vf.begin(), vf.end(), std::back_inserter(common));
      if (common.empty()) {
        throw Error(ErrorCode::NotOrthRep,
                    "edges " + std::to_string(e) + " and " + std::to_string(f) +
                        " share no vertex but their vectors are not orthogonal",
                    e);
      }
      form_at(common.front()).quadratic[{e, f}] += 2 * cross;
    }
  }
  form_at(1).constant += inner(g, g);
  return out;
}

LocalForm collect(const QuadraticAssignment& assignment) {
  LocalForm sum;
  for (const auto& form : assignment.forms) {
    for (const auto& [ef, q] : form.quadratic) sum.quadratic[ef] += q;
    for (const auto& [e, a] : form.linear) sum.linear[e] += a;
    sum.constant += form.constant;
  }
  std::erase_if(sum.quadratic, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(sum.linear, [](const auto& kv) { return kv.second == 0; });
  return sum;
}

LocalForm expand_target(const std::vector<IntVector>& c, std::size_t d, const IntVector& g) {
  require_coefficients(c, d);
  if (g.size() != d) throw Error(ErrorCode::DimMismatch, "g is not in Z^d");
  LocalForm t;
  for (std::size_t e = 0; e < c.size(); ++e) {
    for (std::size_t f = e; f < c.size(); ++f) {
      const Integer q = (e == f ? 1 : 2) * inner(c[e], c[f]);
      if (q != 0) t.quadratic[{e, f}] = q;
    }
    const Integer lin = -2 * inner(c[e], g);
    if (lin != 0) t.linear[e] = lin;
  }
  t.constant = inner(g, g);
  return t;
}

std::uint64_t default_max_grid() {
  constexpr std::uint64_t kDefault = 100'000'000;
  if (const char* env = std::getenv("GHZCERT_MAX_GRID")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefault;
}

std::uint64_t grid_size(int n, std::size_t l) {
  std::uint64_t size = 1;
  for (std::size_t e = 0; e < l; ++e) {
    if (size > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= static_cast<std::uint64_t>(n);
  }
  return size;
}

std::vector<IndexTuple> enumerate_solutions(const std::vector<IntVector>& c, std::size_t d, int n,
                                            const IntVector& g, std::uint64_t max_grid) {
  require_level(n);
  require_coefficients(c, d);
  if (g.size() != d) throw Error(ErrorCode::DimMismatch, "g is not in Z^d");
  require_grid(n, c.size(), max_grid);
  const ValueBox box(c, d, n);
  const Integer target = box.encode(g);
  std::vector<IndexTuple> out;
  if (target < 0) return out;
  if (fits_fast_path(box)) {
    const std::int64_t key = target.get_si();
    walk_grid<std::int64_t>(box, c.size(), n, [&](const IndexTuple& index, std::int64_t k) {
      if (k == key) out.push_back(index);
    });
  } else {
    walk_grid<Integer>(box, c.size(), n, [&](const IndexTuple& index, const Integer& k) {
      if (k == target) out.push_back(index);
    });
  }
  return out;
}

GChoice choose_g(const std::vector<IntVector>& c, std::size_t d, int n, std::uint64_t max_grid) {
  require_level(n);
  require_coefficients(c, d);
  require_grid(n, c.size(), max_grid);
  const ValueBox box(c, d, n);
  if (fits_fast_path(box)) return choose_g_with<std::int64_t>(box, c.size(), n);
  return choose_g_with<Integer>(box, c.size(), n);
}

Integer row_sum_bound(const std::vector<IntVector>& c, std::size_t d) {
  require_coefficients(c, d);
  Integer best = 0;
  for (std::size_t j = 0; j < d; ++j) {
    Integer sum = 0;
    for (const auto& v : c) sum += abs(v[j]);
    best = std::max(best, sum);
  }
  return best;
}

Integer counting_floor(int n, std::size_t l, std::size_t d, const Integer& c_prime) {
  Integer grid;
  mpz_ui_pow_ui(grid.get_mpz_t(), static_cast<unsigned long>(n), l);
  const Integer side = 2 * c_prime * (n - 1) + 1;
  Integer boxes;
  mpz_pow_ui(boxes.get_mpz_t(), side.get_mpz_t(), d);
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), grid.get_mpz_t(), boxes.get_mpz_t());
  return q;
}

RateBound ghz_rate_bound(const Hypergraph& h) {
  RateBound out;
  out.uniform_level_two = h.all_levels_equal(2);
  out.lambda = edge_connectivity(h);
  out.witness = minimum_rank_cut(h);
  out.min_cut_rank = out.witness.rank;
  // log2 of a big integer: exponent plus mantissa.
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, out.min_cut_rank.get_mpz_t());
  out.log2_rank = std::log2(mantissa) + static_cast<double>(exp);
  return out;
}

EprRate epr_rate(const Hypergraph& h, int a, int b) {
  validate(h);
  if (!h.all_levels_equal(2)) {
    throw Error(ErrorCode::LevelsUnsupported, "EPR rates need every edge at level 2");
  }
  if (a == b) throw Error(ErrorCode::SameVertex, "a and b must differ");
  if (!is_connected(h)) throw Error(ErrorCode::Disconnected, "hypergraph is not connected");
  EprRate out;
  out.t = min_cut_separating(h, a, b);
  out.paths = edge_disjoint_paths(h, a, b);
  return out;
}

}  // namespace ghzcert
