#include "ghzcert/gpor.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ghzcert/error.hpp"

namespace ghzcert {

namespace {

// Uniform integer in [-bound, bound] by rejection; unlike
// std::uniform_int_distribution this is identical across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % span) - bound;
}

std::vector<RatVector> random_map(std::size_t n, std::size_t d, std::int64_t bound,
                                  std::mt19937_64& rng) {
  std::vector<RatVector> f(n, RatVector(d));
  for (auto& v : f) {
    bool zero = true;
    while (zero) {
      for (auto& x : v) {
        const std::int64_t value = draw(rng, bound);
        x = Rational(static_cast<long>(value));
        zero = zero && value == 0;
      }
      if (d == 0) break;
    }
  }
  return f;
}

}  // namespace

std::vector<RatVector> orthogonalize_map(const Graph& g, const std::vector<std::size_t>& ordering,
                                         const std::vector<RatVector>& f) {
  const std::size_t n = g.size();
  if (f.size() != n || ordering.size() != n) {
    throw Error(ErrorCode::DimMismatch, "map and ordering must cover every graph vertex");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t v : ordering) {
    if (v >= n || seen[v]) throw Error(ErrorCode::DimMismatch, "ordering is not a permutation");
    seen[v] = true;
  }
  const std::size_t d = n == 0 ? 0 : f.front().size();
  for (const auto& v : f) {
    if (v.size() != d) throw Error(ErrorCode::DimMismatch, "map values differ in dimension");
  }

  std::vector<RatVector> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t vi = ordering[i];
    std::vector<RatVector> earlier;
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.adjacent(vi, ordering[j])) earlier.push_back(out[ordering[j]]);
    }
    RatVector value = f[vi];
    if (!earlier.empty()) {
      const RatVector p = project_onto_span(earlier, value);
      for (std::size_t c = 0; c < d; ++c) value[c] -= p[c];
    }
    out[vi] = std::move(value);
  }
  return out;
}

OrthRep find_gpor(const Graph& g, std::size_t d, std::uint64_t seed, const GporOptions& options) {
  if (d < 1) throw Error(ErrorCode::DimensionInfeasible, "dimension must be at least 1");
  if (options.bound < 1) throw Error(ErrorCode::DimensionInfeasible, "seed bound must be >= 1");
  std::vector<std::size_t> ordering(g.size());
  for (std::size_t i = 0; i < ordering.size(); ++i) ordering[i] = i;

  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    const auto f = random_map(g.size(), d, options.bound, rng);
    const auto orthogonal = orthogonalize_map(g, ordering, f);

    OrthRep rep{g, d, {}};
    rep.vectors.reserve(orthogonal.size());
    for (const auto& v : orthogonal) rep.vectors.push_back(scale_to_integers(v));
    if (verify_orthrep(rep).ok()) return rep;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no general-position orthogonal representation in dimension " + std::to_string(d) +
                  " after " + std::to_string(options.max_retries) + " attempts");
}

std::optional<std::vector<int>> coordinate_owners(const Hypergraph& h, std::size_t d) {
  const int k = h.vertex_count();
  if (k < 2 || k > 16 || !is_connected(h)) return std::nullopt;
  const long lambda = edge_connectivity(h);
  const std::size_t words = (h.edge_count() + 63) / 64;
  const std::uint32_t subsets = 1u << k;

  // cap[U] = |edges meeting U| - lambda, built from U minus its lowest vertex.
  std::vector<std::uint64_t> touch(static_cast<std::size_t>(subsets) * words, 0);
  std::vector<long> cap(subsets, 0);
  for (std::uint32_t u = 1; u < subsets; ++u) {
    const int low = __builtin_ctz(u);
    const std::uint32_t rest = u & (u - 1);
    std::uint64_t* row = &touch[static_cast<std::size_t>(u) * words];
    std::copy_n(&touch[static_cast<std::size_t>(rest) * words], words, row);
    for (std::size_t e : h.incident_edges(low + 1)) row[e / 64] |= std::uint64_t{1} << (e % 64);
    long count = 0;
    for (std::size_t w = 0; w < words; ++w) count += __builtin_popcountll(row[w]);
    cap[u] = count - lambda;
  }

  std::vector<long> owned(k, 0);
  long total = 0;
  for (int v = 0; v < k && total < static_cast<long>(d); ++v) {
    long room = static_cast<long>(d) - total;
    for (std::uint32_t u = 1; u < subsets; ++u) {
      if (!(u >> v & 1)) continue;
      long used = 0;
      for (int w = 0; w < k; ++w) {
        if (u >> w & 1) used += owned[w];
      }
      room = std::min(room, cap[u] - used);
    }
    owned[v] = std::max(room, 0L);
    total += owned[v];
  }
  if (total != static_cast<long>(d)) return std::nullopt;

  std::vector<int> owners;
  for (int v = 0; v < k; ++v) owners.insert(owners.end(), owned[v], v + 1);
  return owners;
}

std::optional<OrthRep> find_supported_gpor(const Hypergraph& h, std::size_t d, std::uint64_t seed,
                                           int max_retries) {
  if (d < 1) return std::nullopt;
  const auto owners = coordinate_owners(h, d);
  if (!owners) return std::nullopt;
  const Graph g = line_graph(h);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), 0x5eedu};
    std::mt19937_64 rng(seq);
    // Entries in {-b..b} \ {0}, widening every 8 attempts.
    const std::int64_t bound = 1 + attempt / 8;
    OrthRep rep{g, d, std::vector<IntVector>(h.edge_count(), IntVector(d, 0))};
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      for (std::size_t j = 0; j < d; ++j) {
        if (!h.is_incident((*owners)[j], e)) continue;
        std::int64_t x = 0;
        while (x == 0) x = draw(rng, bound);
        rep.vectors[e][j] = static_cast<long>(x);
      }
      rep.vectors[e] = scale_to_integers(to_rational(rep.vectors[e]));
    }
    if (verify_orthrep(rep).ok()) return rep;
  }
  return std::nullopt;
}

OrthRepReport verify_orthrep(const OrthRep& rep) {
  OrthRepReport report;
  const std::size_t n = rep.vectors.size();
  if (n != rep.graph.size()) {
    throw Error(ErrorCode::DimMismatch, "representation must have one vector per graph vertex");
  }
  for (const auto& v : rep.vectors) {
    if (v.size() != rep.d) throw Error(ErrorCode::DimMismatch, "vector dimension differs from d");
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!rep.graph.adjacent(u, v) && inner(rep.vectors[u], rep.vectors[v]) != 0) {
        report.orthogonality_violations.emplace_back(u, v);
      }
    }
  }
  if (rep.d > 0) {
    for (std::size_t u = 0; u < n; ++u) {
      const auto& v = rep.vectors[u];
      if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) {
        report.zero_vectors.push_back(u);
      }
    }
  }
  std::vector<RatVector> rational;
  rational.reserve(n);
  for (const auto& v : rep.vectors) rational.push_back(to_rational(v));
  report.dependent_subsets = dependent_subsets(rational, rep.d);
  return report;
}

}  // namespace ghzcert
