#include "ghzcert/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "ghzcert/error.hpp"
#include "ghzcert/tensor.hpp"

namespace ghzcert {

namespace {

void require_synthesizable(const Hypergraph& h, int n, const SynthesisOptions& options) {
  validate(h);
  if (h.vertex_count() < 2) throw Error(ErrorCode::TooFewVertices, "need at least 2 vertices");
  if (!h.all_levels_equal(2)) {
    throw Error(ErrorCode::LevelsUnsupported,
                "protocol synthesis supports uniform level-2 edges only; use rate queries for "
                "mixed levels");
  }
  if (!is_connected(h)) throw Error(ErrorCode::Disconnected, "hypergraph is not connected");
  if (n < 2) throw Error(ErrorCode::BadLevel, "n must be at least 2");
  if (grid_size(n, h.edge_count()) > options.max_grid) {
    throw Error(ErrorCode::GridTooLarge, "grid n^l exceeds the limit of " +
                                             std::to_string(options.max_grid) +
                                             " (set GHZCERT_MAX_GRID to raise it)");
  }
}

template <typename Visit>
void for_each_tuple(std::size_t l, int n, Visit&& visit) {
  IndexTuple index(l, 0);
  while (true) {
    visit(static_cast<const IndexTuple&>(index));
    std::size_t pos = l;
    while (pos > 0 && index[pos - 1] == n - 1) index[--pos] = 0;
    if (pos == 0) return;
    ++index[pos - 1];
  }
}

IndexTuple local_view(const Hypergraph& h, int j, const IndexTuple& index) {
  IndexTuple out;
  for (std::size_t e : h.incident_edges(j)) out.push_back(index[e]);
  return out;
}

bool is_local(const Hypergraph& h, const QuadraticAssignment& a, int j) {
  const auto& inc = h.incident_edges(j);
  for (std::size_t e : a.forms[static_cast<std::size_t>(j - 1)].edges_used()) {
    if (!std::binary_search(inc.begin(), inc.end(), e)) return false;
  }
  return true;
}

std::string tuple_to_string(const IndexTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

// Runs body(); an Error thrown inside becomes a failed check.
template <typename Body>
CheckResult run_check(const std::string& name, Body&& body) {
  CheckResult result{name, CheckStatus::Passed, ""};
  try {
    body(result);
  } catch (const Error& err) {
    result.status = CheckStatus::Failed;
    result.detail = std::string(code_name(err.code())) + ": " + err.what();
  }
  return result;
}

void fail(CheckResult& r, const std::string& detail) {
  r.status = CheckStatus::Failed;
  r.detail = detail;
}

void require_shape(const Certificate& cert) {
  validate(cert.hypergraph);
  if (cert.c.size() != cert.hypergraph.edge_count()) {
    throw Error(ErrorCode::DimMismatch, "need one c vector per edge");
  }
  for (const auto& v : cert.c) {
    if (v.size() != cert.d) throw Error(ErrorCode::DimMismatch, "c vector is not in Z^d");
  }
  if (cert.g.size() != cert.d) throw Error(ErrorCode::DimMismatch, "g is not in Z^d");
  if (cert.assignment.forms.size() != static_cast<std::size_t>(cert.hypergraph.vertex_count())) {
    throw Error(ErrorCode::DimMismatch, "need one exponent table per vertex");
  }
  if (cert.n < 2) throw Error(ErrorCode::BadLevel, "n must be at least 2");
}

}  // namespace

std::string hash_solutions(const std::vector<IndexTuple>& solutions) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](const std::string& s) {
    for (unsigned char ch : s) {
      hash ^= ch;
      hash *= 0x100000001b3ULL;
    }
  };
  for (const auto& t : solutions) {
    std::string part;
    for (std::size_t i = 0; i < t.size(); ++i) part += (i ? "," : "") + std::to_string(t[i]);
    feed(part + ";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Certificate assemble_certificate(const Hypergraph& h, std::vector<IntVector> c, std::size_t d,
                                 int n, std::uint64_t seed, const SynthesisOptions& options) {
  require_synthesizable(h, n, options);
  Certificate cert;
  cert.hypergraph = h;
  cert.lambda = edge_connectivity(h);
  cert.d = d;
  cert.c = std::move(c);
  cert.c_prime = row_sum_bound(cert.c, d);
  cert.n = n;
  const GChoice choice = choose_g(cert.c, d, n, options.max_grid);
  cert.g = choice.g;
  cert.count = choice.count;
  auto solutions = enumerate_solutions(cert.c, d, n, cert.g, options.max_grid);
  cert.solutions_hash = hash_solutions(solutions);
  if (solutions.size() <= options.solution_cap) cert.solutions = std::move(solutions);
  cert.assignment = build_exponent_assignment(h, cert.c, d, cert.g);
  cert.log2_count = std::log2(static_cast<double>(cert.count));
  cert.log2_n = std::log2(static_cast<double>(n));
  cert.bound_rate = cert.lambda;
  cert.seed = seed;
  return cert;
}

Certificate synthesize_certificate(const Hypergraph& h, int n, std::uint64_t seed,
                                   const SynthesisOptions& options) {
  require_synthesizable(h, n, options);
  const int lambda = edge_connectivity(h);
  const std::size_t d = h.edge_count() - static_cast<std::size_t>(lambda);
  std::vector<IntVector> c(h.edge_count());
  // d = 0 happens when every edge contains every vertex; then the
  // constraint system is empty and GHZ^H_n is already GHZ_{n^l}.
  if (d > 0) {
    const auto candidates = gpor_candidates(h, d, seed, options);
    int score_n = n;
    while (score_n > 2 && grid_size(score_n, h.edge_count()) > options.score_grid) --score_n;
    std::uint64_t best = 0;
    for (const auto& candidate : candidates) {
      const std::uint64_t count =
          candidates.size() == 1 ? 1 : choose_g(candidate, d, score_n, UINT64_MAX).count;
      if (count > best) {
        best = count;
        c = candidate;
      }
    }
  }
  return assemble_certificate(h, std::move(c), d, n, seed, options);
}

std::vector<std::vector<IntVector>> gpor_candidates(const Hypergraph& h, std::size_t d,
                                                    std::uint64_t seed,
                                                    const SynthesisOptions& options) {
  const Graph g = line_graph(h);
  std::vector<std::vector<IntVector>> out;
  auto add = [&out](std::vector<IntVector> c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  if (options.search) {
    if (auto rep = find_supported_gpor(h, d, seed)) add(std::move(rep->vectors));
    for (std::int64_t bound : {1, 2, 3}) {
      for (std::uint64_t i = 0; i < 4; ++i) {
        const std::uint64_t derived = seed * 0x9e3779b97f4a7c15ULL + (bound << 8) + i;
        try {
          add(find_gpor(g, d, derived, GporOptions{bound, options.gpor.max_retries}).vectors);
        } catch (const Error& err) {
          if (err.code() != ErrorCode::RetriesExhausted) throw;
        }
      }
    }
  }
  try {
    add(find_gpor(g, d, seed, options.gpor).vectors);
  } catch (const Error& err) {
    if (out.empty() || err.code() != ErrorCode::RetriesExhausted) throw;
  }
  return out;
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Failed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& options) {
  VerificationReport report;
  const Hypergraph& h = cert.hypergraph;
  const std::size_t l = h.edge_count();
  const int k = h.vertex_count();
  const bool small_grid = cert.n >= 2 && grid_size(cert.n, l) <= options.exhaustive_limit;

  report.checks.push_back(run_check("orthrep", [&](CheckResult& r) {
    require_shape(cert);
    const OrthRepReport o = verify_orthrep(OrthRep{line_graph(h), cert.d, cert.c});
    if (!o.ok()) {
      fail(r, std::to_string(o.orthogonality_violations.size()) + " orthogonality violations, " +
                  std::to_string(o.dependent_subsets.size()) + " dependent subsets, " +
                  std::to_string(o.zero_vectors.size()) + " zero vectors");
    }
  }));

  report.checks.push_back(run_check("independence", [&](CheckResult& r) {
    require_shape(cert);
    for (int j = 1; j <= k; ++j) {
      std::vector<RatVector> outside;
      for (std::size_t e = 0; e < l; ++e) {
        if (!h.is_incident(j, e)) outside.push_back(to_rational(cert.c[e]));
      }
      if (!linearly_independent(outside, cert.d)) {
        fail(r, "vectors of edges missing vertex " + std::to_string(j) +
                    " are linearly dependent");
        return;
      }
    }
  }));

  // Checks 3 and 4 share one pass over the grid.
  bool symbolic_ok = false;
  std::string grid_mismatch;
  std::string sign_violation;
  report.checks.push_back(run_check("completeness", [&](CheckResult& r) {
    require_shape(cert);
    for (int j = 1; j <= k; ++j) {
      if (!is_local(h, cert.assignment, j)) {
        fail(r, "exponent table of vertex " + std::to_string(j) +
                    " uses an edge not incident with it");
        return;
      }
    }
    symbolic_ok = collect(cert.assignment) == expand_target(cert.c, cert.d, cert.g);
    if (!symbolic_ok) {
      fail(r, "sum of exponent tables differs from the expansion of ||c.i - g||^2");
      return;
    }
    if (!small_grid) {
      r.detail = "symbolic identity only; grid too large for exhaustive evaluation";
      return;
    }
    for_each_tuple(l, cert.n, [&](const IndexTuple& index) {
      const Integer total = cert.assignment.total(index);
      const Integer target = target_exponent(cert.c, cert.g, index);
      if (grid_mismatch.empty() && total != target) {
        grid_mismatch = "identity fails at " + tuple_to_string(index);
      }
      if (sign_violation.empty() && (total < 0 || (total == 0) != (target == 0))) {
        sign_violation = "exponent " + total.get_str() + " at " + tuple_to_string(index);
      }
    });
    if (!grid_mismatch.empty()) fail(r, grid_mismatch);
  }));

  report.checks.push_back(run_check("exponent_sign", [&](CheckResult& r) {
    require_shape(cert);
    if (small_grid) {
      if (!symbolic_ok && sign_violation.empty()) {
        // Completeness bailed out before the grid pass; run it here.
        for_each_tuple(l, cert.n, [&](const IndexTuple& index) {
          if (!sign_violation.empty()) return;
          const Integer total = cert.assignment.total(index);
          const Integer target = target_exponent(cert.c, cert.g, index);
          if (total < 0 || (total == 0) != (target == 0)) {
            sign_violation = "exponent " + total.get_str() + " at " + tuple_to_string(index);
          }
        });
      }
      if (!sign_violation.empty()) fail(r, sign_violation);
    } else if (!symbolic_ok) {
      fail(r, "cannot be established: symbolic identity failed and the grid is too large");
    } else {
      r.detail = "implied by the symbolic identity";
    }
    if (r.status == CheckStatus::Passed && cert.solutions) {
      // Listed solutions must be exactly the zero-exponent tuples.
      for (const auto& s : *cert.solutions) {
        if (s.size() != l || cert.assignment.total(s) != 0 ||
            target_exponent(cert.c, cert.g, s) != 0) {
          fail(r, "listed solution " + tuple_to_string(s) + " does not have exponent 0");
          return;
        }
      }
    }
  }));

  std::vector<IndexTuple> recomputed;
  bool have_recomputed = false;
  report.checks.push_back(run_check("decodability", [&](CheckResult& r) {
    require_shape(cert);
    std::vector<IndexTuple> solutions;
    if (cert.solutions) {
      solutions = *cert.solutions;
    } else {
      recomputed = enumerate_solutions(cert.c, cert.d, cert.n, cert.g, options.max_grid);
      have_recomputed = true;
      solutions = recomputed;
    }
    for (const auto& s : solutions) {
      const bool in_range = s.size() == l && std::all_of(s.begin(), s.end(), [&](int x) {
                              return x >= 0 && x < cert.n;
                            });
      if (!in_range || target_exponent(cert.c, cert.g, s) != 0) {
        fail(r, "solution " + tuple_to_string(s) + " does not satisfy c.i = g");
        return;
      }
    }
    for (int j = 1; j <= k; ++j) {
      std::set<IndexTuple> seen;
      for (const auto& s : solutions) {
        if (!seen.insert(local_view(h, j, s)).second) {
          fail(r, "vertex " + std::to_string(j) + " sees label " +
                      tuple_to_string(local_view(h, j, s)) + " twice");
          return;
        }
      }
    }
  }));

  report.checks.push_back(run_check("count_and_rate", [&](CheckResult& r) {
    require_shape(cert);
    const int lambda = edge_connectivity(h);
    if (cert.lambda != lambda || cert.bound_rate != lambda) {
      fail(r, "lambda is " + std::to_string(lambda));
      return;
    }
    if (cert.d != l - static_cast<std::size_t>(lambda)) {
      fail(r, "d must be |E| - lambda = " + std::to_string(l - static_cast<std::size_t>(lambda)));
      return;
    }
    if (cert.c_prime != row_sum_bound(cert.c, cert.d)) {
      fail(r, "C' is " + row_sum_bound(cert.c, cert.d).get_str());
      return;
    }
    if (!have_recomputed) {
      recomputed = enumerate_solutions(cert.c, cert.d, cert.n, cert.g, options.max_grid);
      have_recomputed = true;
    }
    if (cert.count != recomputed.size()) {
      fail(r, "c.i = g has " + std::to_string(recomputed.size()) + " solutions, certificate says " +
                  std::to_string(cert.count));
      return;
    }
    if (cert.solutions && *cert.solutions != recomputed) {
      fail(r, "listed solutions differ from the recomputed solution set");
      return;
    }
    if (!cert.solutions_hash.empty() && cert.solutions_hash != hash_solutions(recomputed)) {
      fail(r, "solution hash mismatch");
      return;
    }
    if (!close(cert.log2_count, std::log2(static_cast<double>(cert.count))) ||
        !close(cert.log2_n, std::log2(static_cast<double>(cert.n)))) {
      fail(r, "rate fields do not match log2 M and log2 n");
      return;
    }
    r.detail = "M=" + std::to_string(cert.count) + ", rate=" + std::to_string(cert.achieved_rate()) +
               " (bound " + std::to_string(lambda) + ")";
  }));

  if (options.deep) {
    report.checks.push_back(run_check("degeneration", [&](CheckResult& r) {
      require_shape(cert);
      if (!small_grid) {
        r.status = CheckStatus::Skipped;
        r.detail = "grid exceeds " + std::to_string(options.exhaustive_limit);
        return;
      }
      SparseTensor t = ghz_state(h, cert.n);
      for (int j = 1; j <= k; ++j) {
        if (!is_local(h, cert.assignment, j)) {
          fail(r, "vertex " + std::to_string(j) + " operator is not local");
          return;
        }
        const auto& inc = h.incident_edges(j);
        const LocalForm& form = cert.assignment.forms[static_cast<std::size_t>(j - 1)];
        t = apply_local_diagonal(t, static_cast<std::size_t>(j), [&](const Label& label) {
          IndexTuple full(l, 0);
          for (std::size_t p = 0; p < inc.size(); ++p) full[inc[p]] = label[p];
          return form.evaluate(full);
        });
      }
      const SparseTensor lead = leading_term(t);
      const GhzStructure ghz = check_ghz_structure(lead);
      if (!ghz.ok()) {
        fail(r, "leading term is not GHZ: vertex " + std::to_string(*ghz.site) + " repeats " +
                    label_to_string(*ghz.repeated));
        return;
      }
      if (ghz.r != cert.count) {
        fail(r, "leading term is GHZ_" + std::to_string(ghz.r) + ", expected GHZ_" +
                    std::to_string(cert.count));
        return;
      }
      std::vector<IndexTuple> terms;
      for (const auto& entry : lead.entries()) {
        IndexTuple index(l, 0);
        for (int j = 1; j <= k; ++j) {
          const auto& inc = h.incident_edges(j);
          const Label& label = lead.label(static_cast<std::size_t>(j), entry.key[j - 1]);
          for (std::size_t p = 0; p < inc.size(); ++p) index[inc[p]] = label[p];
        }
        terms.push_back(std::move(index));
      }
      std::sort(terms.begin(), terms.end());
      if (!have_recomputed) {
        recomputed = enumerate_solutions(cert.c, cert.d, cert.n, cert.g, options.max_grid);
        have_recomputed = true;
      }
      if (terms != recomputed) {
        fail(r, "leading-term support differs from the solution set");
        return;
      }
      r.detail = "leading term is GHZ_" + std::to_string(ghz.r);
    }));
  }
  return report;
}

}  // namespace ghzcert
