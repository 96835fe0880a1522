// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ghzcert/certificate.hpp"
#include "ghzcert/cli.hpp"
#include "ghzcert/error.hpp"
#include "ghzcert/gpor.hpp"
#include "ghzcert/json_io.hpp"
#include "ghzcert/protocol.hpp"
#include "ghzcert/tensor.hpp"
#include "test_support.hpp"

namespace {

using namespace ghzcert;
namespace t = ghzcert::testing;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::string str(std::uint64_t x) { return std::to_string(x); }

int crossing_count(const Hypergraph& h, std::uint32_t mask) {
  int count = 0;
  for (const Edge& e : h.edges()) {
    bool in = false, out = false;
    for (int v : e.vertices) (mask >> (v - 1) & 1 ? in : out) = true;
    count += in && out;
  }
  return count;
}

bool valid_paths(const Hypergraph& h, int a, int b, const std::vector<EdgePath>& paths) {
  std::set<std::size_t> used;
  for (const auto& p : paths) {
    if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) return false;
    if (p.vertices.front() != a || p.vertices.back() != b) return false;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (!used.insert(p.edges[i]).second) return false;
      if (!h.is_incident(p.vertices[i], p.edges[i]) || !h.is_incident(p.vertices[i + 1], p.edges[i])) {
        return false;
      }
    }
  }
  return true;
}

template <typename Visit>
void for_each_index(int n, std::size_t l, Visit&& visit) {
  IndexTuple idx(l, 0);
  while (true) {
    visit(static_cast<const IndexTuple&>(idx));
    std::size_t p = l;
    while (p > 0 && idx[p - 1] == n - 1) idx[--p] = 0;
    if (p == 0) return;
    ++idx[p - 1];
  }
}

// Coefficients of (1 + x + ... + x^{n-1})^l.
std::vector<std::uint64_t> generating_function(int n, int l) {
  std::vector<std::uint64_t> poly{1};
  for (int f = 0; f < l; ++f) {
    std::vector<std::uint64_t> next(poly.size() + n - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (int j = 0; j < n; ++j) next[i + j] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

// Replays the certificate's exponent tables on GHZ^H_n and returns the GHZ
// rank of the leading term, or 0 if it is not GHZ-structured.
std::size_t replay_degeneration(const Certificate& cert) {
  const Hypergraph& h = cert.hypergraph;
  SparseTensor tensor = ghz_state(h, cert.n);
  for (int j = 1; j <= h.vertex_count(); ++j) {
    const auto& inc = h.incident_edges(j);
    const LocalForm& form = cert.assignment.forms[j - 1];
    tensor = apply_local_diagonal(tensor, j, [&](const Label& label) {
      IndexTuple full(h.edge_count(), 0);
      for (std::size_t p = 0; p < inc.size(); ++p) full[inc[p]] = label[p];
      return form.evaluate(full);
    });
  }
  const GhzStructure s = check_ghz_structure(leading_term(tensor));
  return s.ok() ? s.r : 0;
}

struct Synthesized {
  std::string name;
  Certificate cert;
};

// Every certificate used by the exponent-identity and decodability checks.
const std::vector<Synthesized>& synthesized() {
  static const std::vector<Synthesized> all = [] {
    std::vector<Synthesized> out;
    auto hs = t::corpus();
    hs.push_back({"path6", t::path(6)});
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) hs.push_back({"random" + std::to_string(i), t::random_connected(rng, 2, 5, 6)});
    for (const auto& [name, h] : hs) {
      for (int n : {2, 3, 4}) {
        if (grid_size(n, h.edge_count()) > 1'000'000) continue;
        out.push_back({name + "/n=" + std::to_string(n), synthesize_certificate(h, n, 0)});
      }
    }
    return out;
  }();
  return all;
}

void criterion_connectivity(Outcome& o) {
  const std::vector<std::pair<std::string, std::pair<Hypergraph, int>>> table = {
      {"K3", {t::complete_uniform(3, 2), 2}},  {"C4", {t::cycle(4), 2}},
      {"C5", {t::cycle(5), 2}},                {"K4^2", {t::complete_uniform(4, 2), 3}},
      {"K5^2", {t::complete_uniform(5, 2), 4}}, {"K4^3", {t::complete_uniform(4, 3), 3}},
      {"full edge", {t::full_edge(5), 1}}};
  for (const auto& [name, row] : table) {
    o.require(edge_connectivity(row.first) == row.second, name);
  }
  for (int k = 2; k <= 8; ++k) o.require(edge_connectivity(t::path(k)) == 1, "path" + std::to_string(k));
  int checked = 0;
  for (int k = 2; k <= 5; ++k) {
    for (int l = 2; l <= k; ++l) {
      o.require(static_cast<std::uint64_t>(edge_connectivity(t::complete_uniform(k, l))) == t::binom(k - 1, l - 1),
                "K" + std::to_string(k) + "^" + std::to_string(l));
      ++checked;
    }
  }
  o.note = o.ok ? "table and " + std::to_string(checked) + " K_k^l binomials match" : o.note;
}

void criterion_oracles(Outcome& o) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Hypergraph h = t::random_connected(rng, 2, 5, 7);
    const int lambda = edge_connectivity(h);
    o.require(lambda == edge_connectivity_by_removal(h), "removal oracle, instance " + std::to_string(i));
    int pair_cut = 1 << 30, pair_paths = 1 << 30;
    for (int a = 1; a <= h.vertex_count(); ++a) {
      for (int b = a + 1; b <= h.vertex_count(); ++b) {
        const auto paths = edge_disjoint_paths(h, a, b);
        o.require(valid_paths(h, a, b, paths), "invalid path witness, instance " + std::to_string(i));
        pair_cut = std::min(pair_cut, min_cut_separating(h, a, b));
        pair_paths = std::min(pair_paths, static_cast<int>(paths.size()));
      }
    }
    o.require(lambda == pair_cut, "pairwise cut, instance " + std::to_string(i));
    o.require(lambda == pair_paths, "disjoint paths, instance " + std::to_string(i));
  }
  if (o.ok) o.note = "50 instances agree on all four computations";
}

void criterion_rank(Outcome& o) {
  std::mt19937_64 rng(2);
  std::size_t flattenings = 0;
  for (int i = 0; i < 10; ++i) {
    const Hypergraph h = t::random_connected(rng, 2, 4, 4);
    const int k = h.vertex_count();
    for (int n : {2, 3}) {
      const SparseTensor tensor = ghz_state(h, n);
      int best = 1 << 30;
      for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<int> side;
        for (int v = 0; v < k; ++v) {
          if (mask >> v & 1) side.push_back(v + 1);
        }
        const int cross = crossing_count(h, mask);
        std::size_t expected = 1;
        for (int c = 0; c < cross; ++c) expected *= static_cast<std::size_t>(n);
        const std::size_t r = flattening_rank(tensor, side);
        o.require(r == expected, "flattening rank, instance " + std::to_string(i));
        int log_r = 0;
        for (std::size_t x = r; x > 1; x /= static_cast<std::size_t>(n)) ++log_r;
        best = std::min(best, log_r);
        ++flattenings;
      }
      o.require(best == edge_connectivity(h), "min log-rank != lambda, instance " + std::to_string(i));
    }
  }
  if (o.ok) o.note = std::to_string(flattenings) + " flattenings equal n^cross; min log-rank = lambda";
}

void criterion_gpor(Outcome& o) {
  auto hs = t::corpus();
  std::mt19937_64 rng(3);
  while (hs.size() < t::corpus().size() + 20) {
    Hypergraph h = t::random_connected(rng, 2, 5, 6);
    if (static_cast<int>(h.edge_count()) > edge_connectivity(h)) hs.push_back({"random", std::move(h)});
  }
  std::size_t max_entry_bits = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Hypergraph& h = hs[i].h;
    const std::size_t d = h.edge_count() - static_cast<std::size_t>(edge_connectivity(h));
    try {
      const OrthRep rep = find_gpor(line_graph(h), d, i);
      o.require(verify_orthrep(rep).ok(), "non-empty report for " + hs[i].name);
      for (const auto& v : rep.vectors) {
        for (const auto& x : v) max_entry_bits = std::max(max_entry_bits, mpz_sizeinbase(x.get_mpz_t(), 2));
      }
    } catch (const Error& e) {
      o.require(false, hs[i].name + ": " + e.what());
    }
  }
  if (o.ok) o.note = std::to_string(hs.size()) + " representations verified, largest entry " + str(max_entry_bits) + " bits";
}

void criterion_strassen(Outcome& o) {
  const Hypergraph k3 = t::complete_uniform(3, 2);
  const std::vector<IntVector> c{{1}, {1}, {1}};
  const GChoice at4 = choose_g(c, 1, 4);
  const auto gf = generating_function(4, 3);
  o.require(at4.count == 12, "M at n=4 is " + str(at4.count));
  o.require(at4.g.size() == 1 && at4.g[0].fits_slong_p() && gf.at(at4.g[0].get_si()) == at4.count,
            "generating-function coefficient disagrees");
  o.require(*std::max_element(gf.begin(), gf.end()) == at4.count, "M is not the largest coefficient");

  const Certificate cert = assemble_certificate(k3, c, 1, 4, 0);
  VerifyOptions deep;
  deep.deep = true;
  const VerificationReport report = verify_certificate(cert, deep);
  o.require(report.ok(), "deep verification failed");
  o.require(replay_degeneration(cert) == 12, "leading term is not GHZ_12");

  std::string rates;
  double previous = 0.0;
  for (int n : {4, 8, 16, 32}) {
    const GChoice choice = choose_g(c, 1, n);
    const auto gfn = generating_function(n, 3);
    o.require(choice.count == *std::max_element(gfn.begin(), gfn.end()), "mode mismatch at n=" + std::to_string(n));
    const double rate = std::log2(static_cast<double>(choice.count)) / std::log2(static_cast<double>(n));
    o.require(rate >= previous, "rate decreased at n=" + std::to_string(n));
    o.require(rate <= 2.0, "rate above 2 at n=" + std::to_string(n));
    if (n == 32) o.require(rate >= 1.85, "rate at n=32 below 1.85");
    previous = rate;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sn=%d:M=%llu,%.4f", rates.empty() ? "" : " ", n,
                  static_cast<unsigned long long>(choice.count), rate);
    rates += buf;
  }
  if (o.ok) o.note = "GHZ_12 at n=4; " + rates;
}

void criterion_exponent_identity(Outcome& o) {
  std::uint64_t tuples = 0;
  for (const auto& [name, cert] : synthesized()) {
    for_each_index(cert.n, cert.hypergraph.edge_count(), [&](const IndexTuple& idx) {
      Integer direct = 0;
      bool solves = true;
      for (std::size_t j = 0; j < cert.d; ++j) {
        Integer s = -cert.g[j];
        for (std::size_t e = 0; e < idx.size(); ++e) s += cert.c[e][j] * idx[e];
        direct += s * s;
        solves = solves && s == 0;
      }
      const Integer total = cert.assignment.total(idx);
      o.require(total == direct, name + ": local exponents do not sum to the target");
      o.require((total == 0) == solves, name + ": zero exponent off the solution set");
      o.require(total >= 0, name + ": negative total exponent");
      ++tuples;
    });
  }
  if (o.ok) o.note = std::to_string(synthesized().size()) + " certificates, " + str(tuples) + " grid tuples";
}

void criterion_decodability(Outcome& o) {
  for (const auto& [name, cert] : synthesized()) {
    const Hypergraph& h = cert.hypergraph;
    const auto sols = enumerate_solutions(cert.c, cert.d, cert.n, cert.g);
    o.require(sols.size() == cert.count, name + ": M differs from the solution count");
    for (int j = 1; j <= h.vertex_count(); ++j) {
      std::set<IndexTuple> labels;
      for (const auto& s : sols) {
        IndexTuple local;
        for (std::size_t e : h.incident_edges(j)) local.push_back(s[e]);
        o.require(labels.insert(local).second, name + ": vertex " + std::to_string(j) + " cannot decode");
      }
    }
    o.require(replay_degeneration(cert) == cert.count, name + ": leading term rank differs from M");
  }
  if (o.ok) o.note = std::to_string(synthesized().size()) + " certificates decode and degenerate to GHZ_M";
}

void criterion_paths(Outcome& o) {
  std::size_t runs = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int n : {2, 3, 4, 5, 8, 16, 32}) {
      if (grid_size(n, static_cast<std::size_t>(k - 1)) > 10'000'000) continue;
      const Certificate cert = synthesize_certificate(t::path(k), n, 0);
      const std::string tag = "path" + std::to_string(k) + " n=" + std::to_string(n);
      o.require(cert.lambda == 1, tag + ": lambda != 1");
      o.require(cert.count == static_cast<std::uint64_t>(n), tag + ": M=" + str(cert.count));
      o.require(cert.log2_count == cert.log2_n, tag + ": rate is not exactly 1");
      o.require(verify_certificate(cert).ok(), tag + ": verification failed");
      ++runs;
    }
  }
  if (o.ok) o.note = std::to_string(runs) + " (path, n) pairs give M = n";
}

void criterion_epr(Outcome& o) {
  auto check = [&](const std::string& name, const Hypergraph& h, int a, int b, int t_expected) {
    const EprRate r = epr_rate(h, a, b);
    o.require(r.t == t_expected, name + ": t=" + std::to_string(r.t));
    o.require(static_cast<int>(r.paths.size()) == r.t && valid_paths(h, a, b, r.paths),
              name + ": bad path witness");
  };
  for (int k = 2; k <= 7; ++k) check("path" + std::to_string(k), t::path(k), 1, k, 1);
  check("C4 1-3", t::cycle(4), 1, 3, 2);
  check("C4 2-4", t::cycle(4), 2, 4, 2);
  check("C4 1-2", t::cycle(4), 1, 2, 2);
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) check("K3", t::complete_uniform(3, 2), a, b, 2);
  }
  if (o.ok) o.note = "t=1 on paths, t=2 on C4 and K3, witnesses edge-disjoint";
}

void criterion_orthogonalize(Outcome& o) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 7;
    const std::size_t d = 1 + i % 4;
    Graph g(n);
    std::bernoulli_distribution coin(0.35);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    std::vector<RatVector> f(n, RatVector(d));
    for (auto& v : f) {
      for (auto& x : v) x = make_rational(num(rng), den(rng));
    }
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    const auto once = orthogonalize_map(g, order, f);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        o.require(g.adjacent(u, v) || inner(once[u], once[v]) == 0, "orthogonality, pair " + std::to_string(i));
      }
    }
    o.require(orthogonalize_map(g, order, once) == once, "idempotence, pair " + std::to_string(i));
    // Rescaled outputs are still orthogonal representations, so fixed points.
    std::vector<RatVector> rescaled;
    for (const auto& v : once) rescaled.push_back(to_rational(scale_to_integers(v)));
    o.require(orthogonalize_map(g, order, rescaled) == rescaled, "fixed point, pair " + std::to_string(i));
  }
  for (const auto& [name, h] : t::corpus()) {
    const std::size_t d = h.edge_count() - static_cast<std::size_t>(edge_connectivity(h));
    const OrthRep rep = find_gpor(line_graph(h), d, 5);
    std::vector<RatVector> as_rational;
    for (const auto& v : rep.vectors) as_rational.push_back(to_rational(v));
    std::vector<std::size_t> order(as_rational.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    o.require(orthogonalize_map(rep.graph, order, as_rational) == as_rational, "GPOR not fixed: " + name);
  }
  if (o.ok) o.note = "100 random pairs plus corpus GPORs";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ghzcert");
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

void criterion_cli(Outcome& o) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ghzcert_acceptance";
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, Hypergraph>> inputs = {
      {"k3", t::complete_uniform(3, 2)}, {"path", t::path(3)}, {"c4", t::cycle(4)}};
  for (const auto& [name, h] : inputs) {
    const fs::path in = dir / (name + ".json");
    write_text_file(in.string(), hypergraph_to_json(h).dump());
    const fs::path a = dir / (name + "_a.json"), b = dir / (name + "_b.json");
    o.require(cli({"certify", in.string(), "--n", "4", "--seed", "7", "--out", a.string()}) == kExitOk, name + ": certify failed");
    o.require(cli({"certify", in.string(), "--n", "4", "--seed", "7", "--out", b.string()}) == kExitOk, name + ": certify failed");
    o.require(!read_file(a).empty() && read_file(a) == read_file(b), name + ": certificates differ");
    o.require(cli({"verify", a.string()}) == kExitOk, name + ": verify failed");
    o.require(cli({"verify", a.string(), "--deep"}) == kExitOk, name + ": deep verify failed");
  }
  fs::remove_all(dir);
  if (o.ok) o.note = "3 inputs: byte-identical certificates, verify and verify --deep pass";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "connectivity table", 1.0, criterion_connectivity},
      {2, "oracle equivalence", 30.0, criterion_oracles},
      {3, "rank lower bound", 30.0, criterion_rank},
      {4, "GPOR success", 60.0, criterion_gpor},
      {5, "Strassen reproduction", 60.0, criterion_strassen},
      {6, "exponent identity", 60.0, criterion_exponent_identity},
      {7, "decodability", 60.0, criterion_decodability},
      {8, "path exactness", 60.0, criterion_paths},
      {9, "EPR rates", 10.0, criterion_epr},
      {10, "O_G properties", 30.0, criterion_orthogonalize},
      {11, "CLI determinism and round trip", 10.0, criterion_cli},
  };
  // Criteria 6 and 7 share the synthesized certificates; build them up front
  // so neither is charged for the other's setup.
  const auto setup_start = std::chrono::steady_clock::now();
  const std::size_t certs = synthesized().size();
  const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - setup_start).count();
  std::printf("setup: %zu certificates synthesized in %.2f s\n", certs, setup);

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.note = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    std::printf("%s  %2d  %-32s %8.3f s (limit %g s)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                elapsed, c.limit_seconds, outcome.note.c_str(), in_time ? "" : " [time limit exceeded]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
