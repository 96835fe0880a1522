#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghzcert/gpor.hpp"
#include "ghzcert/hypergraph.hpp"
#include "ghzcert/protocol.hpp"

namespace ghzcert {

/// Complete record of a distillation protocol for GHZ^H_n: the orthogonal
/// representation c, the target g, its solution set and the per-vertex
/// exponent tables. A verifier can replay every claim from these fields.
struct Certificate {
  Hypergraph hypergraph;
  int lambda = 0;
  std::size_t d = 0;
  std::vector<IntVector> c;
  Integer c_prime;
  int n = 0;
  IntVector g;
  std::uint64_t count = 0;  // M
  // Listed when count <= solution cap; otherwise only the hash is kept.
  std::optional<std::vector<IndexTuple>> solutions;
  std::string solutions_hash;
  QuadraticAssignment assignment;
  double log2_count = 0.0;
  double log2_n = 0.0;
  int bound_rate = 0;
  std::uint64_t seed = 0;
  std::string version = "1";

  double achieved_rate() const { return log2_n > 0 ? log2_count / log2_n : 0.0; }
};

struct SynthesisOptions {
  GporOptions gpor;
  std::uint64_t max_grid = default_max_grid();
  std::size_t solution_cap = 10'000;
  // When set, several representations are tried (vertex-supported, small
  // seed bounds, then find_gpor with `gpor`) and the one with the largest
  // mode count wins. Otherwise only find_gpor(L(H), d, seed, gpor) is used.
  bool search = true;
  // Candidates are scored at the largest n' <= n with n'^l within this.
  std::uint64_t score_grid = 1'000'000;
};

/// Candidate representations for synthesis in scoring order, deduplicated.
/// Requires d >= 1.
std::vector<std::vector<IntVector>> gpor_candidates(const Hypergraph& h, std::size_t d,
                                                    std::uint64_t seed,
                                                    const SynthesisOptions& options = {});

/// lambda -> d = |E| - lambda -> GPOR of L(H) in Z^d -> mode g -> exponent
/// tables. Requires a valid, connected hypergraph with k >= 2 and every
/// level equal to 2. Deterministic given seed.
Certificate synthesize_certificate(const Hypergraph& h, int n, std::uint64_t seed,
                                   const SynthesisOptions& options = {});

/// Same pipeline with a caller-supplied representation c (one vector in Z^d
/// per edge); c is not checked here, verify_certificate() does that.
Certificate assemble_certificate(const Hypergraph& h, std::vector<IntVector> c, std::size_t d,
                                 int n, std::uint64_t seed, const SynthesisOptions& options = {});

/// FNV-1a (64-bit, hex) of the solutions serialized as "i,j,...;" in order.
std::string hash_solutions(const std::vector<IndexTuple>& solutions);

enum class CheckStatus { Passed, Failed, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
  bool deep = false;
  std::uint64_t max_grid = default_max_grid();
  // Exhaustive identity and degeneration checks run only below this size.
  std::uint64_t exhaustive_limit = 1'000'000;
};

/// Runs, in order: orthrep, independence, completeness, exponent_sign,
/// decodability, count_and_rate and (when deep) degeneration. Findings are
/// reported, never thrown.
VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& options = {});

inline constexpr const char* kCheckNames[] = {"orthrep",       "independence", "completeness",
                                              "exponent_sign", "decodability", "count_and_rate",
                                              "degeneration"};

}  // namespace ghzcert
