#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghzcert/hypergraph.hpp"
#include "ghzcert/laurent.hpp"

namespace ghzcert {

/// Local basis label at one site: the tuple of incident edge indices' values.
using Label = std::vector<int>;

/// k-site tensor with Laurent-polynomial coefficients. Sites are numbered
/// 1..k like hypergraph vertices. Each site has a declared alphabet of
/// labels; entries refer to labels by their position in that alphabet.
class SparseTensor {
 public:
  struct Entry {
    std::vector<std::uint32_t> key;  // key[j - 1] indexes alphabet(j)
    LaurentPoly coeff;               // never zero
  };

  SparseTensor() = default;
  /// Alphabets must be free of duplicates. Entries start empty.
  explicit SparseTensor(std::vector<std::vector<Label>> alphabets);

  /// Builds a tensor from labelled terms; alphabets are the labels used at
  /// each site (sorted). Repeated keys are summed and zero sums dropped.
  static SparseTensor from_terms(std::size_t sites,
                                 const std::vector<std::pair<std::vector<Label>, LaurentPoly>>& terms);

  std::size_t sites() const noexcept { return alphabets_.size(); }
  const std::vector<Label>& alphabet(std::size_t site) const { return alphabets_.at(site - 1); }
  const Label& label(std::size_t site, std::uint32_t id) const { return alphabet(site).at(id); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Appends an entry; the caller guarantees the key is new. Zero
  /// coefficients are ignored.
  void push_entry(std::vector<std::uint32_t> key, LaurentPoly coeff);

  /// One line per entry: "((0,1),(1),()) : 1*e^2".
  std::string dump() const;

 private:
  std::vector<std::vector<Label>> alphabets_;
  std::vector<Entry> entries_;
};

/// Tensor product of uniform n-level GHZ states, one per edge of h. Site j's
/// label is (i_e) over the edges incident with j, in edge order; sites with
/// no edges carry the single empty label.
SparseTensor ghz_state(const Hypergraph& h, int n);

using ExponentFn = std::function<Integer(const Label&)>;

/// Diagonal local operator at `site`: multiplies each entry by
/// e^{exp_fn(label at site)}.
SparseTensor apply_local_diagonal(const SparseTensor& t, std::size_t site, const ExponentFn& exp_fn);

/// The e^0 part of t. Throws NegativeExponent if any entry has a negative
/// power of e, since then t is not of the form phi + O(e).
SparseTensor leading_term(const SparseTensor& t);

/// Exact rank of the S versus complement flattening. Coefficients must be
/// scalars; each side may have at most kMaxFlatteningLabels distinct labels.
std::size_t flattening_rank(const SparseTensor& t, const std::vector<int>& side);

inline constexpr std::size_t kMaxFlatteningLabels = 4096;

struct GhzStructure {
  std::size_t r = 0;
  // Set on failure: the site and the label that occurs in two entries.
  std::optional<std::size_t> site;
  std::optional<Label> repeated;

  bool ok() const noexcept { return !site.has_value(); }
};

/// Succeeds with r = number of entries iff no local label occurs in two
/// entries, i.e. t is a relabelled, rescaled GHZ_r. Coefficients must be
/// nonzero scalars.
GhzStructure check_ghz_structure(const SparseTensor& t);

std::string label_to_string(const Label& label);

}  // namespace ghzcert
