#include "ghzcert/tensor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ghzcert/error.hpp"

namespace ghzcert {

namespace {

constexpr std::size_t kMaxGhzEntries = 1'000'000;

void require_site(const SparseTensor& t, std::size_t site) {
  if (site < 1 || site > t.sites()) {
    throw Error(ErrorCode::VertexOutOfRange, "site " + std::to_string(site) + " is outside 1.." +
                                                 std::to_string(t.sites()));
  }
}

}  // namespace

std::string label_to_string(const Label& label) {
  std::string out = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(label[i]);
  }
  return out + ")";
}

SparseTensor::SparseTensor(std::vector<std::vector<Label>> alphabets)
    : alphabets_(std::move(alphabets)) {}

SparseTensor SparseTensor::from_terms(
    std::size_t sites, const std::vector<std::pair<std::vector<Label>, LaurentPoly>>& terms) {
  std::vector<std::set<Label>> used(sites);
  for (const auto& [labels, coeff] : terms) {
    if (labels.size() != sites) {
      throw Error(ErrorCode::DimMismatch, "term has the wrong number of site labels");
    }
    for (std::size_t j = 0; j < sites; ++j) used[j].insert(labels[j]);
  }
  std::vector<std::vector<Label>> alphabets;
  alphabets.reserve(sites);
  for (const auto& s : used) alphabets.emplace_back(s.begin(), s.end());

  std::map<std::vector<std::uint32_t>, LaurentPoly> merged;
  for (const auto& [labels, coeff] : terms) {
    std::vector<std::uint32_t> key(sites);
    for (std::size_t j = 0; j < sites; ++j) {
      const auto& alpha = alphabets[j];
      key[j] = static_cast<std::uint32_t>(
          std::lower_bound(alpha.begin(), alpha.end(), labels[j]) - alpha.begin());
    }
    merged[key] += coeff;
  }
  SparseTensor t(std::move(alphabets));
  for (auto& [key, coeff] : merged) t.push_entry(key, std::move(coeff));
  return t;
}

void SparseTensor::push_entry(std::vector<std::uint32_t> key, LaurentPoly coeff) {
  if (coeff.is_zero()) return;
  if (key.size() != alphabets_.size()) {
    throw Error(ErrorCode::DimMismatch, "entry key has the wrong number of sites");
  }
  for (std::size_t j = 0; j < key.size(); ++j) {
    if (key[j] >= alphabets_[j].size()) {
      throw Error(ErrorCode::DimMismatch, "entry key uses an undeclared label");
    }
  }
  entries_.push_back({std::move(key), std::move(coeff)});
}

std::string SparseTensor::dump() const {
  std::string out;
  for (const Entry& entry : entries_) {
    out += "(";
    for (std::size_t j = 0; j < entry.key.size(); ++j) {
      if (j > 0) out += ",";
      out += label_to_string(alphabets_[j][entry.key[j]]);
    }
    out += ") : " + entry.coeff.to_string() + "\n";
  }
  return out;
}

SparseTensor ghz_state(const Hypergraph& h, int n) {
  validate(h);
  if (n < 2) throw Error(ErrorCode::BadLevel, "GHZ level n must be at least 2");
  const std::size_t l = h.edge_count();
  std::size_t total = 1;
  for (std::size_t e = 0; e < l; ++e) {
    total *= static_cast<std::size_t>(n);
    if (total > kMaxGhzEntries) {
      throw Error(ErrorCode::GridTooLarge, "GHZ state would have more than " +
                                               std::to_string(kMaxGhzEntries) + " entries");
    }
  }

  const auto k = static_cast<std::size_t>(h.vertex_count());
  std::vector<std::vector<Label>> alphabets(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t width = h.incident_edges(static_cast<int>(j + 1)).size();
    Label label(width, 0);
    while (true) {
      alphabets[j].push_back(label);
      std::size_t pos = width;
      while (pos > 0 && label[pos - 1] == n - 1) label[--pos] = 0;
      if (pos == 0) break;
      ++label[pos - 1];
    }
  }

  SparseTensor t(std::move(alphabets));
  std::vector<int> index(l, 0);
  const LaurentPoly one = LaurentPoly::constant(Rational(1));
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<std::uint32_t> key(k);
    for (std::size_t j = 0; j < k; ++j) {
      // Lexicographic position of the sub-tuple = base-n number.
      std::uint32_t id = 0;
      for (std::size_t e : h.incident_edges(static_cast<int>(j + 1))) {
        id = id * static_cast<std::uint32_t>(n) + static_cast<std::uint32_t>(index[e]);
      }
      key[j] = id;
    }
    t.push_entry(std::move(key), one);
    std::size_t pos = l;
    while (pos > 0 && index[pos - 1] == n - 1) index[--pos] = 0;
    if (pos > 0) ++index[pos - 1];
  }
  return t;
}

SparseTensor apply_local_diagonal(const SparseTensor& t, std::size_t site, const ExponentFn& exp_fn) {
  require_site(t, site);
  const auto& alpha = t.alphabet(site);
  std::vector<Integer> shift;
  shift.reserve(alpha.size());
  for (const Label& label : alpha) shift.push_back(exp_fn(label));

  std::vector<std::vector<Label>> alphabets;
  for (std::size_t j = 1; j <= t.sites(); ++j) alphabets.push_back(t.alphabet(j));
  SparseTensor out(std::move(alphabets));
  for (const auto& entry : t.entries()) {
    out.push_entry(entry.key, entry.coeff.shifted(shift[entry.key[site - 1]]));
  }
  return out;
}

SparseTensor leading_term(const SparseTensor& t) {
  std::vector<std::vector<Label>> alphabets;
  for (std::size_t j = 1; j <= t.sites(); ++j) alphabets.push_back(t.alphabet(j));
  SparseTensor out(std::move(alphabets));
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    const auto& entry = t.entries()[i];
    if (entry.coeff.min_exponent() < 0) {
      throw Error(ErrorCode::NegativeExponent,
                  "entry " + std::to_string(i) + " has coefficient " + entry.coeff.to_string(), i);
    }
    Rational c = entry.coeff.constant_term();
    if (c != 0) out.push_entry(entry.key, LaurentPoly::constant(c));
  }
  return out;
}

std::size_t flattening_rank(const SparseTensor& t, const std::vector<int>& side) {
  std::vector<bool> in_side(t.sites() + 1, false);
  std::size_t count = 0;
  for (int v : side) {
    require_site(t, static_cast<std::size_t>(v));
    if (!in_side[static_cast<std::size_t>(v)]) ++count;
    in_side[static_cast<std::size_t>(v)] = true;
  }
  if (count == 0 || count == t.sites()) {
    throw Error(ErrorCode::DimMismatch, "flattening side must be a nonempty proper subset");
  }

  std::map<std::vector<std::uint32_t>, std::size_t> rows;
  std::map<std::vector<std::uint32_t>, std::size_t> cols;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<Rational> values;
  for (const auto& entry : t.entries()) {
    if (!entry.coeff.is_scalar()) {
      throw Error(ErrorCode::NonScalarCoefficients, "flattening needs e-free coefficients");
    }
    std::vector<std::uint32_t> r;
    std::vector<std::uint32_t> c;
    for (std::size_t j = 0; j < entry.key.size(); ++j) {
      (in_side[j + 1] ? r : c).push_back(entry.key[j]);
    }
    const std::size_t ri = rows.try_emplace(std::move(r), rows.size()).first->second;
    const std::size_t ci = cols.try_emplace(std::move(c), cols.size()).first->second;
    cells.emplace_back(ri, ci);
    values.push_back(entry.coeff.constant_term());
  }
  if (rows.size() > kMaxFlatteningLabels || cols.size() > kMaxFlatteningLabels) {
    throw Error(ErrorCode::TooLarge, "flattening exceeds " + std::to_string(kMaxFlatteningLabels) +
                                         " labels per side");
  }
  RatMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < cells.size(); ++i) m(cells[i].first, cells[i].second) = values[i];
  return rank(std::move(m));
}

GhzStructure check_ghz_structure(const SparseTensor& t) {
  GhzStructure result;
  for (const auto& entry : t.entries()) {
    if (!entry.coeff.is_scalar()) {
      throw Error(ErrorCode::NonScalarCoefficients, "GHZ check needs e-free coefficients");
    }
  }
  for (std::size_t j = 1; j <= t.sites(); ++j) {
    std::vector<bool> seen(t.alphabet(j).size(), false);
    for (const auto& entry : t.entries()) {
      const std::uint32_t id = entry.key[j - 1];
      if (seen[id]) {
        result.site = j;
        result.repeated = t.label(j, id);
        return result;
      }
      seen[id] = true;
    }
  }
  result.r = t.size();
  return result;
}

}  // namespace ghzcert
