#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ghzcert {

// Exact rationals; every value produced by this module is canonical
// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows must all have the same length.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

RatVector to_rational(const IntVector& v);

Rational inner(const RatVector& u, const RatVector& v);
Integer inner(const IntVector& u, const IntVector& v);

/// Exact rank by Gaussian elimination.
std::size_t rank(RatMatrix m);
std::size_t rank(const std::vector<RatVector>& vectors, std::size_t dim);
bool linearly_independent(const std::vector<RatVector>& vectors, std::size_t dim);

/// Orthogonal projection of x onto span(basis). The basis is orthogonalized
/// in list order by Gram-Schmidt, dropping vectors that become exactly zero.
RatVector project_onto_span(const std::vector<RatVector>& basis, const RatVector& x);

/// True iff every subset of min(d, count) vectors is linearly independent.
/// Subsets are checked exhaustively; at most kMaxGeneralPositionSubsets.
bool is_general_position(const std::vector<RatVector>& vectors, std::size_t d);

inline constexpr std::size_t kMaxGeneralPositionSubsets = 1'000'000;

/// Index sets of size min(d, count) that are linearly dependent.
std::vector<std::vector<std::size_t>> dependent_subsets(const std::vector<RatVector>& vectors,
                                                        std::size_t d);

/// m * v with m the lcm of the denominators, divided by the gcd of the
/// resulting entries. Same direction; zero maps to zero.
IntVector scale_to_integers(const RatVector& v);

/// C(n, r), saturating at max size_t.
std::size_t binomial(std::size_t n, std::size_t r);

/// Calls visit(indices) for every r-subset of {0..n-1} in lexicographic order.
/// Stops early when visit returns false.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t r, Visit&& visit) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace ghzcert
