#include "ghzcert/linalg.hpp"

#include <algorithm>
#include <limits>

#include "ghzcert/error.hpp"

namespace ghzcert {

namespace {

void require_dim(std::size_t got, std::size_t want) {
  if (got != want) {
    throw Error(ErrorCode::DimMismatch, "dimension mismatch: " + std::to_string(got) +
                                            " vs " + std::to_string(want));
  }
}

}  // namespace

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_dim(rows[r].size(), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: \"" + text + "\"");
  }
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const Integer& x : v) out.emplace_back(x);
  return out;
}

Rational inner(const RatVector& u, const RatVector& v) {
  require_dim(u.size(), v.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

Integer inner(const IntVector& u, const IntVector& v) {
  require_dim(u.size(), v.size());
  Integer acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

std::size_t rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational factor = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<RatVector>& vectors, std::size_t dim) {
  for (const auto& v : vectors) require_dim(v.size(), dim);
  RatMatrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  }
  return rank(std::move(m));
}

bool linearly_independent(const std::vector<RatVector>& vectors, std::size_t dim) {
  return vectors.size() <= dim && rank(vectors, dim) == vectors.size();
}

RatVector project_onto_span(const std::vector<RatVector>& basis, const RatVector& x) {
  for (const auto& v : basis) require_dim(v.size(), x.size());
  std::vector<RatVector> ortho;
  std::vector<Rational> norms;
  for (const auto& v : basis) {
    RatVector g = v;
    for (std::size_t m = 0; m < ortho.size(); ++m) {
      const Rational coef = inner(ortho[m], v) / norms[m];
      for (std::size_t i = 0; i < g.size(); ++i) g[i] -= coef * ortho[m][i];
    }
    Rational norm = inner(g, g);
    if (norm == 0) continue;
    ortho.push_back(std::move(g));
    norms.push_back(std::move(norm));
  }
  RatVector p(x.size(), Rational(0));
  for (std::size_t m = 0; m < ortho.size(); ++m) {
    const Rational coef = inner(ortho[m], x) / norms[m];
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += coef * ortho[m][i];
  }
  return p;
}

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    const std::size_t num = n - r + i;
    if (result > std::numeric_limits<std::size_t>::max() / num) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

std::vector<std::vector<std::size_t>> dependent_subsets(const std::vector<RatVector>& vectors,
                                                        std::size_t d) {
  for (const auto& v : vectors) require_dim(v.size(), d);
  const std::size_t size = std::min(d, vectors.size());
  if (binomial(vectors.size(), size) > kMaxGeneralPositionSubsets) {
    throw Error(ErrorCode::TooLarge, "too many subsets for an exhaustive general-position check");
  }
  std::vector<std::vector<std::size_t>> dependent;
  std::vector<RatVector> chosen(size);
  for_each_subset(vectors.size(), size, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < size; ++i) chosen[i] = vectors[idx[i]];
    if (rank(chosen, d) != size) dependent.push_back(idx);
    return true;
  });
  return dependent;
}

bool is_general_position(const std::vector<RatVector>& vectors, std::size_t d) {
  for (const auto& v : vectors) require_dim(v.size(), d);
  const std::size_t size = std::min(d, vectors.size());
  if (binomial(vectors.size(), size) > kMaxGeneralPositionSubsets) {
    throw Error(ErrorCode::TooLarge, "too many subsets for an exhaustive general-position check");
  }
  bool ok = true;
  std::vector<RatVector> chosen(size);
  for_each_subset(vectors.size(), size, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < size; ++i) chosen[i] = vectors[idx[i]];
    ok = rank(chosen, d) == size;
    return ok;
  });
  return ok;
}

IntVector scale_to_integers(const RatVector& v) {
  Integer lcm = 1;
  for (const Rational& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const Rational& x : v) {
    Integer scaled = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(std::move(scaled));
  }
  if (g > 1) {
    for (Integer& x : out) x /= g;
  }
  return out;
}

}  // namespace ghzcert
