#pragma once

#include <cstddef>
#include <vector>

#include "wstable/errors.hpp"
#include "wstable/monomial.hpp"

namespace wstable {

/// Weighted Catalan diagram of a monomial: rows a = 0 .. d + max(w) - 1 where
/// d = deg_w(m), one column per variable. Rows below d count truncation-tree
/// vertices; rows from d on count minimal generators of the w-closure of m by
/// weighted degree and largest variable index.
struct CatalanDiagram {
  std::vector<std::vector<Integer>> entries;
  Degree degree = 0;
  WeightVector weights;
  Monomial monomial;

  std::size_t rows() const { return entries.size(); }
  std::size_t columns() const { return monomial.nvars(); }
  /// Column b is 1-based.
  const Integer& at(std::size_t a, std::size_t b) const { return entries.at(a).at(b - 1); }

  Integer row_sum(std::size_t a) const {
    Integer s = 0;
    for (const auto& x : entries.at(a)) s += x;
    return s;
  }
};

inline CatalanDiagram catalan_diagram(const Monomial& m, const WeightVector& w) {
  detail::require_same_dimension(m.nvars(), w.size(), "catalan_diagram");
  const std::size_t n = m.nvars();
  CatalanDiagram c;
  c.degree = weighted_degree(m, w);
  c.weights = w;
  c.monomial = m;
  const auto rows = static_cast<std::size_t>(c.degree + w.max());
  c.entries.assign(rows, std::vector<Integer>(n, 0));
  if (n == 0) return c;
  c.entries[0][0] = 1;
  for (std::size_t a = 1; a < rows; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      const Degree prev = static_cast<Degree>(a) - w[b - 1];
      if (prev < 0 || prev >= c.degree) continue;
      if (truncation_max_index(m, w, prev + 1) < b) continue;
      Integer s = 0;
      for (std::size_t k = 0; k < b; ++k) s += c.entries[static_cast<std::size_t>(prev)][k];
      c.entries[a][b - 1] = s;
    }
  }
  return c;
}

struct GeneratorStat {
  Degree degree;
  std::size_t max_index;  // 1-based
  Integer count;

  friend bool operator==(const GeneratorStat&, const GeneratorStat&) = default;
};

/// Nonzero entries of the rows a >= d: the number of minimal generators of the
/// closure with weighted degree a and largest variable index b.
inline std::vector<GeneratorStat> generator_stats(const CatalanDiagram& c) {
  std::vector<GeneratorStat> out;
  for (std::size_t a = static_cast<std::size_t>(c.degree); a < c.rows(); ++a)
    for (std::size_t b = 1; b <= c.columns(); ++b)
      if (c.at(a, b) != 0) out.push_back({static_cast<Degree>(a), b, c.at(a, b)});
  return out;
}

}  // namespace wstable
