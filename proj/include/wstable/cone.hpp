#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wstable/closure.hpp"
#include "wstable/errors.hpp"
#include "wstable/ideal.hpp"
#include "wstable/monomial.hpp"
#include "wstable/tree.hpp"

namespace wstable {

using IntVector = std::vector<Integer>;

/// normal . w >= 0, or normal . w > 0 when strict.
struct HalfSpace {
  IntVector normal;
  bool strict = false;
  std::string label;
};

/// Linear conditions on w under which a strongly stable ideal equals the
/// w-closure of its lex-smallest generator, plus monotonicity w_i >= w_{i+1}
/// and positivity w_n > 0.
struct ConstraintSystem {
  std::size_t nvars = 0;
  Monomial candidate;
  std::vector<HalfSpace> halfspaces;

  /// Closed cone membership when open_region is false; otherwise strict
  /// constraints must hold strictly.
  bool contains(std::span<const Integer> w, bool open_region) const;
  bool contains(const WeightVector& w, bool open_region = true) const {
    IntVector v(w.values().begin(), w.values().end());
    return contains(v, open_region);
  }
};

struct Cone {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

namespace detail {

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
}

inline bool is_zero_vector(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline std::size_t rank(std::vector<IntVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer f = rows[i][c], p = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = rows[i][k] * p - rows[r][k] * f;
      make_primitive(rows[i]);
    }
    ++r;
  }
  return r;
}

inline HalfSpace make_halfspace(IntVector normal, bool strict, std::string label) {
  make_primitive(normal);
  return HalfSpace{std::move(normal), strict, std::move(label)};
}

/// Columns of B^{-1} for an invertible integer matrix B, each scaled to a
/// primitive integer vector.
inline std::vector<IntVector> inverse_columns(const std::vector<IntVector>& B) {
  const std::size_t n = B.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(B[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[c], a[piv]);
    Rational p = a[c][c];
    for (auto& x : a[c]) x /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  std::vector<IntVector> cols(n, IntVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    Integer l = 1;
    for (std::size_t i = 0; i < n; ++i) l = boost::multiprecision::lcm(l, denominator(a[i][n + j]));
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = numerator(Rational(a[i][n + j] * l));
    make_primitive(cols[j]);
  }
  return cols;
}

}  // namespace detail

inline bool ConstraintSystem::contains(std::span<const Integer> w, bool open_region) const {
  detail::require_same_dimension(nvars, w.size(), "ConstraintSystem::contains");
  for (const auto& h : halfspaces) {
    Integer s = detail::dot(h.normal, w);
    if (s < 0 || (open_region && h.strict && s == 0)) return false;
  }
  return true;
}

/// Half-space system of the principal region of a strongly stable ideal, read
/// off its generator tree T_I with m the lex-smallest minimal generator:
///   sinks v:     deg_w(v) >= deg_w(m)
///   subsinks u:  deg_w(u) <  deg_w(m)
///   branch vertices u with largest branch k:
///                sum_{i<k} w_i a_i <= deg_w(u) < sum_{i<=k} w_i a_i
inline ConstraintSystem constraint_system(const MonomialIdeal& I) {
  if (I.is_zero()) throw ContractError("constraint_system: zero ideal");
  if (!is_strongly_stable(I)) throw ContractError("constraint_system: ideal is not strongly stable");
  const std::size_t n = I.nvars();
  ConstraintSystem cs;
  cs.nvars = n;
  cs.candidate = lex_smallest_generator(I);
  const Monomial& m = cs.candidate;
  const auto tree = tree_from_ideal(I);

  auto push = [&](IntVector normal, bool strict, std::string label) {
    if (!strict && detail::is_zero_vector(normal)) return;
    cs.halfspaces.push_back(detail::make_halfspace(std::move(normal), strict, std::move(label)));
  };

  for (const auto& v : tree.sinks()) {
    IntVector nv(n);
    for (std::size_t i = 0; i < n; ++i) nv[i] = Integer(v[i]) - m[i];
    push(std::move(nv), false, "sink " + detail::monomial_debug_string(v));
  }
  for (const auto& u : tree.subsinks()) {
    IntVector nv(n);
    for (std::size_t i = 0; i < n; ++i) nv[i] = Integer(m[i]) - u[i];
    push(std::move(nv), true, "subsink " + detail::monomial_debug_string(u));
  }
  for (const auto& node : tree.nodes()) {
    if (node.children.empty()) continue;
    const Monomial& u = node.vertex;
    const std::size_t k = tree.largest_branch(u);
    IntVector lower(n), upper(n);
    for (std::size_t i = 0; i < n; ++i) {
      lower[i] = Integer(u[i]) - (i + 1 < k ? m[i] : 0);
      upper[i] = Integer(i + 1 <= k ? m[i] : 0) - u[i];
    }
    push(std::move(lower), false, "branch lower " + detail::monomial_debug_string(u));
    push(std::move(upper), true, "branch upper " + detail::monomial_debug_string(u));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector nv(n, 0);
    nv[i] = 1;
    nv[i + 1] = -1;
    push(std::move(nv), false, "monotone " + std::to_string(i + 1));
  }
  if (n > 0) {
    IntVector nv(n, 0);
    nv[n - 1] = 1;
    push(std::move(nv), true, "positive");
  }
  return cs;
}

/// Extreme rays of the closed cone {w : normal . w >= 0 for every half-space}
/// by the double description method. Rays are primitive, listed in
/// lexicographically descending order; the apex-only cone has no rays.
inline Cone cone_rays(const ConstraintSystem& cs) {
  const std::size_t n = cs.nvars;
  std::vector<IntVector> normals;
  for (const auto& h : cs.halfspaces) {
    if (std::find(normals.begin(), normals.end(), h.normal) == normals.end()) normals.push_back(h.normal);
  }
  if (n == 0) return {};

  // A zero normal marks a strict constraint 0 > 0; its closure 0 >= 0 is vacuous.
  std::erase_if(normals, [](const IntVector& v) { return detail::is_zero_vector(v); });

  std::vector<std::size_t> basis;
  std::vector<IntVector> basis_rows;
  for (std::size_t i = 0; i < normals.size() && basis.size() < n; ++i) {
    auto trial = basis_rows;
    trial.push_back(normals[i]);
    if (detail::rank(trial) == trial.size()) {
      basis.push_back(i);
      basis_rows = std::move(trial);
    }
  }
  if (basis.size() < n) throw ContractError("cone_rays: constraints do not define a pointed cone");

  std::vector<IntVector> rays = detail::inverse_columns(basis_rows);
  std::vector<std::size_t> processed = basis;

  auto tight = [&](const IntVector& r) {
    std::vector<std::size_t> z;
    for (auto c : processed)
      if (detail::dot(normals[c], r) == 0) z.push_back(c);
    return z;
  };

  for (std::size_t c = 0; c < normals.size(); ++c) {
    if (std::find(basis.begin(), basis.end(), c) != basis.end()) continue;
    const auto& a = normals[c];
    std::vector<std::pair<IntVector, Integer>> pos, neg;
    std::vector<IntVector> next;
    for (auto& r : rays) {
      Integer s = detail::dot(a, r);
      if (s > 0) pos.emplace_back(r, s);
      else if (s < 0) neg.emplace_back(r, s);
      if (s >= 0) next.push_back(r);
    }
    if (!neg.empty()) {
      for (const auto& [p, sp] : pos) {
        auto zp = tight(p);
        for (const auto& [q, sq] : neg) {
          auto zq = tight(q);
          std::vector<IntVector> common;
          for (auto z : zp)
            if (std::find(zq.begin(), zq.end(), z) != zq.end()) common.push_back(normals[z]);
          if (n >= 2 && (common.size() < n - 2 || detail::rank(common) != n - 2)) continue;
          if (n < 2) continue;
          IntVector r(n);
          for (std::size_t i = 0; i < n; ++i) r[i] = sp * q[i] - sq * p[i];
          detail::make_primitive(r);
          if (!detail::is_zero_vector(r)) next.push_back(std::move(r));
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(c);
  }
  std::sort(rays.begin(), rays.end(), std::greater<>());
  return Cone{std::move(rays), {}};
}

/// Fourier-Motzkin elimination with strictness tracking: true when no w
/// satisfies every constraint with strict ones held strictly.
inline bool open_region_is_empty(const ConstraintSystem& cs) {
  std::map<IntVector, bool> rows;
  auto insert = [&](IntVector v, bool strict) {
    detail::make_primitive(v);
    auto [it, fresh] = rows.emplace(std::move(v), strict);
    if (!fresh) it->second = it->second || strict;
  };
  for (const auto& h : cs.halfspaces) insert(h.normal, h.strict);

  for (std::size_t k = 0; k < cs.nvars; ++k) {
    std::map<IntVector, bool> next;
    std::vector<std::pair<IntVector, bool>> pos, neg;
    for (auto& [v, strict] : rows) {
      if (v[k] > 0) pos.emplace_back(v, strict);
      else if (v[k] < 0) neg.emplace_back(v, strict);
      else next.emplace(v, strict);
    }
    rows = std::move(next);
    for (const auto& [p, ps] : pos) {
      for (const auto& [q, qs] : neg) {
        IntVector r(cs.nvars);
        Integer cp = -q[k], cq = p[k];
        for (std::size_t i = 0; i < cs.nvars; ++i) r[i] = cp * p[i] + cq * q[i];
        insert(std::move(r), ps || qs);
      }
    }
  }
  for (const auto& [v, strict] : rows)
    if (strict && detail::is_zero_vector(v)) return true;
  return false;
}

/// Search budget for principal_weight_vector: ray coefficients range over
/// 1 .. max_coefficient.
struct WeightSearchOptions {
  Integer max_coefficient = 4;
};

/// A weight vector w for which I is the w-closure of its lex-smallest
/// generator, or nullopt when the principal region is empty. The first
/// candidate is the sum of the extreme rays; every returned vector has been
/// verified by recomputing the closure.
inline std::optional<WeightVector> principal_weight_vector(const MonomialIdeal& I, WeightSearchOptions opts = {}) {
  const auto cs = constraint_system(I);
  if (open_region_is_empty(cs)) return std::nullopt;
  const auto cone = cone_rays(cs);
  const std::size_t r = cone.rays.size();
  const std::size_t n = cs.nvars;

  auto try_point = [&](const IntVector& w) -> std::optional<WeightVector> {
    if (!cs.contains(w, true)) return std::nullopt;
    std::vector<Degree> vals;
    for (const auto& x : w) {
      if (x > std::numeric_limits<Degree>::max()) return std::nullopt;
      vals.push_back(static_cast<Degree>(x));
    }
    if (n > 0 && vals.back() < 1) return std::nullopt;
    WeightVector wv(std::move(vals));
    if (w_closure(cs.candidate, wv) != I) return std::nullopt;
    return wv;
  };

  if (r > 0) {
    // Coefficient vectors in {1..B}^r, by increasing total; all ones first.
    const auto B = static_cast<std::size_t>(opts.max_coefficient);
    for (std::size_t total = r; total <= r * B; ++total) {
      std::vector<std::size_t> c(r, 1);
      std::size_t extra = total - r;
      // Enumerate distributions of `extra` over r slots with slot cap B - 1.
      std::vector<std::size_t> add(r, 0);
      auto visit = [&](auto&& self, std::size_t slot, std::size_t left) -> std::optional<WeightVector> {
        if (slot + 1 == r) {
          if (left + 1 > B) return std::nullopt;
          add[slot] = left;
          IntVector w(n, 0);
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) w[j] += Integer(c[i] + add[i]) * cone.rays[i][j];
          return try_point(w);
        }
        for (std::size_t x = 0; x <= left && x + 1 <= B; ++x) {
          add[slot] = x;
          if (auto found = self(self, slot + 1, left - x)) return found;
        }
        return std::nullopt;
      };
      if (auto found = visit(visit, 0, extra)) return found;
    }
  }
  throw InternalError("principal_weight_vector: principal region is nonempty but no verified weight vector "
                      "was found within the search budget");
}

}  // namespace wstable
