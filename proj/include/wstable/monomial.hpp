#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wstable/errors.hpp"

namespace wstable {

using Exponent = std::int64_t;
using Degree = std::int64_t;

namespace detail {

inline Degree checked_add(Degree a, Degree b) {
  Degree r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("wstable: degree overflow");
  return r;
}

inline Degree checked_mul(Degree a, Degree b) {
  Degree r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("wstable: degree overflow");
  return r;
}

}  // namespace detail

/// A monomial x^a in a polynomial ring with a fixed number of variables.
/// Variable positions are 0-based; position i holds the exponent of x_{i+1}.
/// The default ordering is lexicographic with x_1 > x_2 > ... > x_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { validate(); }
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { validate(); }

  static Monomial unit(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t pos) {
    Monomial m(nvars);
    m.exps_.at(pos) = 1;
    return m;
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t pos) const { return exps_[pos]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  Degree degree() const {
    Degree d = 0;
    for (auto e : exps_) d = detail::checked_add(d, e);
    return d;
  }

  bool is_unit() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    detail::require_same_dimension(nvars(), other.nvars(), "divides");
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial& operator*=(const Monomial& other) {
    detail::require_same_dimension(nvars(), other.nvars(), "multiply");
    for (std::size_t i = 0; i < exps_.size(); ++i)
      exps_[i] = detail::checked_add(exps_[i], other.exps_[i]);
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// this * x_{pos+1}^e
  Monomial times_variable(std::size_t pos, Exponent e = 1) const {
    Monomial r = *this;
    r.exps_.at(pos) = detail::checked_add(r.exps_[pos], e);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  void validate() const {
    for (auto e : exps_)
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.nvars();
    for (auto e : m.exponents()) h = h * 1000003u ^ std::hash<Exponent>{}(e);
    return h;
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::require_same_dimension(a.nvars(), b.nvars(), "lcm");
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

/// Graded-lex comparison, x_1 > ... > x_n. True when a is strictly larger.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a > b;
}

/// A monotone non-increasing tuple of positive integers. Fixes the grading
/// deg(x_i) = w_i and the substitution x_i -> y_i^{w_i}.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Degree> weights) : w_(std::move(weights)) {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] < 1) throw std::invalid_argument("WeightVector: weights must be positive");
      if (i > 0 && w_[i - 1] < w_[i])
        throw std::invalid_argument("WeightVector: weights must be non-increasing");
    }
  }
  WeightVector(std::initializer_list<Degree> weights)
      : WeightVector(std::vector<Degree>(weights)) {}

  static WeightVector all_ones(std::size_t n) { return WeightVector(std::vector<Degree>(n, 1)); }

  std::size_t size() const noexcept { return w_.size(); }
  Degree operator[](std::size_t pos) const { return w_[pos]; }
  std::span<const Degree> values() const noexcept { return w_; }
  Degree max() const { return w_.empty() ? 1 : w_.front(); }
  bool is_standard() const {
    return std::all_of(w_.begin(), w_.end(), [](Degree x) { return x == 1; });
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Degree> w_;
};

/// Sorted index sequence y_{i_1} ... y_{i_r}, i_1 <= ... <= i_r (0-based).
struct FactoredForm {
  std::vector<std::size_t> indices;
};

inline FactoredForm factored_form(const Monomial& m) {
  FactoredForm f;
  f.indices.reserve(static_cast<std::size_t>(m.degree()));
  for (std::size_t i = 0; i < m.nvars(); ++i) f.indices.insert(f.indices.end(), m[i], i);
  return f;
}

inline Monomial from_factored_form(std::size_t nvars, const FactoredForm& f) {
  std::vector<Exponent> e(nvars, 0);
  for (auto i : f.indices) ++e.at(i);
  return Monomial(std::move(e));
}

inline Degree weighted_degree(const Monomial& m, const WeightVector& w) {
  detail::require_same_dimension(m.nvars(), w.size(), "weighted_degree");
  Degree d = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    d = detail::checked_add(d, detail::checked_mul(w[i], m[i]));
  return d;
}

/// x_i -> y_i^{w_i}
inline Monomial psi(const Monomial& m, const WeightVector& w) {
  detail::require_same_dimension(m.nvars(), w.size(), "psi");
  std::vector<Exponent> e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_mul(w[i], m[i]);
  return Monomial(std::move(e));
}

/// Preimage of u under psi, or nullopt when u is not in the image.
inline std::optional<Monomial> psi_inverse(const Monomial& u, const WeightVector& w) {
  detail::require_same_dimension(u.nvars(), w.size(), "psi_inverse");
  std::vector<Exponent> e(u.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (u[i] % w[i] != 0) return std::nullopt;
    e[i] = u[i] / w[i];
  }
  return Monomial(std::move(e));
}

/// Product of the first d factors of u (all of u when d >= deg u).
inline Monomial truncate(const Monomial& u, Degree d) {
  std::vector<Exponent> e(u.nvars(), 0);
  Degree left = std::max<Degree>(d, 0);
  for (std::size_t i = 0; i < u.nvars() && left > 0; ++i) {
    e[i] = std::min(u[i], left);
    left -= e[i];
  }
  return Monomial(std::move(e));
}

/// Largest 1-based index of a variable dividing u; 1 for the unit monomial.
inline std::size_t max_index(const Monomial& u) {
  for (std::size_t i = u.nvars(); i > 0; --i)
    if (u[i - 1] > 0) return i;
  return 1;
}

/// Smallest 1-based index of a variable dividing u; 1 for the unit monomial.
inline std::size_t min_index(const Monomial& u) {
  for (std::size_t i = 0; i < u.nvars(); ++i)
    if (u[i] > 0) return i + 1;
  return 1;
}

namespace detail {

/// prefix[j] = sum_{i <= j} w_i m_i, the number of factors of psi(m) with
/// index <= j.
inline std::vector<Degree> weighted_prefix(const Monomial& m, const WeightVector& w) {
  std::vector<Degree> p(m.nvars());
  Degree acc = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    acc = checked_add(acc, checked_mul(w[i], m[i]));
    p[i] = acc;
  }
  return p;
}

}  // namespace detail

/// max_index(truncate(psi(m, w), d)) computed from the exponent vector,
/// without materializing psi(m).
inline std::size_t truncation_max_index(const Monomial& m, const WeightVector& w, Degree d) {
  detail::require_same_dimension(m.nvars(), w.size(), "truncation_max_index");
  if (d <= 0) return 1;
  Degree acc = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    acc = detail::checked_add(acc, detail::checked_mul(w[i], m[i]));
    if (acc >= d) return i + 1;
  }
  return max_index(m);
}

/// m <=_w u in the weighted Borel order, i.e. u lies in the w-closure of m.
/// Index-wise dominance of the sorted factorizations of psi(u) over psi(m) is
/// equivalent to dominance of their prefix counts.
inline bool w_borel_below(const Monomial& m, const Monomial& u, const WeightVector& w) {
  detail::require_same_dimension(m.nvars(), u.nvars(), "w_borel_below");
  detail::require_same_dimension(m.nvars(), w.size(), "w_borel_below");
  auto pm = detail::weighted_prefix(m, w);
  auto pu = detail::weighted_prefix(u, w);
  for (std::size_t j = 0; j < pm.size(); ++j)
    if (pu[j] < pm[j]) return false;
  return true;
}

/// Borel-order meet of two monomials of R. The componentwise minimum of the
/// sorted factorizations has prefix counts max(prefix(a), prefix(b)).
inline Monomial borel_meet(const Monomial& a, const Monomial& b) {
  detail::require_same_dimension(a.nvars(), b.nvars(), "borel_meet");
  std::vector<Exponent> e(a.nvars());
  Degree pa = 0, pb = 0, prev = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    pa = detail::checked_add(pa, a[j]);
    pb = detail::checked_add(pb, b[j]);
    Degree cur = std::max(pa, pb);
    e[j] = cur - prev;
    prev = cur;
  }
  return Monomial(std::move(e));
}

/// Meet in the w-Borel order: psi^{-1}(meet(psi(u), psi(v))), or nullopt when
/// that meet has no preimage.
inline std::optional<Monomial> meet_w(const Monomial& u, const Monomial& v, const WeightVector& w) {
  detail::require_same_dimension(u.nvars(), v.nvars(), "meet_w");
  return psi_inverse(borel_meet(psi(u, w), psi(v, w)), w);
}

}  // namespace wstable
