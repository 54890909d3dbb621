#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "wstable/catalan.hpp"
#include "wstable/closure.hpp"
#include "wstable/ideal.hpp"
#include "wstable/monomial.hpp"
#include "wstable/tree.hpp"

namespace wstable {

/// Dense univariate polynomial in t with exact integer coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial term(Integer coeff, Degree k) {
    Polynomial p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(k) + 1, 0);
      p.c_.back() = std::move(coeff);
    }
    return p;
  }
  static Polynomial one() { return term(1, 0); }

  /// -1 for the zero polynomial.
  Degree degree() const { return static_cast<Degree>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }
  Integer coefficient(Degree k) const {
    return k >= 0 && static_cast<std::size_t>(k) < c_.size() ? c_[static_cast<std::size_t>(k)] : Integer(0);
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != 0)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  /// this * (1 - t^k)
  Polynomial times_one_minus(Degree k) const { return *this - *this * term(1, k); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

/// Power-series coefficients t^0 .. t^bound of numerator / prod_j (1 - t^{w_j}).
inline std::vector<Integer> expand_series(const Polynomial& numerator, std::span<const Degree> denominator,
                                          Degree bound) {
  std::vector<Integer> a(static_cast<std::size_t>(bound) + 1, 0);
  for (Degree k = 0; k <= bound && k <= numerator.degree(); ++k) a[static_cast<std::size_t>(k)] = numerator.coefficient(k);
  for (Degree w : denominator)
    for (std::size_t k = static_cast<std::size_t>(w); k < a.size(); ++k) a[k] += a[k - static_cast<std::size_t>(w)];
  return a;
}

// ---------------------------------------------------------------------------
// Stanley decompositions

struct StanleyPiece {
  Monomial coset;
  std::vector<std::size_t> free_vars;  // 0-based positions, increasing

  friend bool operator==(const StanleyPiece&, const StanleyPiece&) = default;
  friend auto operator<=>(const StanleyPiece&, const StanleyPiece&) = default;
};

/// S/I as a direct sum of shifted subrings coset * K[free_vars].
struct StanleyDecomposition {
  std::size_t nvars = 0;
  std::vector<StanleyPiece> pieces;
};

/// Tree form for the w-closure of m: one piece per non-sink vertex u of
/// T_{w,m}, free on the variables x_j, j >= max(u), that do not branch from u.
inline StanleyDecomposition principal_stanley_decomposition(const Monomial& m, const WeightVector& w) {
  auto tree = tree_from_monomial(m, w);
  StanleyDecomposition sd{m.nvars(), {}};
  for (const auto& node : tree.nodes()) {
    if (node.children.empty()) continue;
    StanleyPiece p{node.vertex, {}};
    for (std::size_t j = max_index(node.vertex); j <= m.nvars(); ++j)
      if (!tree.has_edge(node.vertex, node.vertex.times_variable(j - 1))) p.free_vars.push_back(j - 1);
    sd.pieces.push_back(std::move(p));
  }
  return sd;
}

/// Truncation form valid for any w-stable I. With J = Borel(psi(I)) and D the
/// largest degree of G(J), the pieces are u * K[x_j : psi(u) y_j not in
/// trunc_{s+1}(J)] for the preimages u of the degree-s generators of
/// trunc_s(J) outside J, s = 0 .. D-1.
inline StanleyDecomposition general_stanley_decomposition(const MonomialIdeal& I, const WeightVector& w) {
  detail::require_w_stable(I, w, "stanley_decomposition");
  const std::size_t n = I.nvars();
  StanleyDecomposition sd{n, {}};
  if (I.is_zero()) {
    StanleyPiece p{Monomial::unit(n), {}};
    for (std::size_t j = 0; j < n; ++j) p.free_vars.push_back(j);
    sd.pieces.push_back(std::move(p));
    return sd;
  }
  std::vector<Monomial> images;
  for (const auto& g : I.generators()) images.push_back(psi(g, w));
  const MonomialIdeal J = borel_closure(n, images);
  const auto ones = WeightVector::all_ones(n);
  const auto bgens = detail::minimal_in_w_order(J, ones);
  Degree top = 0;
  for (const auto& g : J.generators()) top = std::max(top, g.degree());

  MonomialIdeal current = detail::trunc_from_borel_gens(n, bgens, 0);
  for (Degree s = 0; s < top; ++s) {
    MonomialIdeal next = detail::trunc_from_borel_gens(n, bgens, s + 1);
    for (const auto& v : current.generators()) {
      if (v.degree() != s || J.contains(v)) continue;
      auto u = psi_inverse(v, w);
      if (!u) continue;
      StanleyPiece p{*u, {}};
      for (std::size_t j = 0; j < n; ++j)
        if (!next.contains(v.times_variable(j))) p.free_vars.push_back(j);
      sd.pieces.push_back(std::move(p));
    }
    current = std::move(next);
  }
  return sd;
}

/// Stanley decomposition of S/I for w-stable I; principal closures use the
/// tree form.
inline StanleyDecomposition stanley_decomposition(const MonomialIdeal& I, const WeightVector& w) {
  detail::require_w_stable(I, w, "stanley_decomposition");
  if (!I.is_zero()) {
    auto gens = detail::minimal_in_w_order(I, w);
    if (gens.size() == 1) return principal_stanley_decomposition(gens.front(), w);
  }
  return general_stanley_decomposition(I, w);
}

// ---------------------------------------------------------------------------
// Hilbert series

/// c * t^s / prod_{j > k} (1 - t^{w_j}) with k 1-based.
struct HilbertTerm {
  Integer count;
  Degree degree;
  std::size_t last_bound_var;

  friend bool operator==(const HilbertTerm&, const HilbertTerm&) = default;
};

/// Hilbert series of S/I in the grading deg(x_i) = w_i, stored as
/// numerator / prod_{j=1}^n (1 - t^{w_j}). Principal closures also carry the
/// per-degree term list.
struct HilbertSeries {
  WeightVector weights;
  std::vector<HilbertTerm> terms;
  Polynomial numerator;

  std::vector<Integer> expand(Degree bound) const { return expand_series(numerator, weights.values(), bound); }
};

inline Polynomial stanley_numerator(const StanleyDecomposition& sd, const WeightVector& w) {
  Polynomial num;
  for (const auto& p : sd.pieces) {
    Polynomial piece = Polynomial::term(1, weighted_degree(p.coset, w));
    for (std::size_t j = 0; j < sd.nvars; ++j)
      if (!std::binary_search(p.free_vars.begin(), p.free_vars.end(), j)) piece = piece.times_one_minus(w[j]);
    num += piece;
  }
  return num;
}

/// Term form for the w-closure of m, with c_s the row sums of the Catalan
/// diagram and k_s = max(trunc_{s+1}(psi(m))).
inline HilbertSeries principal_hilbert_series(const Monomial& m, const WeightVector& w) {
  auto cat = catalan_diagram(m, w);
  HilbertSeries hs{w, {}, {}};
  for (Degree s = 0; s < cat.degree; ++s) {
    Integer c = cat.row_sum(static_cast<std::size_t>(s));
    if (c == 0) continue;
    std::size_t k = truncation_max_index(m, w, s + 1);
    hs.terms.push_back({c, s, k});
    Polynomial t = Polynomial::term(c, s);
    for (std::size_t j = 0; j < k; ++j) t = t.times_one_minus(w[j]);
    hs.numerator += t;
  }
  return hs;
}

inline HilbertSeries hilbert_series(const MonomialIdeal& I, const WeightVector& w) {
  detail::require_w_stable(I, w, "hilbert_series");
  if (!I.is_zero()) {
    auto gens = detail::minimal_in_w_order(I, w);
    if (gens.size() == 1) return principal_hilbert_series(gens.front(), w);
  }
  return HilbertSeries{w, {}, stanley_numerator(general_stanley_decomposition(I, w), w)};
}

// ---------------------------------------------------------------------------
// Poincare series and Betti numbers

/// Sparse polynomial sum beta_{i,j} u^i t^j with i >= 1 the homological index
/// of I (i = 1 counts minimal generators).
class PoincarePolynomial {
 public:
  using Key = std::pair<std::size_t, Degree>;

  const std::map<Key, Integer>& terms() const noexcept { return c_; }
  bool is_zero() const { return c_.empty(); }

  Integer beta(std::size_t i, Degree j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Integer(0) : it->second;
  }

  void add(std::size_t i, Degree j, const Integer& v) {
    if (v == 0) return;
    auto& slot = c_[{i, j}];
    slot += v;
    if (slot == 0) c_.erase({i, j});
  }

  PoincarePolynomial& operator+=(const PoincarePolynomial& o) {
    for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
    return *this;
  }

  /// Specialization u = -1 as a polynomial in t.
  Polynomial at_u_minus_one() const {
    Polynomial p;
    for (const auto& [k, v] : c_) p += Polynomial::term(k.first % 2 ? Integer(-v) : v, k.second);
    return p;
  }

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

 private:
  std::map<Key, Integer> c_;
};

namespace detail {

/// coeff * u t^d prod_{k=1}^{b-1} (1 + u t^{w_k})
inline PoincarePolynomial koszul_block(const Integer& coeff, Degree d, std::size_t b, const WeightVector& w) {
  std::map<PoincarePolynomial::Key, Integer> cur{{{1, d}, coeff}};
  for (std::size_t k = 0; k + 1 < b; ++k) {
    auto next = cur;
    for (const auto& [key, v] : cur) next[{key.first + 1, key.second + w[k]}] += v;
    cur = std::move(next);
  }
  PoincarePolynomial p;
  for (const auto& [key, v] : cur) p.add(key.first, key.second, v);
  return p;
}

}  // namespace detail

/// Eliahou-Kervaire generator sum over the given minimal generators, no
/// stability check.
inline PoincarePolynomial poincare_from_generators(std::span<const Monomial> gens, const WeightVector& w) {
  PoincarePolynomial p;
  for (const auto& g : gens) p += detail::koszul_block(1, weighted_degree(g, w), max_index(g), w);
  return p;
}

/// Catalan form for the w-closure of m, read off the rows a >= deg_w(m).
inline PoincarePolynomial principal_poincare_series(const Monomial& m, const WeightVector& w) {
  auto cat = catalan_diagram(m, w);
  PoincarePolynomial p;
  for (const auto& st : generator_stats(cat)) p += detail::koszul_block(st.count, st.degree, st.max_index, w);
  return p;
}

inline PoincarePolynomial poincare_series(const MonomialIdeal& I, const WeightVector& w) {
  detail::require_w_stable(I, w, "poincare_series");
  auto p = poincare_from_generators(I.generators(), w);
  if (!I.is_zero()) {
    auto gens = detail::minimal_in_w_order(I, w);
    if (gens.size() == 1 && principal_poincare_series(gens.front(), w) != p)
      throw InternalError("poincare_series: Catalan form disagrees with the generator sum");
  }
  return p;
}

struct BettiNumbers {
  std::vector<Integer> totals;  // b_1 .. b_n
  PoincarePolynomial graded;
};

inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BettiNumbers betti_numbers(const MonomialIdeal& I, const WeightVector& w) {
  BettiNumbers b{std::vector<Integer>(I.nvars(), 0), poincare_series(I, w)};
  for (const auto& g : I.generators()) {
    auto top = max_index(g);
    for (std::size_t i = 1; i <= I.nvars(); ++i) b.totals[i - 1] += binomial(top - 1, i - 1);
  }
  return b;
}

}  // namespace wstable
