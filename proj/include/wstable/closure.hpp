#pragma once

#include <span>
#include <string>
#include <vector>

#include "wstable/ideal.hpp"
#include "wstable/monomial.hpp"
#include "wstable/tree.hpp"

namespace wstable {

/// Weighted Borel closure psi^{-1}(Borel(psi(A))): the smallest w-stable
/// ideal containing A. The closure of one monomial m is generated by the sinks
/// of T_{w,m}; closures of sets are sums of principal closures.
inline MonomialIdeal w_closure(std::size_t nvars, std::span<const Monomial> gens, const WeightVector& w) {
  detail::require_same_dimension(nvars, w.size(), "w_closure");
  std::vector<Monomial> out;
  for (const auto& a : gens) {
    detail::require_same_dimension(nvars, a.nvars(), "w_closure");
    for_each_tree_sink(a, w, weighted_degree(a, w), [&](const Monomial& s) { out.push_back(s); });
  }
  return MonomialIdeal(nvars, out);
}

inline MonomialIdeal w_closure(const Monomial& m, const WeightVector& w) {
  return w_closure(m.nvars(), std::span<const Monomial>(&m, 1), w);
}

inline MonomialIdeal w_closure(const MonomialIdeal& I, const WeightVector& w) {
  return w_closure(I.nvars(), I.generators(), w);
}

/// Classical strongly stable (Borel) closure.
inline MonomialIdeal borel_closure(std::size_t nvars, std::span<const Monomial> gens) {
  return w_closure(nvars, gens, WeightVector::all_ones(nvars));
}

inline bool is_w_stable(const MonomialIdeal& I, const WeightVector& w) {
  detail::require_same_dimension(I.nvars(), w.size(), "is_w_stable");
  return w_closure(I, w) == I;
}

inline bool is_strongly_stable(const MonomialIdeal& I) {
  return is_w_stable(I, WeightVector::all_ones(I.nvars()));
}

namespace detail {

inline std::string monomial_debug_string(const Monomial& m) {
  std::string s = "x^(";
  for (std::size_t i = 0; i < m.nvars(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

inline void require_w_stable(const MonomialIdeal& I, const WeightVector& w, const char* what) {
  detail::require_same_dimension(I.nvars(), w.size(), what);
  auto closed = w_closure(I, w);
  if (closed == I) return;
  for (const auto& g : closed.generators()) {
    if (!I.contains(g))
      throw ContractError(std::string(what) + ": ideal is not w-stable; closure generator " +
                          monomial_debug_string(g) + " is missing");
  }
  throw ContractError(std::string(what) + ": ideal is not w-stable");
}

/// Generators of I with no other generator strictly below them in the w-Borel
/// order. No stability check.
inline std::vector<Monomial> minimal_in_w_order(const MonomialIdeal& I, const WeightVector& w) {
  std::vector<Monomial> out;
  const auto& G = I.generators();
  for (const auto& g : G) {
    bool covered = false;
    for (const auto& h : G) {
      if (h != g && w_borel_below(h, g, w)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(g);
  }
  return out;
}

}  // namespace detail

/// Weighted Borel generators Bgens_w(I) of a w-stable ideal.
inline std::vector<Monomial> w_borel_gens(const MonomialIdeal& I, const WeightVector& w) {
  detail::require_w_stable(I, w, "w_borel_gens");
  auto gens = detail::minimal_in_w_order(I, w);
  if (w_closure(I.nvars(), gens, w) != I)
    throw InternalError("w_borel_gens: weighted Borel generators do not regenerate the ideal");
  return gens;
}

inline std::vector<Monomial> borel_gens(const MonomialIdeal& I) {
  return w_borel_gens(I, WeightVector::all_ones(I.nvars()));
}

/// True when I is the w-closure of a single monomial.
inline bool is_principal_w_stable(const MonomialIdeal& I, const WeightVector& w) {
  return !I.is_zero() && is_w_stable(I, w) && detail::minimal_in_w_order(I, w).size() == 1;
}

namespace detail {

inline MonomialIdeal trunc_from_borel_gens(std::size_t nvars, std::span<const Monomial> bgens, Degree d) {
  if (d <= 0) return MonomialIdeal::unit(nvars);
  std::vector<Monomial> cut;
  cut.reserve(bgens.size());
  for (const auto& b : bgens) cut.push_back(truncate(b, d));
  return borel_closure(nvars, cut);
}

}  // namespace detail

/// d-truncation of a strongly stable ideal, Borel(trunc_d(b) : b in Bgens(J)).
/// d = 0 yields the unit ideal.
inline MonomialIdeal trunc_ideal(const MonomialIdeal& J, Degree d) {
  auto bgens = borel_gens(J);
  return detail::trunc_from_borel_gens(J.nvars(), bgens, d);
}

}  // namespace wstable
