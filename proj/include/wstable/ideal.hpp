#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "wstable/monomial.hpp"

namespace wstable {

/// A monomial ideal stored by its minimal generators G(I), kept in graded-lex
/// descending order. The zero ideal has no generators; the unit ideal is {1}.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t nvars) : n_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::span<const Monomial> gens) : n_(nvars) {
    gens_.assign(gens.begin(), gens.end());
    minimalize_in_place();
  }
  MonomialIdeal(std::size_t nvars, std::initializer_list<Monomial> gens)
      : MonomialIdeal(nvars, std::span<const Monomial>(gens.begin(), gens.size())) {}

  static MonomialIdeal unit(std::size_t nvars) {
    Monomial one = Monomial::unit(nvars);
    return MonomialIdeal(nvars, std::span<const Monomial>(&one, 1));
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const {
    detail::require_same_dimension(n_, m.nvars(), "contains");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  void minimalize_in_place() {
    for (const auto& g : gens_) detail::require_same_dimension(n_, g.nvars(), "minimalize");
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
      auto da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::vector<Monomial> kept;
    kept.reserve(gens_.size());
    for (auto& g : gens_) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), grlex_greater);
    gens_ = std::move(kept);
  }

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::size_t nvars, std::span<const Monomial> gens) {
  return MonomialIdeal(nvars, gens);
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dimension(a.nvars(), b.nvars(), "sum");
  std::vector<Monomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), g);
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dimension(a.nvars(), b.nvars(), "product");
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return MonomialIdeal(a.nvars(), g);
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dimension(a.nvars(), b.nvars(), "intersect");
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  return MonomialIdeal(a.nvars(), g);
}

/// Lexicographically smallest minimal generator (x_1 > ... > x_n).
inline const Monomial& lex_smallest_generator(const MonomialIdeal& I) {
  if (I.is_zero()) throw ContractError("lex_smallest_generator: zero ideal");
  return *std::min_element(I.generators().begin(), I.generators().end());
}

}  // namespace wstable
