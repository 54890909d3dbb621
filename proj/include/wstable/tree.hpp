#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wstable/ideal.hpp"
#include "wstable/monomial.hpp"

namespace wstable {

/// Rooted tree of monomials with edges (v, v*x_j), max(v) <= j. Nodes are
/// kept in breadth-first order with the unit monomial first; children of a
/// vertex are ordered by the appended variable.
class TruncationTree {
 public:
  struct Node {
    Monomial vertex;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
  };

  explicit TruncationTree(std::size_t nvars, Degree bound = 0) : bound_(bound) {
    add_node(Monomial::unit(nvars), std::nullopt);
  }

  std::size_t nvars() const { return nodes_.front().vertex.nvars(); }
  const Monomial& root() const { return nodes_.front().vertex; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t vertex_count() const noexcept { return nodes_.size(); }
  /// Bound on the grading used to stop branching (weighted for T_{w,m},
  /// standard for T_I).
  Degree degree_bound() const noexcept { return bound_; }

  std::optional<std::size_t> find(const Monomial& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool has_vertex(const Monomial& v) const { return index_.contains(v); }
  bool has_edge(const Monomial& from, const Monomial& to) const {
    auto i = find(to);
    return i && nodes_[*i].parent && nodes_[*nodes_[*i].parent].vertex == from;
  }

  std::vector<Monomial> vertices() const {
    std::vector<Monomial> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.vertex);
    return out;
  }

  std::vector<std::pair<Monomial, Monomial>> edges() const {
    std::vector<std::pair<Monomial, Monomial>> out;
    for (const auto& n : nodes_)
      for (auto c : n.children) out.emplace_back(n.vertex, nodes_[c].vertex);
    return out;
  }

  std::vector<Monomial> children(const Monomial& v) const {
    std::vector<Monomial> out;
    if (auto i = find(v))
      for (auto c : nodes_[*i].children) out.push_back(nodes_[c].vertex);
    return out;
  }

  /// Vertices with out-degree zero.
  std::vector<Monomial> sinks() const {
    std::vector<Monomial> out;
    for (const auto& n : nodes_)
      if (n.children.empty()) out.push_back(n.vertex);
    return out;
  }

  /// Vertices with at least one edge into a sink.
  std::vector<Monomial> subsinks() const {
    std::vector<Monomial> out;
    for (const auto& n : nodes_) {
      bool hit = false;
      for (auto c : n.children) hit = hit || nodes_[c].children.empty();
      if (hit) out.push_back(n.vertex);
    }
    return out;
  }

  /// Largest 1-based variable index branching from v (0 for a sink).
  std::size_t largest_branch(const Monomial& v) const {
    auto i = find(v);
    if (!i || nodes_[*i].children.empty()) return 0;
    return max_index(nodes_[nodes_[*i].children.back()].vertex);
  }

  std::size_t add_child(std::size_t parent, Monomial child) {
    auto id = add_node(std::move(child), parent);
    nodes_[parent].children.push_back(id);
    return id;
  }

 private:
  std::size_t add_node(Monomial v, std::optional<std::size_t> parent) {
    auto id = nodes_.size();
    index_.emplace(v, id);
    nodes_.push_back(Node{std::move(v), parent, {}});
    return id;
  }

  Degree bound_;
  std::vector<Node> nodes_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Visits the sinks of T^bound_{w,m} depth-first without storing interior
/// vertices. Sinks are visited in lexicographically decreasing order.
template <class Visitor>
void for_each_tree_sink(const Monomial& m, const WeightVector& w, Degree bound, Visitor&& visit) {
  detail::require_same_dimension(m.nvars(), w.size(), "for_each_tree_sink");
  struct Frame {
    Monomial v;
    Degree deg;
  };
  std::vector<Frame> stack{{Monomial::unit(m.nvars()), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    std::size_t lo = max_index(f.v);
    std::size_t hi = f.deg < bound ? truncation_max_index(m, w, f.deg + 1) : 0;
    if (hi < lo) {
      visit(f.v);
      continue;
    }
    for (std::size_t j = hi; j >= lo; --j)
      stack.push_back({f.v.times_variable(j - 1), detail::checked_add(f.deg, w[j - 1])});
  }
}

/// T^bound_{w,m}: edge (v, v*x_j) iff max(v) <= j <= max(trunc_{deg_w(v)+1}(psi(m)))
/// and deg_w(v) < bound. The default bound is deg_w(m), whose sinks are the
/// minimal generators of the w-closure of m.
inline TruncationTree tree_from_monomial(const Monomial& m, const WeightVector& w,
                                         std::optional<Degree> bound = std::nullopt) {
  detail::require_same_dimension(m.nvars(), w.size(), "tree_from_monomial");
  const Degree b = bound.value_or(weighted_degree(m, w));
  TruncationTree t(m.nvars(), b);
  std::vector<Degree> deg{0};
  for (std::size_t i = 0; i < t.vertex_count(); ++i) {
    if (deg[i] >= b) continue;
    Monomial v = t.nodes()[i].vertex;
    std::size_t hi = truncation_max_index(m, w, deg[i] + 1);
    for (std::size_t j = max_index(v); j <= hi; ++j) {
      t.add_child(i, v.times_variable(j - 1));
      deg.push_back(detail::checked_add(deg[i], w[j - 1]));
    }
  }
  return t;
}

/// T_I: edge (v, v*x_j) iff v*x_j is the standard-degree truncation of some
/// minimal generator g != v. Intended for strongly stable I, whose sinks are
/// then exactly G(I).
inline TruncationTree tree_from_ideal(const MonomialIdeal& I) {
  const std::size_t n = I.nvars();
  Degree top = 0;
  std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> branches;
  for (const auto& g : I.generators()) {
    Degree dg = g.degree();
    top = std::max(top, dg);
    Monomial prev = Monomial::unit(n);
    for (Degree d = 1; d <= dg; ++d) {
      Monomial cur = truncate(g, d);
      auto& js = branches[prev];
      std::size_t j = max_index(cur);
      if (std::find(js.begin(), js.end(), j) == js.end()) js.push_back(j);
      prev = std::move(cur);
    }
  }
  TruncationTree t(n, top);
  for (std::size_t i = 0; i < t.vertex_count(); ++i) {
    Monomial v = t.nodes()[i].vertex;
    auto it = branches.find(v);
    if (it == branches.end()) continue;
    auto js = it->second;
    std::sort(js.begin(), js.end());
    for (auto j : js) t.add_child(i, v.times_variable(j - 1));
  }
  return t;
}

}  // namespace wstable
