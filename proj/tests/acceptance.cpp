// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "oracles.hpp"
#include "wstable/cli.hpp"

using namespace wstable;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<std::vector<int>> as_ints(const CatalanDiagram& c) {
  std::vector<std::vector<int>> out;
  for (const auto& row : c.entries) {
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(x));
    out.push_back(r);
  }
  return out;
}

bool subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

std::vector<WeightVector> weight_box(std::size_t n, Degree top) {
  std::vector<WeightVector> out;
  std::vector<Degree> w(n);
  std::function<void(std::size_t, Degree)> rec = [&](std::size_t i, Degree cap) {
    if (i == n) {
      out.emplace_back(w);
      return;
    }
    for (Degree x = 1; x <= cap; ++x) {
      w[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, top);
  return out;
}

std::pair<MonomialIdeal, WeightVector> random_stable(std::mt19937& rng, std::size_t n, Degree degree) {
  auto w = oracle::random_weights(rng, n, 4);
  std::vector<Monomial> A;
  std::uniform_int_distribution<int> count(1, 3);
  for (int k = count(rng); k > 0; --k) A.push_back(oracle::random_monomial_wdeg(rng, w, degree));
  return {w_closure(n, A, w), w};
}

void ac1(Check& c) {
  const WeightVector w21({2, 1}), w321({3, 2, 1});
  c.expect(w_closure(golden::ideal("x1, x2^2", 2), w21) == golden::ideal("x1, x2^2", 2), "closure of (x1, x2^2)");
  auto standard = w_closure(golden::mono("x1*x2*x3^2", 3), WeightVector::all_ones(3));
  auto expected11 = golden::ideal(
      "x1*x2*x3^2, x1^2*x3^2, x1*x2^2*x3, x1^2*x2*x3, x1*x2^3, x1^3*x3, x1^2*x2^2, x1^3*x2, x1^4", 3);
  c.expect(standard == expected11, "closure at standard weights");
  c.expect(w_closure(golden::mono("x1*x2*x3^2", 3), w321) ==
               golden::ideal("x1*x2*x3^2, x1^2*x3, x1*x2^2, x1^2*x2, x1^3", 3),
           "closure at (3,2,1)");
  c.note << (c.ok ? "(x1, x2^2) at (2,1); closure of x1*x2*x3^2 at standard weights (9 generators) and at (3,2,1) (5 generators)" : "");
}

void ac2(Check& c) {
  const WeightVector w21({2, 1});
  auto J = golden::ideal("x1^2, x1*x2^2, x2^4", 2);
  c.expect(is_w_stable(J, w21) && w_borel_gens(J, w21) == golden::monos({"x2^4"}, 2), "(x1^2, x1*x2^2, x2^4)");
  for (const auto& row : golden::principal_rows()) {
    auto I = golden::ideal(row.ideal, 3);
    WeightVector w(row.weights);
    std::string tag = std::string("row ") + row.label;
    c.expect(is_w_stable(I, w), tag + " stability");
    if (!is_w_stable(I, w)) continue;
    c.expect(oracle::sorted(borel_gens(I)) == oracle::sorted(golden::monos(row.borel_gens, 3)), tag + " Bgens");
    c.expect(oracle::sorted(w_borel_gens(I, w)) == oracle::sorted(golden::monos(row.weighted_borel_gens, 3)),
             tag + " Bgens_w");
  }
  c.note << (c.ok ? "(x1^2, x1*x2^2, x2^4) at (2,1) and 9 principal ideals in 3 variables" : "");
}

void ac3(Check& c) {
  c.expect(as_ints(catalan_diagram(golden::mono("x1*x2^3*x3^2", 3), WeightVector({3, 2, 1}))) == golden::catalan_long(),
           "14-row diagram");
  c.expect(as_ints(catalan_diagram(golden::mono("x1*x2*x3^2", 3), WeightVector::all_ones(3))) ==
               golden::catalan_standard(),
           "standard weights");
  c.expect(as_ints(catalan_diagram(golden::mono("x1*x2*x3^2", 3), WeightVector({3, 2, 1}))) == golden::catalan_321(),
           "weights (3,2,1)");
  std::istringstream in;
  auto r = run_cli({"catalan", "x1*x2^3*x3^2", "--weights", "3,2,1"}, in);
  std::string expected;
  for (const auto& row : golden::catalan_long())
    expected += "| " + std::to_string(row[0]) + " " + std::to_string(row[1]) + " " + std::to_string(row[2]) + " |\n";
  c.expect(r.out == expected, "14-row text layout");
  c.note << (c.ok ? "14x3, 5x3 and 10x3 diagrams; text layout" : "");
}

void ac4(Check& c) {
  auto t = tree_from_monomial(golden::mono("x2^2*x3", 3), WeightVector({4, 2, 1}));
  std::set<std::pair<Monomial, Monomial>> edges, expected;
  for (const auto& e : t.edges()) edges.insert(e);
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{{"1", "x1"},
                                                                     {"1", "x2"},
                                                                     {"x1", "x1^2"},
                                                                     {"x1", "x1*x2"},
                                                                     {"x1", "x1*x3"},
                                                                     {"x2", "x2^2"},
                                                                     {"x2^2", "x2^3"},
                                                                     {"x2^2", "x2^2*x3"}})
    expected.emplace(golden::mono(a, 3), golden::mono(b, 3));
  c.expect(edges == expected, "weighted tree edges");
  auto t1 = tree_from_monomial(golden::mono("x2^2*x3", 3), WeightVector::all_ones(3));
  c.expect(!t1.has_vertex(golden::mono("x1*x3", 3)), "standard tree omits x1*x3");
  auto ti = tree_from_ideal(golden::ideal(golden::stair_ideal(), 3));
  expected.clear();
  edges.clear();
  for (const auto& e : ti.edges()) edges.insert(e);
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{{"1", "x"},
                                                                     {"x", "x^2"},
                                                                     {"x", "x*y"},
                                                                     {"x^2", "x^3"},
                                                                     {"x^2", "x^2*y"},
                                                                     {"x*y", "x*y^2"},
                                                                     {"x*y^2", "x*y^3"},
                                                                     {"x*y^2", "x*y^2*z"}})
    expected.emplace(golden::mono(a, 3), golden::mono(b, 3));
  c.expect(edges == expected, "ideal tree edges");
  c.expect(oracle::sorted(ti.sinks()) == oracle::sorted(golden::monos({"x^3", "x^2*y", "x*y^3", "x*y^2*z"}, 3)),
           "ideal tree sinks");
  c.expect(oracle::sorted(ti.subsinks()) == oracle::sorted(golden::monos({"x^2", "x*y^2"}, 3)), "ideal tree subsinks");
  c.note << (c.ok ? "8 weighted edges, x1*x3 absent at standard weights, 8 ideal-tree edges" : "");
}

void ac5(Check& c) {
  auto m = golden::mono("x1*x2*x3^2", 3);
  auto ones = WeightVector::all_ones(3);
  WeightVector w({3, 2, 1});
  auto b1 = betti_numbers(w_closure(m, ones), ones);
  c.expect(b1.totals == std::vector<Integer>{9, 13, 5}, "totals (9,13,5)");
  c.expect(b1.graded.beta(1, 4) == 9 && b1.graded.beta(2, 5) == 13 && b1.graded.beta(3, 6) == 5, "row 3 of table");
  auto b2 = betti_numbers(w_closure(m, w), w);
  c.expect(b2.totals == std::vector<Integer>{5, 6, 2}, "totals (5,6,2)");
  PoincarePolynomial table;
  for (auto [i, j, v] : std::vector<std::tuple<std::size_t, Degree, int>>{
           {1, 7, 3}, {1, 8, 1}, {1, 9, 1}, {2, 9, 2}, {2, 10, 3}, {2, 11, 1}, {3, 12, 2}})
    table.add(i, j, v);
  c.expect(b2.graded == table, "graded table for weights (3,2,1)");
  auto p = poincare_series(w_closure(m, w), w);
  c.expect(p == table && render_poincare(p) ==
                             "2*t^12*u^3 + t^11*u^2 + 3*t^10*u^2 + 2*t^9*u^2 + t^9*u + t^8*u + 3*t^7*u",
           "Poincare series terms");
  c.note << (c.ok ? "totals (9,13,5) and (5,6,2); 7 Poincare terms" : "");
}

void ac6(Check& c) {
  auto I = golden::ideal(golden::stair_ideal(), 3);
  auto cs = constraint_system(I);
  auto cone = cone_rays(cs);
  std::set<IntVector> rays(cone.rays.begin(), cone.rays.end());
  std::set<IntVector> expected{{1, 1, 0}, {2, 1, 0}, {2, 1, 1}};
  c.expect(rays == expected, "rays");
  auto w = principal_weight_vector(I);
  c.expect(w && w_closure(cs.candidate, *w) == I, "verified weight vector");
  c.expect(w && std::vector<Degree>(w->values().begin(), w->values().end()) == std::vector<Degree>{5, 3, 1},
           "sum of rays (5,3,1)");
  c.expect(!principal_weight_vector(golden::ideal(golden::non_principal_ideal(), 3)).has_value(), "counter-example");
  std::istringstream in;
  auto r = run_cli({"weight-vector", golden::non_principal_ideal()}, in);
  c.expect(r.out == "not principally w-stable\n" && r.exit_code == 3, "CLI outcome and exit code 3");
  c.note << (c.ok ? "rays {(1,1,0),(2,1,0),(2,1,1)}, w = (5,3,1), counter-example rejected" : "");
}

void ac7(Check& c) {
  std::mt19937 rng(700);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto w = oracle::random_weights(rng, n, 4);
    std::vector<Monomial> A, B;
    std::uniform_int_distribution<int> count(1, 3);
    for (int k = count(rng); k > 0; --k) A.push_back(oracle::random_monomial_wdeg(rng, w, 10));
    B = A;
    for (int k = count(rng); k > 0; --k) B.push_back(oracle::random_monomial_wdeg(rng, w, 10));
    auto clA = w_closure(n, A, w), clB = w_closure(n, B, w);
    bool extensive = std::all_of(A.begin(), A.end(), [&](const Monomial& a) { return clA.contains(a); });
    c.expect(extensive, "extensive, trial " + std::to_string(trial));
    c.expect(subset(clA, clB), "monotone, trial " + std::to_string(trial));
    c.expect(w_closure(clA, w) == clA, "idempotent, trial " + std::to_string(trial));
  }
  c.note << (c.ok ? "200 instances" : "");
}

void ac8(Check& c) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ones = WeightVector::all_ones(n);
    for (const auto& m : oracle::monomials_up_to(n, 5, ones)) {
      auto moves = oracle::borel_moves(m);
      std::vector<Monomial> fix(moves.begin(), moves.end());
      c.expect(oracle::sorted_generators(w_closure(m, ones)) == oracle::sorted(fix), "monomial " + to_string(m));
      ++count;
    }
  }
  c.note << (c.ok ? std::to_string(count) + " monomials" : "");
}

void ac9(Check& c) {
  std::mt19937 rng(900);
  int principal_meets = 0, strict_products = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto w = oracle::random_weights(rng, n, 4);
    std::vector<Monomial> A1, A2;
    for (int k = 0; k < 2; ++k) {
      A1.push_back(oracle::random_monomial_wdeg(rng, w, 12));
      A2.push_back(oracle::random_monomial_wdeg(rng, w, 12));
    }
    std::vector<Monomial> both = A1;
    both.insert(both.end(), A2.begin(), A2.end());
    c.expect(sum(w_closure(n, A1, w), w_closure(n, A2, w)) == w_closure(n, both, w), "sum of closures");

    auto u = oracle::random_monomial_wdeg(rng, w, 12), v = oracle::random_monomial_wdeg(rng, w, 12);
    auto cu = w_closure(u, w), cv = w_closure(v, w);
    auto inter = intersect(cu, cv);
    if (auto q = meet_w(u, v, w)) {
      ++principal_meets;
      c.expect(inter == w_closure(*q, w), "intersection equals closure of the meet");
    } else {
      c.expect(is_w_stable(inter, w), "intersection is w-stable");
    }

    // The product of closures always lies in the closure of the product and
    // equals it for standard weights; for other weights the inclusion can be
    // strict (w = (2,1), u = v = x2 gives (x1, x2)^2 inside (x1, x2^2)).
    auto a = oracle::random_monomial_wdeg(rng, w, 12), b = oracle::random_monomial_wdeg(rng, w, 12);
    auto prod = product(w_closure(a, w), w_closure(b, w));
    auto whole = w_closure(a * b, w);
    c.expect(subset(prod, whole), "product of closures inside closure of product");
    if (w.is_standard()) c.expect(prod == whole, "product of closures at standard weights");
    if (prod != whole) ++strict_products;
  }
  {
    const WeightVector w({2, 1});
    const Monomial x2{0, 1};
    c.expect(product(w_closure(x2, w), w_closure(x2, w)) != w_closure(x2 * x2, w), "strict product example");
  }
  std::ostringstream os;
  os << "100 instances each; " << principal_meets << " meets in the image; product equality holds at standard "
     << "weights, inclusion only in general (" << strict_products << " strict weighted instances)";
  c.note << (c.ok ? os.str() : "");
}

void ac10(Check& c) {
  auto start = Clock::now();
  int checked = 0;
  for (const auto& g : golden::golden_ideals()) {
    if (!is_w_stable(g.ideal, g.weights)) continue;
    c.expect(hilbert_series(g.ideal, g.weights).expand(30) == oracle::complement_counts(g.ideal, g.weights, 30),
             g.name);
    ++checked;
  }
  std::mt19937 rng(1000);
  for (int trial = 0; trial < 50; ++trial) {
    auto w = oracle::random_weights(rng, 3, 4);
    auto m = oracle::random_monomial_wdeg(rng, w, 10);
    auto I = w_closure(m, w);
    c.expect(hilbert_series(I, w).expand(30) == oracle::complement_counts(I, w, 30), "random " + to_string(m));
    ++checked;
  }
  double s = seconds_since(start);
  c.expect(s <= 5.0, "time budget");
  std::ostringstream os;
  os << checked << " ideals to degree 30 in " << s << " s";
  c.note << (c.ok ? os.str() : "");
}

void ac11(Check& c) {
  auto check = [&](const MonomialIdeal& I, const WeightVector& w, const std::string& tag) {
    c.expect(hilbert_series(I, w).numerator == Polynomial::one() + poincare_series(I, w).at_u_minus_one(), tag);
  };
  int checked = 0;
  for (const auto& g : golden::golden_ideals())
    if (is_w_stable(g.ideal, g.weights)) {
      check(g.ideal, g.weights, g.name);
      ++checked;
    }
  std::mt19937 rng(1100);
  for (int trial = 0; trial < 50; ++trial) {
    auto [I, w] = random_stable(rng, 1 + trial % 4, 10);
    check(I, w, "random " + to_string(I));
    ++checked;
  }
  c.note << (c.ok ? std::to_string(checked) + " ideals" : "");
}

void ac12(Check& c) {
  auto start = Clock::now();
  std::mt19937 rng(1200);
  const auto box = weight_box(3, 6);
  int principal = 0, empty = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> A;
    std::uniform_int_distribution<int> count(1, 3);
    for (int k = count(rng); k > 0; --k) A.push_back(oracle::random_monomial(rng, 3, 4));
    auto I = borel_closure(3, A);
    auto cs = constraint_system(I);
    for (const auto& w : box) {
      bool inside = cs.contains(w);
      bool closure_matches = w_closure(cs.candidate, w) == I;
      c.expect(inside == closure_matches, to_string(I) + " at w = " + to_string(w));
      principal += closure_matches;
    }
    empty += open_region_is_empty(cs);
  }
  double s = seconds_since(start);
  c.expect(s <= 60.0, "time budget");
  std::ostringstream os;
  os << "30 ideals x " << box.size() << " weight vectors, " << principal << " principal pairs, " << empty
     << " empty regions, " << s << " s";
  c.note << (c.ok ? os.str() : "");
}

/// Coverage count per weighted degree; -1 marks a monomial covered twice or
/// covered while lying in I.
std::vector<Integer> stanley_cover(const StanleyDecomposition& sd, const MonomialIdeal& I, const WeightVector& w,
                                   Degree bound) {
  std::vector<Integer> out;
  for (Degree d = 0; d <= bound; ++d) {
    Integer count = 0;
    for (const auto& m : oracle::monomials_of_degree(I.nvars(), d, w)) {
      int covering = 0;
      for (const auto& p : sd.pieces) {
        if (!p.coset.divides(m)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < m.nvars(); ++i)
          if (m[i] != p.coset[i] && std::find(p.free_vars.begin(), p.free_vars.end(), i) == p.free_vars.end())
            ok = false;
        covering += ok;
      }
      if (covering > 1 || (covering == 1 && I.contains(m))) return {-1};
      count += covering;
    }
    out.push_back(count);
  }
  return out;
}

void ac13(Check& c) {
  int checked = 0;
  for (const auto& g : golden::golden_ideals()) {
    if (!is_w_stable(g.ideal, g.weights)) continue;
    auto sd = stanley_decomposition(g.ideal, g.weights);
    c.expect(stanley_cover(sd, g.ideal, g.weights, 30) == oracle::complement_counts(g.ideal, g.weights, 30), g.name);
    ++checked;
  }
  c.note << (c.ok ? std::to_string(checked) + " golden ideals to degree 30" : "");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Check&)>> criteria = {
      {"golden closures", ac1},
      {"golden Borel generators", ac2},
      {"golden Catalan diagrams", ac3},
      {"golden trees", ac4},
      {"golden Betti numbers and Poincare series", ac5},
      {"golden principal cone", ac6},
      {"closure operator properties", ac7},
      {"closure equals Borel-move fixpoint", ac8},
      {"sum, intersection and product of closures", ac9},
      {"Hilbert series against complement counting", ac10},
      {"K-polynomial identity", ac11},
      {"principal cone soundness", ac12},
      {"Stanley decompositions partition the complement", ac13},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    failures += !c.ok;
    std::cout << "AC" << i + 1 << " " << (c.ok ? "PASS" : "FAIL") << " " << criteria[i].first << ": " << c.note.str()
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
