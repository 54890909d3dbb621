#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wstable/catalan.hpp"
#include "wstable/closure.hpp"
#include "wstable/cone.hpp"
#include "wstable/io.hpp"
#include "wstable/series.hpp"
#include "wstable/tree.hpp"

namespace wstable {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_contract = 2,
  exit_negative = 3,
  exit_internal = 4,
};

struct CliResult {
  std::string out;
  std::string err;
  int exit_code = exit_ok;
};

namespace detail {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json json_monomials(std::span<const Monomial> ms, Naming naming) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_string(m, naming));
  return a;
}

inline json json_tree(const TruncationTree& t, Naming naming) {
  json edges = json::array();
  for (const auto& [a, b] : t.edges()) edges.push_back({to_string(a, naming), to_string(b, naming)});
  auto vertices = t.vertices();
  auto sinks = t.sinks();
  auto subsinks = t.subsinks();
  return {{"vertices", json_monomials(vertices, naming)},
          {"edges", edges},
          {"sinks", json_monomials(sinks, naming)},
          {"subsinks", json_monomials(subsinks, naming)}};
}

inline json json_polynomial(const Polynomial& p) {
  json a = json::array();
  for (Degree k = 0; k <= p.degree(); ++k) a.push_back(json_integer(p.coefficient(k)));
  return a;
}

inline json json_poincare(const PoincarePolynomial& p) {
  json a = json::array();
  for (const auto& [key, v] : p.terms())
    a.push_back({{"i", key.first}, {"j", key.second}, {"beta", json_integer(v)}});
  return a;
}

struct CliOptions {
  std::string expression;
  std::string weights;
  std::optional<std::size_t> nvars;
  std::optional<Degree> expand_to;
  std::optional<Degree> bound;
  bool json = false;
  bool closure = false;
};

class Dispatcher {
 public:
  Dispatcher(const CliOptions& o, std::istream& in) : o_(o) {
    if (o_.expression == "-") {
      o_.expression.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      while (!o_.expression.empty() && std::isspace(static_cast<unsigned char>(o_.expression.back())))
        o_.expression.pop_back();
    }
    if (!o_.weights.empty()) weights_ = parse_weights(o_.weights);
    if (o_.nvars && weights_ && *o_.nvars != weights_->size())
      throw CLI::ValidationError("--nvars " + std::to_string(*o_.nvars) + " does not match " +
                                 std::to_string(weights_->size()) + " weights");
  }

  CliResult run(const std::string& command) {
    json result;
    std::string text;
    int code = exit_ok;

    if (command == "tree" || command == "catalan") {
      auto m = monomial();
      const auto& w = weights(m.nvars());
      if (command == "tree") {
        auto t = tree_from_monomial(m, w, o_.bound);
        result = json_tree(t, naming_);
        text = render_tree(t, naming_);
      } else {
        auto c = catalan_diagram(m, w);
        json rows = json::array(), stats = json::array();
        for (const auto& row : c.entries) {
          json r = json::array();
          for (const auto& x : row) r.push_back(json_integer(x));
          rows.push_back(r);
        }
        for (const auto& s : generator_stats(c))
          stats.push_back({{"degree", s.degree}, {"max_index", s.max_index}, {"count", json_integer(s.count)}});
        result = {{"degree", c.degree}, {"rows", rows}, {"generator_stats", stats}};
        text = render_catalan(c);
      }
    } else {
      auto I = ideal();
      const auto& w = weights(I.nvars());
      if (o_.closure) I = w_closure(I, w);

      if (command == "closure") {
        auto J = w_closure(I, w);
        result = {{"generators", json_monomials(J.generators(), naming_)}};
        text = to_string(J, naming_) + "\n";
      } else if (command == "bgens") {
        auto g = w_borel_gens(I, w);
        result = {{"generators", json_monomials(g, naming_)}};
        text = to_string(MonomialIdeal(I.nvars(), g), naming_) + "\n";
      } else if (command == "is-wstable") {
        bool yes = is_w_stable(I, w);
        result = {{"w_stable", yes}};
        text = yes ? "true\n" : "false\n";
        if (!yes) code = exit_negative;
      } else if (command == "tree-ideal") {
        auto t = tree_from_ideal(I);
        result = json_tree(t, naming_);
        text = render_tree(t, naming_);
      } else if (command == "hilbert") {
        auto hs = hilbert_series(I, w);
        result = {{"numerator", json_polynomial(hs.numerator)},
                  {"denominator_weights", hs.weights.values()},
                  {"text", render_hilbert(hs)}};
        text = render_hilbert(hs) + "\n";
        if (!hs.terms.empty()) {
          json terms = json::array();
          for (const auto& t : hs.terms)
            terms.push_back({{"count", json_integer(t.count)},
                             {"degree", t.degree},
                             {"last_bound_var", t.last_bound_var}});
          result["terms"] = terms;
          text += "= " + render_hilbert_terms(hs) + "\n";
        }
        if (o_.expand_to) {
          auto series = hs.expand(*o_.expand_to);
          json a = json::array();
          std::string line;
          for (const auto& c : series) {
            a.push_back(json_integer(c));
            line += (line.empty() ? "" : " ") + c.str();
          }
          result["expansion"] = a;
          text += line + "\n";
        }
      } else if (command == "stanley") {
        auto sd = stanley_decomposition(I, w);
        json pieces = json::array();
        for (const auto& p : sd.pieces) {
          json free = json::array();
          for (auto v : p.free_vars) free.push_back(variable_name(v, sd.nvars, naming_));
          pieces.push_back({{"coset", to_string(p.coset, naming_)}, {"free", free}});
        }
        result = {{"pieces", pieces}};
        text = render_stanley(sd, naming_);
      } else if (command == "poincare") {
        auto p = poincare_series(I, w);
        result = {{"terms", json_poincare(p)}, {"text", render_poincare(p)}};
        text = render_poincare(p) + "\n";
      } else if (command == "betti") {
        auto b = betti_numbers(I, w);
        json totals = json::array();
        for (const auto& t : b.totals) totals.push_back(json_integer(t));
        result = {{"totals", totals}, {"graded", json_poincare(b.graded)}};
        text = render_betti_table(b);
      } else if (command == "cone") {
        auto cs = constraint_system(I);
        auto cone = cone_rays(cs);
        json rays = json::array();
        for (const auto& r : cone.rays) {
          json a = json::array();
          for (const auto& x : r) a.push_back(json_integer(x));
          rays.push_back(a);
        }
        result = {{"rays", rays}, {"open_region_empty", open_region_is_empty(cs)}};
        text = render_rays(cone);
      } else if (command == "weight-vector") {
        auto wv = principal_weight_vector(I);
        if (wv) {
          result = {{"principal", true}, {"weights", wv->values()}};
          text = to_string(*wv) + "\n";
        } else {
          result = {{"principal", false}, {"weights", nullptr}};
          text = "not principally w-stable\n";
          code = exit_negative;
        }
      }
    }

    CliResult r;
    r.exit_code = code;
    if (o_.json) {
      json doc = {{"command", command},
                  {"input", o_.expression},
                  {"weights", weights_ && uses_weights(command) ? json(weights_->values()) : json(nullptr)},
                  {"result", result}};
      r.out = doc.dump(2) + "\n";
    } else {
      r.out = text;
    }
    return r;
  }

 private:
  /// Commands whose result depends on the weights (or that were asked to take
  /// a w-closure first).
  bool uses_weights(const std::string& command) const {
    const bool weight_free = command == "tree-ideal" || command == "cone" || command == "weight-vector";
    return !weight_free || o_.closure;
  }

  std::size_t inferred_nvars(std::size_t largest) const {
    if (o_.nvars) return *o_.nvars;
    if (weights_) return weights_->size();
    return largest;
  }

  Monomial monomial() {
    auto probe = parse_ideal(o_.expression);
    naming_ = probe.naming;
    auto n = inferred_nvars(probe.ideal.nvars());
    return parse_monomial(o_.expression, n);
  }

  MonomialIdeal ideal() {
    auto probe = parse_ideal(o_.expression);
    naming_ = probe.naming;
    return parse_ideal(o_.expression, inferred_nvars(probe.ideal.nvars())).ideal;
  }

  const WeightVector& weights(std::size_t n) {
    if (!weights_) weights_ = WeightVector::all_ones(n);
    return *weights_;
  }

  CliOptions o_;
  std::optional<WeightVector> weights_;
  Naming naming_ = Naming::indexed;
};

}  // namespace detail

inline const std::vector<std::pair<std::string, std::string>>& cli_commands() {
  static const std::vector<std::pair<std::string, std::string>> commands = {
      {"closure", "w-closure of the ideal generated by the input"},
      {"bgens", "weighted Borel generators of a w-stable ideal"},
      {"is-wstable", "decide w-stability (exit 3 when not w-stable)"},
      {"tree", "truncation tree of a monomial"},
      {"tree-ideal", "truncation tree of an ideal"},
      {"catalan", "weighted Catalan diagram of a monomial"},
      {"hilbert", "Hilbert series of S/I in the w-grading"},
      {"stanley", "Stanley decomposition of S/I"},
      {"poincare", "Poincare series of the minimal free resolution of I"},
      {"betti", "total and graded Betti numbers"},
      {"cone", "extreme rays of the principal cone of a strongly stable ideal"},
      {"weight-vector", "weights making the ideal principally w-stable (exit 3 when none)"},
  };
  return commands;
}

/// Runs one command line (without the program name). Output, diagnostics and
/// the exit code are returned rather than written, so tests can drive it.
inline CliResult run_cli(std::vector<std::string> args, std::istream& in) {
  CLI::App app{"Computations with w-stable monomial ideals", "wstable"};
  app.require_subcommand(1);
  detail::CliOptions opts;

  for (const auto& [name, help] : cli_commands()) {
    auto* sub = app.add_subcommand(name, help);
    const bool monomial_input = name == "tree" || name == "catalan";
    sub->add_option("expression", opts.expression, monomial_input ? "monomial, or - for stdin" : "generators, or - for stdin")
        ->required();
    sub->add_option("-w,--weights", opts.weights, "non-increasing positive weights, e.g. 3,2,1 (default all ones)");
    sub->add_option("-n,--nvars", opts.nvars, "number of variables")->check(CLI::PositiveNumber);
    sub->add_flag("--json", opts.json, "print a JSON document");
    if (name == "hilbert") sub->add_option("--expand-to", opts.expand_to, "print coefficients up to this degree")->check(CLI::NonNegativeNumber);
    if (name == "tree") sub->add_option("--bound", opts.bound, "degree bound (default deg_w of the monomial)");
    if (!monomial_input) sub->add_flag("--closure", opts.closure, "replace the input by its w-closure first");
  }

  CliResult r;
  std::ostringstream out, err;
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    r.exit_code = app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    detail::Dispatcher d(opts, in);
    return d.run(command);
  } catch (const ParseError& e) {
    r = {"", "error: " + std::string(e.what()) + "\n", exit_usage};
  } catch (const CLI::Error& e) {
    r = {"", "error: " + std::string(e.what()) + "\n", exit_usage};
  } catch (const DimensionError& e) {
    r = {"", "error: " + std::string(e.what()) + "\n", exit_usage};
  } catch (const ContractError& e) {
    r = {"", "error: " + std::string(e.what()) + "\n", exit_contract};
  } catch (const InternalError& e) {
    r = {"", "internal error: " + std::string(e.what()) + "\n", exit_internal};
  } catch (const std::overflow_error& e) {
    r = {"", "error: " + std::string(e.what()) + "\n", exit_usage};
  } catch (const std::invalid_argument& e) {
    r = {"", "error: " + std::string(e.what()) + "\n", exit_usage};
  }
  return r;
}

}  // namespace wstable
