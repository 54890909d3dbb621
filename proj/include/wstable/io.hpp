#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wstable/catalan.hpp"
#include "wstable/cone.hpp"
#include "wstable/ideal.hpp"
#include "wstable/monomial.hpp"
#include "wstable/series.hpp"
#include "wstable/tree.hpp"

namespace wstable {

/// Variable spelling: x1 .. xn (also x_1), or x, y, z for at most three
/// variables.
enum class Naming { indexed, letters };

enum class ParseErrorKind {
  syntax,
  unknown_variable,
  malformed_exponent,
  non_positive_weight,
  non_monotone_weights,
};

inline const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::syntax: return "syntax error";
    case ParseErrorKind::unknown_variable: return "unknown variable";
    case ParseErrorKind::malformed_exponent: return "malformed exponent";
    case ParseErrorKind::non_positive_weight: return "non-positive weight";
    case ParseErrorKind::non_monotone_weights: return "weights are not non-increasing";
  }
  return "parse error";
}

class ParseError : public std::invalid_argument {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail)
      : std::invalid_argument(std::string(to_string(kind)) + " at position " + std::to_string(position) +
                              (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        position_(position) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 0-based character offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

struct IdealExpression {
  std::string source;
  MonomialIdeal ideal;
  Naming naming = Naming::indexed;
};

namespace detail {

struct Factor {
  std::size_t var;  // 1-based
  Exponent exponent;
  std::size_t position;
};

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  /// Comma-separated list of monomials, optionally wrapped as ideal(...) or (...).
  std::vector<std::vector<Factor>> parse_list() {
    std::vector<std::vector<Factor>> out;
    skip_ws();
    bool wrapped = false;
    if (s_.substr(pos_, 5) == "ideal") {
      pos_ += 5;
      skip_ws();
      expect('(');
      wrapped = true;
    } else if (peek() == '(') {
      ++pos_;
      wrapped = true;
    }
    skip_ws();
    if (wrapped ? peek() == ')' : at_end()) {
      if (wrapped) ++pos_;
      finish();
      return out;
    }
    if (peek() == '0') {
      std::size_t at = pos_++;
      skip_ws();
      if (wrapped ? peek() == ')' : at_end()) {
        if (wrapped) ++pos_;
        finish();
        return out;
      }
      pos_ = at;
    }
    while (true) {
      out.push_back(parse_product());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (wrapped) expect(')');
    finish();
    return out;
  }

  std::vector<Factor> parse_single() {
    skip_ws();
    auto f = parse_product();
    finish();
    return f;
  }

  std::optional<Naming> naming() const { return naming_; }

 private:
  std::vector<Factor> parse_product() {
    std::vector<Factor> out;
    while (true) {
      skip_ws();
      parse_factor(out);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      return out;
    }
  }

  void parse_factor(std::vector<Factor>& out) {
    const std::size_t start = pos_;
    if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError(ParseErrorKind::syntax, pos_, at_end() ? "expected a variable" : "unexpected character");
    std::string ident;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ident += s_[pos_++];
    std::size_t var = resolve(ident, start);
    Exponent e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t epos = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(ParseErrorKind::malformed_exponent, epos, "expected a non-negative integer");
      e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        if (e > (std::numeric_limits<Exponent>::max() - 9) / 10)
          throw ParseError(ParseErrorKind::malformed_exponent, epos, "exponent too large");
        e = e * 10 + (s_[pos_++] - '0');
      }
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '.')
        throw ParseError(ParseErrorKind::malformed_exponent, epos, "expected a non-negative integer");
    }
    out.push_back({var, e, start});
  }

  std::size_t resolve(const std::string& ident, std::size_t at) {
    std::optional<std::size_t> indexed;
    if (ident.size() >= 2 && ident[0] == 'x') {
      std::string digits = ident.substr(ident[1] == '_' ? 2 : 1);
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
          digits.size() < 9)
        indexed = std::stoul(digits);
    }
    std::optional<std::size_t> letter;
    if (ident == "x") letter = 1;
    if (ident == "y") letter = 2;
    if (ident == "z") letter = 3;
    if (!naming_) naming_ = indexed ? Naming::indexed : Naming::letters;
    if (*naming_ == Naming::indexed && indexed && *indexed >= 1) return *indexed;
    if (*naming_ == Naming::letters && letter) return *letter;
    throw ParseError(ParseErrorKind::unknown_variable, at, "'" + ident + "'");
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(ParseErrorKind::syntax, pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  void finish() {
    skip_ws();
    if (!at_end()) throw ParseError(ParseErrorKind::syntax, pos_, "unexpected trailing input");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<Naming> naming_;
};

inline Monomial build_monomial(const std::vector<Factor>& fs, std::size_t n, std::string_view text) {
  std::vector<Exponent> e(n, 0);
  for (const auto& f : fs) {
    if (f.var > n)
      throw ParseError(ParseErrorKind::unknown_variable, f.position,
                       "variable index " + std::to_string(f.var) + " exceeds " + std::to_string(n) + " variables in '" +
                           std::string(text) + "'");
    e[f.var - 1] = checked_add(e[f.var - 1], f.exponent);
  }
  return Monomial(std::move(e));
}

inline std::size_t largest_var(const std::vector<std::vector<Factor>>& list) {
  std::size_t n = 1;
  for (const auto& fs : list)
    for (const auto& f : fs) n = std::max(n, f.var);
  return n;
}

}  // namespace detail

/// Parses "x1^2*x2", "x^2*y" or "1". Without nvars the ring has as many
/// variables as the largest index used.
inline Monomial parse_monomial(std::string_view text, std::optional<std::size_t> nvars = std::nullopt) {
  detail::ExpressionParser p(text);
  auto fs = p.parse_single();
  return detail::build_monomial(fs, nvars.value_or(detail::largest_var({fs})), text);
}

/// Parses a comma-separated generator list, optionally wrapped in ideal(...).
inline IdealExpression parse_ideal(std::string_view text, std::optional<std::size_t> nvars = std::nullopt) {
  detail::ExpressionParser p(text);
  auto list = p.parse_list();
  const std::size_t n = nvars.value_or(detail::largest_var(list));
  std::vector<Monomial> gens;
  for (const auto& fs : list) gens.push_back(detail::build_monomial(fs, n, text));
  return IdealExpression{std::string(text), MonomialIdeal(n, gens), p.naming().value_or(Naming::indexed)};
}

/// Parses "3,2,1" (optionally in braces, brackets or parentheses).
inline WeightVector parse_weights(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  char close = 0;
  if (pos < text.size() && (text[pos] == '{' || text[pos] == '(' || text[pos] == '[')) {
    close = text[pos] == '{' ? '}' : text[pos] == '(' ? ')' : ']';
    ++pos;
  }
  std::vector<Degree> w;
  while (true) {
    skip_ws();
    const std::size_t at = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(ParseErrorKind::syntax, pos, "expected an integer weight");
    Degree v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > (std::numeric_limits<Degree>::max() - 9) / 10)
        throw ParseError(ParseErrorKind::syntax, at, "weight too large");
      v = v * 10 + (text[pos++] - '0');
    }
    if (negative || v == 0) throw ParseError(ParseErrorKind::non_positive_weight, at, "weights must be positive");
    if (!w.empty() && w.back() < v)
      throw ParseError(ParseErrorKind::non_monotone_weights, at, "weights must be non-increasing");
    w.push_back(v);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (close) {
    if (pos >= text.size() || text[pos] != close)
      throw ParseError(ParseErrorKind::syntax, pos, std::string("expected '") + close + "'");
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) throw ParseError(ParseErrorKind::syntax, pos, "unexpected trailing input");
  return WeightVector(std::move(w));
}

// ---------------------------------------------------------------------------
// Printing

inline std::string variable_name(std::size_t pos, std::size_t nvars, Naming naming) {
  if (naming == Naming::letters && nvars <= 3) return std::string(1, "xyz"[pos]);
  return "x" + std::to_string(pos + 1);
}

inline std::string to_string(const Monomial& m, Naming naming = Naming::indexed) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, m.nvars(), naming);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string to_string(const MonomialIdeal& I, Naming naming = Naming::indexed) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, naming);
  }
  return out;
}

inline std::string to_string(const WeightVector& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

/// Adjacency list, one line per vertex in breadth-first order: "v: c1 c2".
inline std::string render_tree(const TruncationTree& t, Naming naming = Naming::indexed) {
  std::ostringstream os;
  for (const auto& node : t.nodes()) {
    os << to_string(node.vertex, naming) << ':';
    for (auto c : node.children) os << ' ' << to_string(t.nodes()[c].vertex, naming);
    os << '\n';
  }
  return os.str();
}

/// Matrix rows "| 1 0 0 |" with right-aligned columns.
inline std::string render_catalan(const CatalanDiagram& c) {
  std::vector<std::size_t> width(c.columns(), 1);
  for (const auto& row : c.entries)
    for (std::size_t b = 0; b < row.size(); ++b) width[b] = std::max(width[b], row[b].str().size());
  std::ostringstream os;
  for (const auto& row : c.entries) {
    os << '|';
    for (std::size_t b = 0; b < row.size(); ++b) {
      auto s = row[b].str();
      os << ' ' << std::string(width[b] - s.size(), ' ') << s;
    }
    os << " |\n";
  }
  return os.str();
}

namespace detail {

inline std::string power(const char* var, Degree k) {
  if (k == 0) return "";
  return k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
}

/// Appends "+ c*mono" / "- c*mono" to a term list.
inline void append_term(std::string& out, const Integer& c, const std::string& mono) {
  Integer mag = abs(c);
  std::string body = mono.empty() ? mag.str() : (mag == 1 ? mono : mag.str() + "*" + mono);
  if (out.empty()) out = (c < 0 ? "-" : "") + body;
  else out += (c < 0 ? " - " : " + ") + body;
}

}  // namespace detail

/// Descending-degree term list, e.g. "t^4 - 2*t^3 + 1".
inline std::string render_polynomial(const Polynomial& p, const char* var = "t") {
  std::string out;
  for (Degree k = p.degree(); k >= 0; --k)
    if (p.coefficient(k) != 0) detail::append_term(out, p.coefficient(k), detail::power(var, k));
  return out.empty() ? "0" : out;
}

/// e.g. "2*t^12*u^3 + t^11*u^2 + ... + 3*t^7*u", by t-degree then u-degree,
/// both descending.
inline std::string render_poincare(const PoincarePolynomial& p) {
  std::vector<std::pair<PoincarePolynomial::Key, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [key, c] : terms) {
    std::string mono = detail::power("t", key.second);
    std::string u = detail::power("u", static_cast<Degree>(key.first));
    if (!u.empty()) mono = mono.empty() ? u : mono + "*" + u;
    detail::append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

inline std::string render_hilbert(const HilbertSeries& hs) {
  std::string den;
  for (std::size_t j = 0; j < hs.weights.size(); ++j) {
    if (!den.empty()) den += "*";
    den += "(1 - " + detail::power("t", hs.weights[j]) + ")";
  }
  std::string out = "(" + render_polynomial(hs.numerator) + ")";
  if (!den.empty()) out += " / (" + den + ")";
  return out;
}

/// Per-degree form sum_s c_s t^s / prod_{j > k_s} (1 - t^{w_j}); empty when the
/// series carries no term list.
inline std::string render_hilbert_terms(const HilbertSeries& hs) {
  std::string out;
  for (const auto& term : hs.terms) {
    std::string num = detail::power("t", term.degree);
    num = num.empty() ? term.count.str() : (term.count == 1 ? num : term.count.str() + "*" + num);
    std::string den;
    const std::size_t factors = hs.weights.size() - term.last_bound_var;
    for (std::size_t j = term.last_bound_var; j < hs.weights.size(); ++j) {
      if (!den.empty()) den += "*";
      den += "(1 - " + detail::power("t", hs.weights[j]) + ")";
    }
    if (factors > 1) den = "(" + den + ")";
    if (!out.empty()) out += " + ";
    out += den.empty() ? num : num + "/" + den;
  }
  return out;
}

inline std::string render_stanley(const StanleyDecomposition& sd, Naming naming = Naming::indexed) {
  std::ostringstream os;
  for (const auto& p : sd.pieces) {
    os << to_string(p.coset, naming) << " * K[";
    for (std::size_t i = 0; i < p.free_vars.size(); ++i)
      os << (i ? ", " : "") << variable_name(p.free_vars[i], sd.nvars, naming);
    os << "]\n";
  }
  return os.str();
}

/// Betti table of S/I in the customary layout: column i lists
/// beta_{i, i+r} in row r, column 0 holds the free module S. Column i >= 1 of
/// the table is homological index i of I.
inline std::string render_betti_table(const BettiNumbers& b) {
  std::size_t cols = 1;
  for (std::size_t i = 0; i < b.totals.size(); ++i)
    if (b.totals[i] != 0) cols = i + 2;
  Degree rows = 1;
  for (const auto& [key, v] : b.graded.terms()) rows = std::max(rows, key.second - static_cast<Degree>(key.first) + 1);

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> labels;
  auto cell = [](const Integer& v) { return v == 0 ? std::string(".") : v.str(); };
  {
    std::vector<std::string> head;
    for (std::size_t i = 0; i < cols; ++i) head.push_back(std::to_string(i));
    grid.push_back(head);
    labels.push_back("");
  }
  {
    std::vector<std::string> total{"1"};
    for (std::size_t i = 1; i < cols; ++i) total.push_back(b.totals[i - 1].str());
    grid.push_back(total);
    labels.push_back("total:");
  }
  for (Degree r = 0; r < rows; ++r) {
    std::vector<std::string> row{r == 0 ? "1" : "."};
    for (std::size_t i = 1; i < cols; ++i) row.push_back(cell(b.graded.beta(i, r + static_cast<Degree>(i))));
    grid.push_back(row);
    labels.push_back(std::to_string(r) + ":");
  }
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());
  std::vector<std::size_t> cw(cols, 1);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < cols; ++i) cw[i] = std::max(cw[i], row[i].size());
  std::ostringstream os;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line = std::string(lw - labels[r].size(), ' ') + labels[r];
    for (std::size_t i = 0; i < cols; ++i) line += " " + std::string(cw[i] - grid[r][i].size(), ' ') + grid[r][i];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

inline std::string render_rays(const Cone& c) {
  std::ostringstream os;
  for (const auto& r : c.rays) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace wstable
