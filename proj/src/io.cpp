#include "schrodinger/io.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "schrodinger/errors.hpp"

namespace schrodinger::io {

namespace {

class Parser {
 public:
  Parser(std::string_view src, LocalizationMode mode) : src_(src), mode_(mode), result_(mode) {}

  AlgebraElement parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign);
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      skip_ws();
      int s = op == '-' ? -1 : 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        if (peek() == '-') s = -s;
        ++pos_;
      }
      term(s);
    }
    return std::move(result_);
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  std::string digits() {
    skip_ws();
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Scalar rational(bool allow_sign) {
    skip_ws();
    std::string text;
    if (allow_sign && !at_end() && peek() == '-') {
      text = "-";
      ++pos_;
    }
    text += digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string den = digits();
      if (std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; })) {
        throw SyntaxError("zero denominator", at);
      }
      text += "/" + den;
    }
    return Scalar::parse(text);
  }

  Scalar coefficient() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Scalar c = rational(true);
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return c;
    }
    return rational(false);
  }

  int exponent() {
    skip_ws();
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw SyntaxError("exponent too large", at);
    int e = std::stoi(d);
    if (paren) {
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return negative ? -e : e;
  }

  Letter factor() {
    skip_ws();
    if (at_end()) fail("expected a generator");
    const auto g = generator_from_name(peek());
    if (!g) fail(std::string("unknown generator '") + peek() + "'");
    ++pos_;
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      fail("implicit multiplication is not allowed; use '*'");
    }
    skip_ws();
    int e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      e = exponent();
    }
    return {*g, e};
  }

  void term(int sign) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Scalar c(sign);
    Word word;
    bool need_factor = true;
    if (at_digit() || peek() == '(') {
      c *= coefficient();
      skip_ws();
      need_factor = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
      } else if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
        need_factor = true;
      }
    }
    if (need_factor) {
      word.push_back(factor());
      for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
        ++pos_;
        word.push_back(factor());
      }
    }
    result_ += normalize(word, mode_) * c;
  }

  std::string_view src_;
  LocalizationMode mode_;
  AlgebraElement result_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const PbwMonomial& m) {
  std::string out;
  for (Generator g : kGenerators) {
    const int e = m[g];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name_of(g);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

AlgebraElement parse_element(std::string_view src, LocalizationMode mode) {
  return Parser(src, mode).parse();
}

std::string print_element(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<PbwMonomial, Scalar>> terms(a.terms().begin(), a.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.degree();
    const int dy = y.first.degree();
    if (dx != dy) return dx > dy;
    return x.first.exponents > y.first.exponents;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c.sign() < 0;
    const Scalar mag = c.abs();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_unit()) {
      out += mag.str();
    } else if (mag == Scalar(1)) {
      out += monomial_text(m);
    } else {
      out += mag.str() + "*" + monomial_text(m);
    }
  }
  return out;
}

std::string print_vector(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : v.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += c.abs().str() + "·v(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
  }
  return out;
}

nlohmann::ordered_json to_json(const AxiomReport& report) {
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const AxiomViolation& v : report.violations) {
    nlohmann::ordered_json item;
    item["a"] = std::string(1, name_of(v.a));
    item["b"] = std::string(1, name_of(v.b));
    item["index"] = {v.index.i, v.index.j};
    item["defect"] = print_vector(v.defect);
    violations.push_back(std::move(item));
  }
  nlohmann::ordered_json j;
  j["pass"] = report.pass();
  j["violations"] = std::move(violations);
  return j;
}

nlohmann::ordered_json export_weight_diagram(const WeightReport& report, const AxiomReport* axioms) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(report.spec.family);
  doc["lambda"] = report.spec.lambda.fraction_str();
  doc["c"] = report.spec.c.fraction_str();
  doc["x"] = report.spec.x.fraction_str();
  doc["window"] = nlohmann::ordered_json{{"i_min", report.window.i_min},
                                         {"i_max", report.window.i_max}};
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const WeightEntry& e : report.support) {
    weights.push_back(nlohmann::ordered_json{{"weight", e.weight.fraction_str()}, {"dim", e.dim}});
  }
  doc["weights"] = std::move(weights);
  doc["axioms"] = axioms ? to_json(*axioms) : nlohmann::ordered_json(nullptr);
  return doc;
}

nlohmann::ordered_json to_json(const IsomorphismVerdict& verdict) {
  nlohmann::ordered_json j;
  j["isomorphic"] = verdict.isomorphic;
  j["shift"] = verdict.shift ? nlohmann::ordered_json(*verdict.shift) : nlohmann::ordered_json(nullptr);
  j["witness_verified"] = verdict.witness_verified;
  j["reason"] = verdict.reason;
  return j;
}

}  // namespace schrodinger::io
