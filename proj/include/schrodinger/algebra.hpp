#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "schrodinger/generator.hpp"
#include "schrodinger/scalar.hpp"

namespace schrodinger {

/// Exponent vector of the ordered product q^a f^b p^c e^d h^k z^l.
struct PbwMonomial {
  std::array<int, kGeneratorCount> exponents{};

  static PbwMonomial unit() { return {}; }
  static PbwMonomial of(Generator g, int exp = 1) {
    PbwMonomial m;
    m[g] = exp;
    return m;
  }

  int& operator[](Generator g) { return exponents[index_of(g)]; }
  int operator[](Generator g) const { return exponents[index_of(g)]; }

  /// Sum of exponents (negative exponents count negatively).
  int degree() const;
  bool is_unit() const;

  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

/// One factor g^exp of a word.
struct Letter {
  Generator gen;
  int exp = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Letters of a PBW monomial in PBW order, zero exponents omitted.
Word word_of(const PbwMonomial& m);

/// Element of U, U^(q) or U^(f) in the PBW basis. Zero coefficients are never
/// stored, so two elements are equal iff their term maps are equal.
class AlgebraElement {
 public:
  using Terms = std::map<PbwMonomial, Scalar>;

  explicit AlgebraElement(LocalizationMode mode = LocalizationMode::none) : mode_(mode) {}

  static AlgebraElement constant(const Scalar& c, LocalizationMode mode = LocalizationMode::none);
  static AlgebraElement generator(Generator g, LocalizationMode mode = LocalizationMode::none);
  /// Throws IllegalNegativeExponent if m is not a basis monomial of the mode.
  static AlgebraElement monomial(const PbwMonomial& m, const Scalar& c,
                                 LocalizationMode mode = LocalizationMode::none);

  LocalizationMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const PbwMonomial& m) const;

  /// Adds c·m; m must already be a valid basis monomial for the mode.
  void add_term(const PbwMonomial& m, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& s) { return a *= s; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

 private:
  LocalizationMode mode_;
  Terms terms_;
};

/// Structure constants: [a,b] = coeff·gen, or zero.
struct BracketEntry {
  int coeff = 0;
  Generator gen = Generator::z;
};
BracketEntry bracket_entry(Generator a, Generator b);

/// [a,b] in S as an element of U.
AlgebraElement bracket_table(Generator a, Generator b);

/// Product of the word in U^(mode), written in the PBW basis.
AlgebraElement normalize(std::span<const Letter> word,
                         LocalizationMode mode = LocalizationMode::none);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

/// a·b − b·a.
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// Integer power; negative powers only for the localized generator's monomial.
AlgebraElement power(const AlgebraElement& a, unsigned n);

inline constexpr std::size_t kDefaultAdIterationCap = 64;

/// Smallest n >= 0 with ad_s^n(target) = 0. Throws NotNilpotent past the cap.
std::size_t ad_nilpotency_index(Generator s, const AlgebraElement& target,
                                std::size_t cap = kDefaultAdIterationCap);

}  // namespace schrodinger
