#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schrodinger/algebra.hpp"
#include "schrodinger/scalar.hpp"

namespace schrodinger {

enum class Family {
  VermaQuotientM,  // M(λ,c)
  TopRowN,         // N(λ,c)
  TwistedB_q,      // B_x^(q)(N(λ,c)), explicit tables
  GenericTwist,    // any base twisted by Θ_x^(u)
};

std::string family_name(Family f);

/// Names one concrete module. Construct through the factories, which enforce
/// the parameter ranges and throw InvalidSpec otherwise.
struct ModuleSpec {
  Family family = Family::TwistedB_q;
  Scalar lambda;
  Scalar c{1};
  Scalar x;
  std::shared_ptr<const ModuleSpec> base;  // GenericTwist only
  Generator twist_u = Generator::q;        // GenericTwist only

  /// λ ∉ -1/2 + ℕ, c ≠ 0.
  static ModuleSpec verma_quotient(const Scalar& lambda, const Scalar& c);
  /// λ ∈ -1/2 + ℕ, c ≠ 0.
  static ModuleSpec top_row(const Scalar& lambda, const Scalar& c);
  /// λ ∈ -1/2 + ℕ, c ≠ 0, any rational x.
  static ModuleSpec twisted_bq(const Scalar& lambda, const Scalar& c, const Scalar& x);

  /// Innermost non-twist spec.
  const ModuleSpec& root() const;

  /// λ + 1/2, the index of the top row, for families built on N(λ,c).
  std::optional<long> top_row_index() const;

  friend bool operator==(const ModuleSpec& a, const ModuleSpec& b);
};

/// Module obtained by twisting the action of `base` by Θ_x^(u).
ModuleSpec twist_module(const ModuleSpec& base, Generator u, const Scalar& x);

/// True iff λ + 1/2 is a nonnegative integer.
bool is_top_row_weight(const Scalar& lambda);

/// B_q spec with x reduced to x - floor(x) ∈ [0, 1).
ModuleSpec canonicalize(const ModuleSpec& spec);

/// B_q with 0 < x < 1, the representative used by the classification.
bool is_classification_representative(const ModuleSpec& spec);

struct BasisIndex {
  long i = 0;
  long j = 0;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Finite linear combination of basis vectors v_{i,j}. The module it lives in
/// is carried by the caller.
class ModuleVector {
 public:
  using Terms = std::map<BasisIndex, Scalar>;

  ModuleVector() = default;
  static ModuleVector basis(BasisIndex b, const Scalar& c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(BasisIndex b) const;
  void add_term(BasisIndex b, const Scalar& c);

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Scalar& s);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Scalar& s, ModuleVector a) { return a *= s; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  Terms terms_;
};

/// Finite truncation of the index set: i ∈ [i_min, i_max]. For M(λ,c) the
/// window is the depth bound i + 2j <= i_max and i_min is ignored. A window
/// with i_min > i_max is empty.
struct Window {
  long i_min = -8;
  long i_max = 8;
  bool empty() const { return i_min > i_max; }
};

/// Basis vectors are graded by level n = i + 2j; weight = top_weight - n.
/// A bound is "truncated" when it comes from the window rather than from the
/// module itself.
struct LevelRange {
  long lo = 0;
  long hi = -1;
  bool lo_truncated = true;
  bool hi_truncated = true;
  bool empty() const { return lo > hi; }
  bool contains(long n) const { return n >= lo && n <= hi; }
};

/// Level change caused by applying g (the negative of its weight shift).
int level_shift(Generator g);

/// A module realized by its action formulas. Copies share the inverse cache;
/// all methods are safe to call concurrently (the cache is mutex-guarded).
class WeightModule {
 public:
  explicit WeightModule(ModuleSpec spec);

  const ModuleSpec& spec() const;

  bool contains(BasisIndex b) const;
  static long level(BasisIndex b) { return b.i + 2 * b.j; }
  Scalar top_weight() const;
  Scalar weight(BasisIndex b) const { return top_weight() - Scalar(level(b)); }
  std::optional<long> level_of(const Scalar& weight) const;

  /// Basis of the (finite-dimensional) weight space at level n, sorted.
  std::vector<BasisIndex> level_basis(long n) const;
  std::vector<BasisIndex> weight_basis(const Scalar& weight) const;

  /// Basis vectors inside the window, sorted.
  std::vector<BasisIndex> window_basis(const Window& w) const;
  LevelRange level_range(const Window& w) const;
  /// Distance kept from truncated window edges: 2(λ + 3/2) on N-based
  /// modules, 2 on M(λ,c).
  long margin() const;
  /// Levels at distance >= margin() from every truncated edge.
  LevelRange interior(const Window& w) const;

  ModuleVector act(Generator g, const ModuleVector& v) const;
  /// Applies a PBW element monomial by monomial, rightmost factor first.
  /// Negative powers use act_inverse.
  ModuleVector act(const AlgebraElement& a, const ModuleVector& v) const;
  /// u^{-1} v for u in {q, f}. Throws NonInvertibleAction on modules where u
  /// is not bijective and SingularAction if a weight-space solve fails.
  ModuleVector act_inverse(Generator u, const ModuleVector& v) const;

  /// Matrix of g from level `from` to level `from + level_shift(g)` in the
  /// level bases.
  std::vector<std::vector<Scalar>> level_matrix(Generator g, long from) const;

  /// Coordinates of a vector supported on level n in level_basis(n).
  std::vector<Scalar> coordinates(const ModuleVector& v, long n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Preimage of w under u, computed by an exact solve between the two weight
/// spaces involved. w must be supported on a single weight. Throws
/// WindowTooSmall if either weight space lies outside the window and
/// SingularAction if u is not bijective between them.
ModuleVector invert_generator_on_weight_space(Generator u, const WeightModule& module,
                                              const ModuleVector& w, const Window& window);

/// The basis map v_{i+n,j} ↦ v_{i,j} from B_x^(q)(N(λ,c)) to B_{x+n}^(q)(N(λ,c)).
struct ShiftIsomorphism {
  long n = 0;
  ModuleSpec source;
  ModuleSpec target;

  ModuleVector apply(const ModuleVector& v) const;
};

ShiftIsomorphism shift_isomorphism(const ModuleSpec& spec, long n);

}  // namespace schrodinger
