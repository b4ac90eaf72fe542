#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schrodinger/module.hpp"

namespace schrodinger {

/// Generator action used by the axiom checker. Defaults to the module's own
/// tables; tests substitute corrupted tables here.
using GeneratorAction = std::function<ModuleVector(Generator, const ModuleVector&)>;

struct AxiomViolation {
  Generator a;
  Generator b;
  BasisIndex index;
  ModuleVector defect;  // a(b v) - b(a v) - [a,b] v
};

struct AxiomReport {
  std::size_t checked_pairs = 0;  // (generator pair, basis vector) combinations
  Window window;
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Bracket compatibility of the action for all 15 generator pairs on every
/// basis vector of the window. Throws std::invalid_argument on an empty window.
AxiomReport check_axioms(const WeightModule& module, const Window& window);
AxiomReport check_axioms(const WeightModule& module, const Window& window,
                         const GeneratorAction& action);

struct WeightEntry {
  Scalar weight;
  long dim = 0;        // window basis vectors of this weight
  bool interior = false;
};

struct WeightReport {
  ModuleSpec spec;
  Window window;
  std::vector<WeightEntry> support;  // ascending by weight
};

WeightReport weight_report(const WeightModule& module, const Window& window);

/// Kernel of s (e or p) on the weight space. Throws WindowTooSmall if the
/// weight space lies outside the window.
std::vector<ModuleVector> singular_vectors(const WeightModule& module, const Scalar& weight,
                                           Generator s, const Window& window);

/// Vectors of the weight space killed by s^max_power (hence by some s^n with
/// n <= max_power). Throws WindowTooSmall if s^max_power leaves the window.
std::vector<ModuleVector> nilpotent_part(const WeightModule& module, Generator s,
                                         const Scalar& weight, int max_power,
                                         const Window& window);

struct SimplicityReport {
  bool pass = false;
  /// Set when the module is known not to be simple without probing.
  std::optional<std::string> structural_flag;
  bool probe_pass = false;
  std::size_t starts_checked = 0;
  std::optional<BasisIndex> failed_start;
  std::optional<Scalar> unreached_weight;
  /// Simplicity is only ever certified relative to the window.
  static constexpr const char* kCertification = "window-certified";
};

/// For each basis vector of the window, grows the submodule it generates
/// (restricted to the window's weights) and checks that it fills every
/// interior weight space. Throws WindowTooSmall if the interior is empty.
SimplicityReport simplicity_probe(const WeightModule& module, const Window& window);

struct ActionMismatch {
  Generator g;
  BasisIndex index;
};

struct ActionComparison {
  std::size_t checked = 0;
  std::vector<ActionMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Generator-by-generator equality of two actions on a's window basis.
ActionComparison compare_actions(const WeightModule& a, const WeightModule& b,
                                 const Window& window);

/// Φ(g v) = g Φ(v) for every generator and window basis vector of the source.
ActionComparison verify_intertwining(const ShiftIsomorphism& phi, const Window& window);

struct IsomorphismVerdict {
  bool isomorphic = false;
  std::optional<long> shift;  // witness n of the map v_{i+n,j} ↦ v_{i,j}
  bool witness_verified = false;
  std::string reason;
};

inline constexpr Window kDefaultWindow{-8, 8};

/// Decides B_{x1}^(q)(N(λ,c)) ≅ B_{x2}^(q)(N(λ',c')). Throws
/// std::invalid_argument unless both specs are B_q.
IsomorphismVerdict classify_isomorphism(const ModuleSpec& a, const ModuleSpec& b,
                                        const Window& window = kDefaultWindow);

}  // namespace schrodinger
