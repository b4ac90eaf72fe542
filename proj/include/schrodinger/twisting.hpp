#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "schrodinger/algebra.hpp"

namespace schrodinger {

/// Parameters of the twisting automorphism of U^(u), u in {q, f}.
struct TwistSpec {
  Generator u = Generator::q;
  Scalar x;

  /// Throws std::invalid_argument unless u is q or f.
  LocalizationMode mode() const;
};

/// Image of a single generator power s^exp under the twist, as an element of
/// U^(u). Negative exponents are legal only for s = u.
AlgebraElement theta_letter(const TwistSpec& t, Letter l);

/// Multiplicative, linear extension of the generator formulas.
/// Throws ModeMismatch unless a lives in U^(t.u).
AlgebraElement theta(const TwistSpec& t, const AlgebraElement& a);

/// Each twisted generator image is at most quadratic in x, so a bracket
/// defect Θ_x([s1,s2]) - [Θ_x(s1), Θ_x(s2)] is a polynomial of degree at most
/// 2 + 2 = 4 in x. Vanishing at five distinct points forces it to be zero.
inline constexpr int kThetaDefectDegreeBound = 4;
inline constexpr std::size_t kMinThetaSamples = kThetaDefectDegreeBound + 1;

struct ThetaViolation {
  Letter first;
  Letter second;
  Scalar x;
  AlgebraElement defect;
};

struct ThetaHomomorphismReport {
  Generator u = Generator::q;
  std::vector<Scalar> samples;
  std::size_t checked = 0;
  std::vector<ThetaViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// The generators of U^(u) as letters: q, f, p, e, h, z and u^{-1}.
std::vector<Letter> localized_generators(Generator u);

/// Distinct rational sample points used for certification.
std::vector<Scalar> theta_sample_points(std::size_t count);

/// Checks Θ_x([s1,s2]) = [Θ_x(s1), Θ_x(s2)] for every unordered pair of
/// localized generators at sample_count distinct x. Throws
/// std::invalid_argument if sample_count < kMinThetaSamples.
ThetaHomomorphismReport verify_theta_homomorphism(Generator u, std::size_t sample_count);

struct AdditivityViolation {
  Scalar x;
  Scalar y;
  Letter generator;
  AlgebraElement lhs;
  AlgebraElement rhs;
};

struct ThetaAdditivityReport {
  Generator u = Generator::q;
  std::size_t checked = 0;
  std::vector<AdditivityViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Checks Θ_x(Θ_y(g)) = Θ_{x+y}(g) for every localized generator g.
ThetaAdditivityReport verify_theta_additivity(Generator u,
                                              const std::vector<std::pair<Scalar, Scalar>>& xs);

}  // namespace schrodinger
