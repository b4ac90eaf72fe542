#include "schrodinger/twisting.hpp"

#include <stdexcept>
#include <string>

#include "schrodinger/errors.hpp"

namespace schrodinger {

LocalizationMode TwistSpec::mode() const {
  auto m = mode_localizing(u);
  if (!m) throw std::invalid_argument(std::string("cannot twist with respect to ") + name_of(u));
  return *m;
}

namespace {

AlgebraElement word_term(const Scalar& c, std::initializer_list<Letter> letters,
                         LocalizationMode mode) {
  const Word w(letters);
  return normalize(w, mode) * c;
}

// Image of a single generator (exponent 1).
AlgebraElement generator_image(const TwistSpec& t, Generator s) {
  using G = Generator;
  const LocalizationMode mode = t.mode();
  const Scalar& x = t.x;
  AlgebraElement img = AlgebraElement::generator(s, mode);
  if (t.u == G::q) {
    switch (s) {
      case G::h:
        img -= AlgebraElement::constant(x, mode);
        break;
      case G::p:
        img += word_term(x, {{G::q, -1}, {G::z, 1}}, mode);
        break;
      case G::e:
        img += word_term(x, {{G::q, -1}, {G::p, 1}}, mode);
        img += word_term(Scalar(1, 2) * x * (x - Scalar(1)), {{G::q, -2}, {G::z, 1}}, mode);
        break;
      default:
        break;
    }
  } else {
    switch (s) {
      case G::h:
        img -= AlgebraElement::constant(Scalar(2) * x, mode);
        break;
      case G::p:
        img -= word_term(x, {{G::q, 1}, {G::f, -1}}, mode);
        break;
      case G::e:
        // x(h - 1 - x) f^{-1}
        img += word_term(x, {{G::h, 1}, {G::f, -1}}, mode);
        img -= word_term(x * (Scalar(1) + x), {{G::f, -1}}, mode);
        break;
      default:
        break;
    }
  }
  return img;
}

}  // namespace

AlgebraElement theta_letter(const TwistSpec& t, Letter l) {
  const LocalizationMode mode = t.mode();
  if (l.exp < 0 && l.gen != t.u) {
    throw IllegalNegativeExponent(std::string("negative exponent on ") + name_of(l.gen));
  }
  // Θ fixes u^{±1}, and also f (resp. q) for the q- (resp. f-) twist.
  if (l.gen == Generator::q || l.gen == Generator::f || l.gen == Generator::z) {
    return normalize(Word{l}, mode);
  }
  return power(generator_image(t, l.gen), static_cast<unsigned>(l.exp));
}

AlgebraElement theta(const TwistSpec& t, const AlgebraElement& a) {
  const LocalizationMode mode = t.mode();
  if (a.mode() != mode) {
    throw ModeMismatch("twist by " + std::string(1, name_of(t.u)) + " applied in mode " +
                       std::string(name_of(a.mode())));
  }
  AlgebraElement r(mode);
  for (const auto& [m, c] : a.terms()) {
    AlgebraElement img = AlgebraElement::constant(c, mode);
    for (const Letter& l : word_of(m)) img = multiply(img, theta_letter(t, l));
    r += img;
  }
  return r;
}

std::vector<Letter> localized_generators(Generator u) {
  std::vector<Letter> gens;
  for (Generator g : kGenerators) gens.push_back({g, 1});
  gens.push_back({u, -1});
  return gens;
}

std::vector<Scalar> theta_sample_points(std::size_t count) {
  // 0, -1, 1/2, 1, -2, -2/3, 2, -3, 3/4, ... all distinct.
  std::vector<Scalar> xs;
  xs.reserve(count);
  for (std::size_t k = 0; xs.size() < count; ++k) {
    const long n = static_cast<long>(k);
    switch (k % 3) {
      case 0: xs.emplace_back(n / 3); break;
      case 1: xs.emplace_back(-(n / 3 + 1)); break;
      default: xs.push_back(Scalar(n / 3 + 1, n / 3 + 2) * Scalar(n % 2 == 0 ? 1 : -1)); break;
    }
  }
  return xs;
}

ThetaHomomorphismReport verify_theta_homomorphism(Generator u, std::size_t sample_count) {
  if (sample_count < kMinThetaSamples) {
    throw std::invalid_argument("at least " + std::to_string(kMinThetaSamples) +
                                " sample points are needed to certify a degree-" +
                                std::to_string(kThetaDefectDegreeBound) + " identity");
  }
  ThetaHomomorphismReport report;
  report.u = u;
  report.samples = theta_sample_points(sample_count);
  const std::vector<Letter> gens = localized_generators(u);
  const LocalizationMode mode = *mode_localizing(u);

  for (const Scalar& x : report.samples) {
    const TwistSpec t{u, x};
    std::vector<AlgebraElement> images;
    images.reserve(gens.size());
    for (const Letter& g : gens) images.push_back(theta_letter(t, g));
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        const AlgebraElement sa = normalize(Word{gens[a]}, mode);
        const AlgebraElement sb = normalize(Word{gens[b]}, mode);
        AlgebraElement defect = theta(t, bracket(sa, sb)) - bracket(images[a], images[b]);
        ++report.checked;
        if (!defect.is_zero()) {
          report.violations.push_back({gens[a], gens[b], x, std::move(defect)});
        }
      }
    }
  }
  return report;
}

ThetaAdditivityReport verify_theta_additivity(
    Generator u, const std::vector<std::pair<Scalar, Scalar>>& xs) {
  ThetaAdditivityReport report;
  report.u = u;
  for (const auto& [x, y] : xs) {
    const TwistSpec tx{u, x};
    const TwistSpec ty{u, y};
    const TwistSpec txy{u, x + y};
    for (const Letter& g : localized_generators(u)) {
      AlgebraElement lhs = theta(tx, theta_letter(ty, g));
      AlgebraElement rhs = theta_letter(txy, g);
      ++report.checked;
      if (lhs != rhs) report.violations.push_back({x, y, g, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

}  // namespace schrodinger
