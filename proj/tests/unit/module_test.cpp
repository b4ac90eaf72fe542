#include <doctest.h>

#include <thread>

#include "schrodinger/analysis.hpp"
#include "schrodinger/errors.hpp"
#include "schrodinger/io.hpp"
#include "schrodinger/module.hpp"
#include "support/test_support.hpp"

using namespace schrodinger;
using testing_support::Rng;

namespace {

ModuleVector v(long i, long j, const Scalar& c = Scalar(1)) { return ModuleVector::basis({i, j}, c); }

// Direct transcription of the B_q action tables for J = 0 and J = 1, kept
// separate from the library's general-J implementation.
ModuleVector small_bq_oracle(const Scalar& lambda, const Scalar& c, const Scalar& x, Generator g,
                             BasisIndex b) {
  const Scalar t = Scalar(b.i) + x;
  const long J = *(lambda + Scalar(1, 2)).to_long();
  const Scalar j(b.j);
  ModuleVector out;
  switch (g) {
    case Generator::q: return v(b.i + 1, b.j);
    case Generator::z: return v(b.i, b.j, c);
    case Generator::h: return v(b.i, b.j, lambda - t - Scalar(2) * j);
    case Generator::p:
      out.add_term({b.i + 1, b.j - 1}, -j);
      out.add_term({b.i - 1, b.j}, c * t);
      return out;
    case Generator::e:
      out.add_term({b.i, b.j - 1}, j * (lambda + Scalar(1) - t - j));
      out.add_term({b.i - 2, b.j}, c * t * (t - Scalar(1)) / Scalar(2));
      return out;
    case Generator::f:
      if (b.j < J) return v(b.i, b.j + 1);
      if (J == 0) return v(b.i + 2, 0, Scalar(-1) / (Scalar(2) * c));
      // J = 1: -(1/(4c^2) v_{i+4,0} + 2/(2c) v_{i+2,1})
      out.add_term({b.i + 4, 0}, Scalar(-1) / (Scalar(4) * c * c));
      out.add_term({b.i + 2, 1}, Scalar(-1) / c);
      return out;
  }
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ModuleSpec::top_row(Scalar(0), 1), InvalidSpec);
  CHECK_THROWS_AS(ModuleSpec::top_row(Scalar(-3, 2), 1), InvalidSpec);
  CHECK_THROWS_AS(ModuleSpec::verma_quotient(Scalar(1, 2), 1), InvalidSpec);
  CHECK_THROWS_AS(ModuleSpec::twisted_bq(Scalar(1, 2), 0, Scalar(1, 3)), InvalidSpec);
  CHECK_NOTHROW(ModuleSpec::verma_quotient(Scalar(-3, 2), 1));
  CHECK_THROWS_AS(twist_module(ModuleSpec::top_row(Scalar(1, 2), 1), Generator::p, 1), InvalidSpec);
}

TEST_CASE("canonical representatives") {
  const ModuleSpec s = ModuleSpec::twisted_bq(Scalar(1, 2), 2, Scalar(7, 3));
  CHECK(canonicalize(s).x == Scalar(1, 3));
  CHECK(canonicalize(ModuleSpec::twisted_bq(Scalar(1, 2), 2, Scalar(-1, 3))).x == Scalar(2, 3));
  CHECK(is_classification_representative(canonicalize(s)));
  CHECK_FALSE(is_classification_representative(ModuleSpec::twisted_bq(Scalar(1, 2), 2, 0)));
  CHECK(is_top_row_weight(Scalar(5, 2)));
  CHECK_FALSE(is_top_row_weight(Scalar(1, 3)));
}

TEST_CASE("B_q tables match a direct transcription for J = 0 and J = 1") {
  for (const Scalar& lambda : {Scalar(-1, 2), Scalar(1, 2)}) {
    for (const Scalar& c : {Scalar(1), Scalar(-3)}) {
      const Scalar x(2, 7);
      const WeightModule m(ModuleSpec::twisted_bq(lambda, c, x));
      for (BasisIndex b : m.window_basis({-3, 3})) {
        for (Generator g : kGenerators) {
          CHECK(m.act(g, ModuleVector::basis(b)) == small_bq_oracle(lambda, c, x, g, b));
        }
      }
    }
  }
}

TEST_CASE("weights and levels") {
  const WeightModule m(ModuleSpec::twisted_bq(Scalar(3, 2), 1, Scalar(1, 3)));
  CHECK(m.weight({0, 0}) == Scalar(3, 2) - Scalar(1, 3));
  CHECK(m.weight({2, 1}) == m.top_weight() - Scalar(4));
  CHECK(m.level_basis(4).size() == 3);
  CHECK(m.level_of(m.top_weight() - Scalar(5)) == 5);
  CHECK_FALSE(m.level_of(Scalar(0)).has_value());
  for (BasisIndex b : m.window_basis({-2, 2})) {
    CHECK(m.act(Generator::h, ModuleVector::basis(b)) == ModuleVector::basis(b, m.weight(b)));
  }
}

TEST_CASE("f-inverse on the one-row twisted module") {
  for (const Scalar& c : {Scalar(1), Scalar(2), Scalar(-3)}) {
    const WeightModule m(ModuleSpec::twisted_bq(Scalar(-1, 2), c, Scalar(1, 2)));
    for (long i = -4; i <= 4; ++i) {
      CHECK(m.act_inverse(Generator::f, v(i, 0)) == v(i - 2, 0, Scalar(-2) * c));
      CHECK(invert_generator_on_weight_space(Generator::f, m, v(i, 0), {-8, 8}) ==
            v(i - 2, 0, Scalar(-2) * c));
    }
  }
}

TEST_CASE("inverses undo the action") {
  Rng rng(41);
  for (const ModuleSpec& spec : testing_support::bq_grid()) {
    const WeightModule m(spec);
    for (int trial = 0; trial < 4; ++trial) {
      const long i = rng.uniform(-5, 5);
      const long j = rng.uniform(0, *spec.top_row_index());
      for (Generator u : {Generator::q, Generator::f}) {
        const ModuleVector w = v(i, j, rng.nonzero_rational(5, 3));
        CHECK(m.act(u, m.act_inverse(u, w)) == w);
        CHECK(m.act_inverse(u, m.act(u, w)) == w);
      }
    }
  }
}

TEST_CASE("inverting on modules where u is not bijective") {
  const WeightModule n(ModuleSpec::top_row(Scalar(1, 2), 1));
  CHECK_THROWS_AS(n.act_inverse(Generator::q, v(1, 0)), NonInvertibleAction);
  // f maps the one-dimensional level 0 into the two-dimensional level 2.
  CHECK_THROWS_AS(invert_generator_on_weight_space(Generator::f, n, v(0, 1), {0, 8}), SingularAction);
  CHECK_THROWS_AS(invert_generator_on_weight_space(Generator::f, n, v(0, 1), {0, 8}), NonInvertibleAction);
  const WeightModule b(ModuleSpec::twisted_bq(Scalar(1, 2), 1, Scalar(1, 3)));
  CHECK_THROWS_AS(invert_generator_on_weight_space(Generator::f, b, v(-8, 0), {-8, 8}), WindowTooSmall);
  CHECK_THROWS_AS(invert_generator_on_weight_space(Generator::q, b, v(0, 0) + v(0, 1), {-8, 8}),
                  std::invalid_argument);
  CHECK_THROWS_AS(b.act_inverse(Generator::p, v(0, 0)), NonInvertibleAction);
}

TEST_CASE("the action is a representation of U and of its localizations") {
  Rng rng(43);
  struct Case {
    ModuleSpec spec;
    LocalizationMode mode;
  };
  const std::vector<Case> cases = {
      {ModuleSpec::verma_quotient(Scalar(1, 3), 2), LocalizationMode::none},
      {ModuleSpec::top_row(Scalar(3, 2), -3), LocalizationMode::none},
      {ModuleSpec::twisted_bq(Scalar(1, 2), 2, Scalar(5, 7)), LocalizationMode::at_q},
      {ModuleSpec::twisted_bq(Scalar(1, 2), 1, Scalar(1, 3)), LocalizationMode::at_f},
  };
  for (const Case& k : cases) {
    const WeightModule m(k.spec);
    for (int trial = 0; trial < 30; ++trial) {
      const AlgebraElement a = rng.element(k.mode, 2, 2, 3);
      const AlgebraElement b = rng.element(k.mode, 2, 2, 3);
      const ModuleVector w = v(rng.uniform(0, 3), rng.uniform(0, 1));
      CHECK(m.act(a * b, w) == m.act(a, m.act(b, w)));
    }
  }
}

TEST_CASE("twisting B_0 by the q-twist reproduces the explicit tables") {
  for (const ModuleSpec& spec : testing_support::bq_grid()) {
    const ModuleSpec b0 = ModuleSpec::twisted_bq(spec.lambda, spec.c, 0);
    const WeightModule twisted(twist_module(b0, Generator::q, spec.x));
    CHECK(twisted.top_weight() == WeightModule(spec).top_weight());
    CHECK(compare_actions(twisted, WeightModule(spec), {-4, 4}).pass());
  }
}

TEST_CASE("twists compose at module level") {
  const ModuleSpec b = ModuleSpec::twisted_bq(Scalar(1, 2), -3, Scalar(1, 3));
  const Scalar y(1, 4);
  const WeightModule composed(twist_module(twist_module(b, Generator::q, y), Generator::q, Scalar(1, 5)));
  const WeightModule direct(twist_module(b, Generator::q, y + Scalar(1, 5)));
  CHECK(compare_actions(composed, direct, {-4, 4}).pass());
  const WeightModule f_composed(twist_module(twist_module(b, Generator::f, y), Generator::f, y));
  const WeightModule f_direct(twist_module(b, Generator::f, y + y));
  CHECK(compare_actions(f_composed, f_direct, {-4, 4}).pass());
}

TEST_CASE("f-twists of twisted modules satisfy the bracket relations") {
  for (const Scalar& lambda : testing_support::top_row_lambdas()) {
    const ModuleSpec b = ModuleSpec::twisted_bq(lambda, 2, Scalar(1, 3));
    const WeightModule m(twist_module(b, Generator::f, Scalar(2, 5)));
    CHECK(check_axioms(m, {-4, 4}).pass());
  }
}

TEST_CASE("shift isomorphisms intertwine") {
  const ModuleSpec s = ModuleSpec::twisted_bq(Scalar(3, 2), 2, Scalar(1, 3));
  for (long n = -3; n <= 3; ++n) {
    const ShiftIsomorphism phi = shift_isomorphism(s, n);
    CHECK(phi.target.x == s.x + Scalar(n));
    CHECK(verify_intertwining(phi, {-6, 6}).pass());
  }
  ShiftIsomorphism wrong = shift_isomorphism(s, 1);
  wrong.target = ModuleSpec::twisted_bq(s.lambda, s.c, s.x + Scalar(2));
  CHECK_FALSE(verify_intertwining(wrong, {-6, 6}).pass());
  CHECK(shift_isomorphism(s, 2).apply(v(5, 1)) == v(3, 1));
}

TEST_CASE("the inverse cache is safe under concurrent use") {
  const WeightModule m(ModuleSpec::twisted_bq(Scalar(3, 2), 2, Scalar(5, 7)));
  const WeightModule reference(m.spec());
  std::vector<ModuleVector> expected;
  for (long i = -6; i <= 6; ++i) expected.push_back(reference.act_inverse(Generator::f, v(i, 1)));
  std::vector<std::thread> pool;
  std::vector<int> ok(8, 1);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      for (int rep = 0; rep < 5; ++rep) {
        for (long i = -6; i <= 6; ++i) {
          if (m.act_inverse(Generator::f, v(i, 1)) != expected[static_cast<std::size_t>(i + 6)]) ok[t] = 0;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int flag : ok) CHECK(flag == 1);
}

TEST_CASE("acting with parsed elements") {
  const WeightModule m(ModuleSpec::twisted_bq(Scalar(-1, 2), 1, Scalar(1, 2)));
  const auto at_q = [](const char* s) { return io::parse_element(s, LocalizationMode::at_q); };
  CHECK(m.act(at_q("p"), v(0, 0)) == v(-1, 0, Scalar(1, 2)));
  CHECK(m.act(at_q("z"), v(3, 0)) == v(3, 0));
  CHECK(m.act(at_q("p*q - q*p - z"), v(2, 0)).is_zero());
  CHECK(m.act(at_q("q^-2"), v(0, 0)) == v(-2, 0));
}
