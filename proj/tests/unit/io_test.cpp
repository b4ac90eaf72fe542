#include <doctest.h>

#include <set>

#include "schrodinger/errors.hpp"
#include "schrodinger/io.hpp"
#include "support/test_support.hpp"

using namespace schrodinger;
using testing_support::Rng;

TEST_CASE("printing conventions") {
  CHECK(io::print_element(io::parse_element("p*q")) == "q*p + z");
  CHECK(io::print_element(io::parse_element("0")) == "0");
  CHECK(io::print_element(io::parse_element("q - q")) == "0");
  CHECK(io::print_element(io::parse_element("-2*h + 3/4")) == "-2*h + 3/4");
  CHECK(io::print_element(io::parse_element("z + q^2*f")) == "q^2*f + z");
  CHECK(io::print_element(io::parse_element("(-1/2) q^-1*z", LocalizationMode::at_q)) == "-1/2*q^-1*z");
  CHECK(io::print_vector(ModuleVector::basis({-1, 0}, Scalar(1, 2)) - ModuleVector::basis({0, 1}, 3)) ==
        "1/2·v(-1,0) - 3·v(0,1)");
  CHECK(io::print_vector(ModuleVector::basis({2, 0}, -1)) == "-1·v(2,0)");
  CHECK(io::print_vector(ModuleVector()) == "0");
}

TEST_CASE("grammar variants") {
  const AlgebraElement expected = io::parse_element("3*q*p");
  CHECK(io::parse_element("3 q*p") == expected);
  CHECK(io::parse_element(" 3 * q * p ") == expected);
  CHECK(io::parse_element("q^(2)") == io::parse_element("q*q"));
  CHECK(io::parse_element("q^(-1)*q", LocalizationMode::at_q) == AlgebraElement::constant(1, LocalizationMode::at_q));
  CHECK(io::parse_element("q - -q") == io::parse_element("2*q"));
}

TEST_CASE("syntax errors report the byte position") {
  const auto position_of = [](const char* src) -> std::size_t {
    try {
      io::parse_element(src);
    } catch (const SyntaxError& e) {
      return e.position;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of("qf") == 1);
  CHECK(position_of("q + x") == 4);
  CHECK(position_of("") == 0);
  CHECK(position_of("q*") == 2);
  CHECK(position_of("1/0*q") == 2);
  CHECK(position_of("1.5*q") == 1);
  CHECK(position_of("q^") == 2);
  CHECK_THROWS_AS(io::parse_element("q^-1"), IllegalNegativeExponent);
  CHECK_THROWS_AS(io::parse_element("f^-1", LocalizationMode::at_q), IllegalNegativeExponent);
}

TEST_CASE("parse inverts print on random elements") {
  Rng rng(99);
  constexpr LocalizationMode modes[] = {LocalizationMode::none, LocalizationMode::at_q, LocalizationMode::at_f};
  std::set<std::string> printed;
  std::set<AlgebraElement::Terms> distinct;
  for (int trial = 0; trial < 600; ++trial) {
    const LocalizationMode mode = modes[trial % 3];
    const AlgebraElement a = rng.element(mode, 4, 3, 12, 1000, 1000);
    const std::string text = io::print_element(a);
    CAPTURE(text);
    CHECK(io::parse_element(text, mode) == a);
    if (mode == LocalizationMode::at_q) {
      printed.insert(text);
      distinct.insert(a.terms());
    }
  }
  CHECK(printed.size() == distinct.size());
}

TEST_CASE("weight diagram export") {
  const WeightModule m(ModuleSpec::twisted_bq(Scalar(-1, 2), 1, Scalar(1, 2)));
  const Window w{-1, 0};
  const auto doc = io::export_weight_diagram(weight_report(m, w));
  CHECK(doc.dump() ==
        R"({"family":"B_q","lambda":"-1/2","c":"1/1","x":"1/2","window":{"i_min":-1,"i_max":0},)"
        R"("weights":[{"weight":"-1/1","dim":1},{"weight":"0/1","dim":1}],"axioms":null})");
  const AxiomReport axioms = check_axioms(m, w);
  CHECK(io::export_weight_diagram(weight_report(m, w), &axioms)["axioms"].dump() ==
        R"({"pass":true,"violations":[]})");
}

TEST_CASE("verdict and violation JSON") {
  IsomorphismVerdict v;
  v.reason = "central charges differ: 1 vs 2";
  CHECK(io::to_json(v).dump() ==
        R"({"isomorphic":false,"shift":null,"witness_verified":false,"reason":"central charges differ: 1 vs 2"})");
  const WeightModule m(ModuleSpec::twisted_bq(Scalar(1, 2), 1, Scalar(1, 3)));
  const AxiomReport r = check_axioms(m, {0, 0}, testing_support::flipped_p_action(m, testing_support::PTerm::lowering_i));
  const auto j = io::to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["violations"].size() == r.violations.size());
  CHECK(j["violations"][0]["index"].is_array());
}
