#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "schrodinger/algebra.hpp"
#include "schrodinger/analysis.hpp"
#include "schrodinger/module.hpp"

namespace schrodinger::io {

/// Parses
///   expr   := term (("+" | "-") term)*
///   term   := coeff ["*"] factor ("*" factor)* | coeff | factor ("*" factor)*
///   factor := gen ["^" int]          gen ∈ {q,f,p,e,h,z}
///   coeff  := int ["/" int] | "(" ["-"] int ["/" int] ")"
/// Each term's factors are multiplied in U^(mode), so the result is in PBW
/// form. Juxtaposed generators ("qf") are rejected. Throws SyntaxError or
/// IllegalNegativeExponent.
AlgebraElement parse_element(std::string_view src, LocalizationMode mode = LocalizationMode::none);

/// Terms by descending total degree, ties by descending exponent tuple
/// (q,f,p,e,h,z); unit coefficients omitted. The zero element prints "0".
std::string print_element(const AlgebraElement& a);

/// "1/2·v(-1,0) - 3·v(0,1)"; terms ordered by (i, j); zero prints "0".
std::string print_vector(const ModuleVector& v);

/// Weight diagram document with keys in the fixed order
/// family, lambda, c, x, window, weights, axioms. Rationals are "num/den"
/// strings. "axioms" is null when no axiom report is given.
nlohmann::ordered_json export_weight_diagram(const WeightReport& report,
                                             const AxiomReport* axioms = nullptr);

nlohmann::ordered_json to_json(const AxiomReport& report);
nlohmann::ordered_json to_json(const IsomorphismVerdict& verdict);

}  // namespace schrodinger::io
