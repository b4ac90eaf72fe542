#include "schrodinger/analysis.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "schrodinger/errors.hpp"
#include "schrodinger/linalg.hpp"

namespace schrodinger {

namespace {

ModuleVector apply_linear(const GeneratorAction& action, const AlgebraElement& a,
                          const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [m, c] : a.terms()) {
    ModuleVector w = v;
    const Word word = word_of(m);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      for (int k = 0; k < it->exp; ++k) w = action(it->gen, w);
    }
    w *= c;
    out += w;
  }
  return out;
}

std::vector<ModuleVector> vectors_from_coordinates(const std::vector<BasisIndex>& basis,
                                                   const std::vector<std::vector<Scalar>>& coords) {
  std::vector<ModuleVector> out;
  for (const auto& col : coords) {
    ModuleVector v;
    for (std::size_t k = 0; k < basis.size(); ++k) v.add_term(basis[k], col[k]);
    out.push_back(std::move(v));
  }
  return out;
}

void require_level_in_window(const LevelRange& range, long level, const char* what) {
  if ((level < range.lo && range.lo_truncated) || (level > range.hi && range.hi_truncated)) {
    throw WindowTooSmall(std::string(what) + " at level " + std::to_string(level) +
                         " lies outside the window");
  }
}

// Kernel of the linear map sending each basis vector of `level` through `apply`.
std::vector<ModuleVector> kernel_on_level(
    const WeightModule& module, long level, long target_level,
    const std::function<ModuleVector(const ModuleVector&)>& apply) {
  const auto source = module.level_basis(level);
  if (source.empty()) return {};
  const auto target = module.level_basis(target_level);
  linalg::Matrix a(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto col = module.coordinates(apply(ModuleVector::basis(source[c])), target_level);
    for (std::size_t r = 0; r < target.size(); ++r) a(r, c) = col[r];
  }
  return vectors_from_coordinates(source, linalg::nullspace(a));
}

}  // namespace

AxiomReport check_axioms(const WeightModule& module, const Window& window) {
  return check_axioms(module, window,
                      [&module](Generator g, const ModuleVector& v) { return module.act(g, v); });
}

AxiomReport check_axioms(const WeightModule& module, const Window& window,
                         const GeneratorAction& action) {
  if (window.empty()) throw std::invalid_argument("check_axioms needs a nonempty window");
  AxiomReport report;
  report.window = window;
  for (BasisIndex b : module.window_basis(window)) {
    const ModuleVector v = ModuleVector::basis(b);
    for (std::size_t x = 0; x < kGeneratorCount; ++x) {
      for (std::size_t y = x + 1; y < kGeneratorCount; ++y) {
        const Generator ga = kGenerators[x];
        const Generator gb = kGenerators[y];
        ModuleVector defect = action(ga, action(gb, v)) - action(gb, action(ga, v)) -
                              apply_linear(action, bracket_table(ga, gb), v);
        ++report.checked_pairs;
        if (!defect.is_zero()) report.violations.push_back({ga, gb, b, std::move(defect)});
      }
    }
  }
  return report;
}

WeightReport weight_report(const WeightModule& module, const Window& window) {
  WeightReport report{module.spec(), window, {}};
  const LevelRange interior = module.interior(window);
  std::map<long, long> counts;
  for (BasisIndex b : module.window_basis(window)) ++counts[WeightModule::level(b)];
  // Higher level means lower weight; iterate backwards for ascending weights.
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    report.support.push_back({module.top_weight() - Scalar(it->first), it->second,
                              interior.contains(it->first)});
  }
  return report;
}

std::vector<ModuleVector> singular_vectors(const WeightModule& module, const Scalar& weight,
                                           Generator s, const Window& window) {
  if (s != Generator::e && s != Generator::p) {
    throw std::invalid_argument("singular vectors are taken with respect to e or p");
  }
  const auto level = module.level_of(weight);
  if (!level) return {};
  require_level_in_window(module.level_range(window), *level, "weight space");
  return kernel_on_level(module, *level, *level + level_shift(s),
                         [&](const ModuleVector& v) { return module.act(s, v); });
}

std::vector<ModuleVector> nilpotent_part(const WeightModule& module, Generator s,
                                         const Scalar& weight, int max_power,
                                         const Window& window) {
  if (max_power < 0) throw std::invalid_argument("max_power must be nonnegative");
  const auto level = module.level_of(weight);
  if (!level) return {};
  const LevelRange range = module.level_range(window);
  require_level_in_window(range, *level, "weight space");
  const long target = *level + static_cast<long>(max_power) * level_shift(s);
  require_level_in_window(range, target, "image of the highest power");
  return kernel_on_level(module, *level, target, [&](ModuleVector v) {
    for (int k = 0; k < max_power && !v.is_zero(); ++k) v = module.act(s, v);
    return v;
  });
}

SimplicityReport simplicity_probe(const WeightModule& module, const Window& window) {
  SimplicityReport report;
  const ModuleSpec& spec = module.spec();
  if (spec.family == Family::TwistedB_q && spec.x.is_integer()) {
    report.structural_flag =
        "x is an integer: the module is isomorphic to B_0, which contains N(lambda,c)";
  }
  const LevelRange range = module.level_range(window);
  const LevelRange interior = module.interior(window);
  if (interior.empty()) {
    throw WindowTooSmall("window leaves no interior weights at margin " +
                         std::to_string(module.margin()));
  }

  constexpr Generator kMoving[] = {Generator::q, Generator::f, Generator::p, Generator::e};
  report.probe_pass = true;
  for (BasisIndex start : module.window_basis(window)) {
    ++report.starts_checked;
    std::map<long, linalg::Span> spans;
    auto span_at = [&](long level) -> linalg::Span& {
      auto it = spans.find(level);
      if (it == spans.end()) {
        it = spans.emplace(level, linalg::Span(module.level_basis(level).size())).first;
      }
      return it->second;
    };
    std::deque<std::pair<long, ModuleVector>> queue;
    const long start_level = WeightModule::level(start);
    const ModuleVector sv = ModuleVector::basis(start);
    span_at(start_level).insert(module.coordinates(sv, start_level));
    queue.emplace_back(start_level, sv);
    while (!queue.empty()) {
      auto [level, v] = std::move(queue.front());
      queue.pop_front();
      // h and z act by scalars on weight vectors, so only these four can grow the span.
      for (Generator g : kMoving) {
        const long next = level + level_shift(g);
        if (!range.contains(next)) continue;
        ModuleVector w = module.act(g, v);
        if (w.is_zero()) continue;
        if (span_at(next).insert(module.coordinates(w, next))) queue.emplace_back(next, std::move(w));
      }
    }
    for (long n = interior.lo; n <= interior.hi; ++n) {
      if (span_at(n).rank() != module.level_basis(n).size()) {
        report.probe_pass = false;
        report.failed_start = start;
        report.unreached_weight = module.top_weight() - Scalar(n);
        break;
      }
    }
    if (!report.probe_pass) break;
  }
  report.pass = report.probe_pass && !report.structural_flag;
  return report;
}

ActionComparison compare_actions(const WeightModule& a, const WeightModule& b,
                                 const Window& window) {
  ActionComparison cmp;
  for (BasisIndex idx : a.window_basis(window)) {
    const ModuleVector v = ModuleVector::basis(idx);
    for (Generator g : kGenerators) {
      ++cmp.checked;
      if (a.act(g, v) != b.act(g, v)) cmp.mismatches.push_back({g, idx});
    }
  }
  return cmp;
}

ActionComparison verify_intertwining(const ShiftIsomorphism& phi, const Window& window) {
  const WeightModule source(phi.source);
  const WeightModule target(phi.target);
  ActionComparison cmp;
  for (BasisIndex idx : source.window_basis(window)) {
    const ModuleVector v = ModuleVector::basis(idx);
    for (Generator g : kGenerators) {
      ++cmp.checked;
      if (phi.apply(source.act(g, v)) != target.act(g, phi.apply(v))) {
        cmp.mismatches.push_back({g, idx});
      }
    }
  }
  return cmp;
}

namespace {

long interior_dimension(const ModuleSpec& spec, const Window& window) {
  const WeightModule m(spec);
  for (const WeightEntry& e : weight_report(m, window).support) {
    if (e.interior) return e.dim;
  }
  return 0;
}

}  // namespace

IsomorphismVerdict classify_isomorphism(const ModuleSpec& a, const ModuleSpec& b,
                                        const Window& window) {
  if (a.family != Family::TwistedB_q || b.family != Family::TwistedB_q) {
    throw std::invalid_argument("classify_isomorphism compares B_q modules");
  }
  IsomorphismVerdict v;
  if (a.c != b.c) {
    v.reason = "central charges differ: " + a.c.str() + " vs " + b.c.str();
    return v;
  }
  if (a.lambda != b.lambda) {
    v.reason = "weight-space dimensions " + std::to_string(interior_dimension(a, window)) +
               " vs " + std::to_string(interior_dimension(b, window));
    return v;
  }
  const Scalar diff = b.x - a.x;
  if (!diff.is_integer()) {
    v.reason = "supports differ: Z + " + (a.lambda - a.x).str() + " vs Z + " +
               (b.lambda - b.x).str();
    return v;
  }
  v.isomorphic = true;
  v.shift = diff.to_long();
  if (!v.shift) throw std::overflow_error("shift does not fit in a machine integer");
  v.witness_verified = verify_intertwining(shift_isomorphism(a, *v.shift), window).pass();
  v.reason = "x2 - x1 = " + diff.str() + " is an integer";
  return v;
}

}  // namespace schrodinger
