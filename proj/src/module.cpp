#include "schrodinger/module.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "schrodinger/errors.hpp"
#include "schrodinger/linalg.hpp"
#include "schrodinger/twisting.hpp"

namespace schrodinger {

std::string family_name(Family f) {
  switch (f) {
    case Family::VermaQuotientM: return "M";
    case Family::TopRowN: return "N";
    case Family::TwistedB_q: return "B_q";
    case Family::GenericTwist: return "twist";
  }
  return "?";
}

bool is_top_row_weight(const Scalar& lambda) {
  const Scalar t = lambda + Scalar(1, 2);
  return t.is_integer() && t.sign() >= 0;
}

namespace {

void require_central_charge(const Scalar& c) {
  if (c.is_zero()) throw InvalidSpec("central charge c must be nonzero");
}

void require_top_row_weight(const Scalar& lambda) {
  if (!is_top_row_weight(lambda)) {
    throw InvalidSpec("lambda = " + lambda.str() + " is not of the form -1/2 + n, n >= 0");
  }
  if (!(lambda + Scalar(1, 2)).to_long()) throw InvalidSpec("lambda too large");
}

}  // namespace

ModuleSpec ModuleSpec::verma_quotient(const Scalar& lambda, const Scalar& c) {
  require_central_charge(c);
  if (is_top_row_weight(lambda)) {
    throw InvalidSpec("M(lambda,c) requires lambda outside -1/2 + N, got " + lambda.str());
  }
  ModuleSpec s;
  s.family = Family::VermaQuotientM;
  s.lambda = lambda;
  s.c = c;
  return s;
}

ModuleSpec ModuleSpec::top_row(const Scalar& lambda, const Scalar& c) {
  require_central_charge(c);
  require_top_row_weight(lambda);
  ModuleSpec s;
  s.family = Family::TopRowN;
  s.lambda = lambda;
  s.c = c;
  return s;
}

ModuleSpec ModuleSpec::twisted_bq(const Scalar& lambda, const Scalar& c, const Scalar& x) {
  require_central_charge(c);
  require_top_row_weight(lambda);
  ModuleSpec s;
  s.family = Family::TwistedB_q;
  s.lambda = lambda;
  s.c = c;
  s.x = x;
  return s;
}

const ModuleSpec& ModuleSpec::root() const {
  const ModuleSpec* s = this;
  while (s->family == Family::GenericTwist) s = s->base.get();
  return *s;
}

std::optional<long> ModuleSpec::top_row_index() const {
  const ModuleSpec& r = root();
  if (r.family == Family::VermaQuotientM) return std::nullopt;
  return (r.lambda + Scalar(1, 2)).to_long();
}

bool operator==(const ModuleSpec& a, const ModuleSpec& b) {
  if (a.family != b.family || a.lambda != b.lambda || a.c != b.c || a.x != b.x) return false;
  if (a.family != Family::GenericTwist) return true;
  return a.twist_u == b.twist_u && *a.base == *b.base;
}

ModuleSpec twist_module(const ModuleSpec& base, Generator u, const Scalar& x) {
  if (u != Generator::q && u != Generator::f) {
    throw InvalidSpec(std::string("twisting is defined for q and f only, got ") + name_of(u));
  }
  ModuleSpec s;
  s.family = Family::GenericTwist;
  s.lambda = base.lambda;
  s.c = base.c;
  s.x = x;
  s.base = std::make_shared<const ModuleSpec>(base);
  s.twist_u = u;
  return s;
}

ModuleSpec canonicalize(const ModuleSpec& spec) {
  if (spec.family != Family::TwistedB_q) {
    throw std::invalid_argument("canonicalize applies to B_q specs only");
  }
  return ModuleSpec::twisted_bq(spec.lambda, spec.c, spec.x - spec.x.floor());
}

bool is_classification_representative(const ModuleSpec& spec) {
  return spec.family == Family::TwistedB_q && spec.x.sign() > 0 && spec.x < Scalar(1);
}

ModuleVector ModuleVector::basis(BasisIndex b, const Scalar& c) {
  ModuleVector v;
  v.add_term(b, c);
  return v;
}

Scalar ModuleVector::coefficient(BasisIndex b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ModuleVector::add_term(BasisIndex b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

int level_shift(Generator g) { return -weight_shift(g); }

// ---------------------------------------------------------------------------

struct LevelInverse {
  std::vector<BasisIndex> source;
  std::vector<BasisIndex> target;
  linalg::Matrix inverse;
};

struct WeightModule::State {
  ModuleSpec spec;
  std::optional<WeightModule> base;  // GenericTwist
  std::vector<AlgebraElement> images;  // Θ images of q,f,p,e,h,z (GenericTwist)
  std::optional<long> top_row;         // λ + 1/2 for N-based families

  mutable std::mutex mutex;
  mutable std::map<std::pair<Generator, long>, std::shared_ptr<const LevelInverse>> inverses;
};

WeightModule::WeightModule(ModuleSpec spec) : state_(std::make_shared<State>()) {
  state_->top_row = spec.top_row_index();
  if (spec.family == Family::GenericTwist) {
    if (!spec.base) throw InvalidSpec("twisted module without a base");
    state_->base.emplace(*spec.base);
    const TwistSpec t{spec.twist_u, spec.x};
    for (Generator g : kGenerators) state_->images.push_back(theta_letter(t, {g, 1}));
  }
  state_->spec = std::move(spec);
}

const ModuleSpec& WeightModule::spec() const { return state_->spec; }

bool WeightModule::contains(BasisIndex b) const {
  const ModuleSpec& s = state_->spec;
  switch (s.family) {
    case Family::VermaQuotientM: return b.i >= 0 && b.j >= 0;
    case Family::TopRowN: return b.i >= 0 && b.j >= 0 && b.j <= *state_->top_row;
    case Family::TwistedB_q: return b.j >= 0 && b.j <= *state_->top_row;
    case Family::GenericTwist: return state_->base->contains(b);
  }
  return false;
}

Scalar WeightModule::top_weight() const {
  const ModuleSpec& s = state_->spec;
  switch (s.family) {
    case Family::VermaQuotientM:
    case Family::TopRowN: return s.lambda;
    case Family::TwistedB_q: return s.lambda - s.x;
    case Family::GenericTwist: {
      const Scalar shift = s.twist_u == Generator::q ? s.x : Scalar(2) * s.x;
      return state_->base->top_weight() - shift;
    }
  }
  return s.lambda;
}

std::optional<long> WeightModule::level_of(const Scalar& weight) const {
  return (top_weight() - weight).to_long();
}

std::vector<BasisIndex> WeightModule::level_basis(long n) const {
  std::vector<BasisIndex> out;
  const long jmax = state_->top_row ? *state_->top_row : std::max(0L, n / 2);
  for (long j = 0; j <= jmax; ++j) {
    const BasisIndex b{n - 2 * j, j};
    if (contains(b)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisIndex> WeightModule::weight_basis(const Scalar& weight) const {
  auto n = level_of(weight);
  if (!n) return {};
  return level_basis(*n);
}

std::vector<BasisIndex> WeightModule::window_basis(const Window& w) const {
  std::vector<BasisIndex> out;
  if (w.empty()) return out;
  const ModuleSpec& root = state_->spec.root();
  if (root.family == Family::VermaQuotientM) {
    for (long i = 0; i <= w.i_max; ++i) {
      for (long j = 0; i + 2 * j <= w.i_max; ++j) out.push_back({i, j});
    }
  } else {
    const long lo = root.family == Family::TopRowN ? std::max(0L, w.i_min) : w.i_min;
    for (long i = lo; i <= w.i_max; ++i) {
      for (long j = 0; j <= *state_->top_row; ++j) out.push_back({i, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LevelRange WeightModule::level_range(const Window& w) const {
  if (w.empty()) return {};
  const ModuleSpec& root = state_->spec.root();
  switch (root.family) {
    case Family::VermaQuotientM:
      if (w.i_max < 0) return {};
      return {0, w.i_max, false, true};
    case Family::TopRowN: {
      if (w.i_max < 0) return {};
      const long lo = std::max(0L, w.i_min);
      return {lo, w.i_max + 2 * *state_->top_row, w.i_min > 0, true};
    }
    default:
      return {w.i_min, w.i_max + 2 * *state_->top_row, true, true};
  }
}

long WeightModule::margin() const {
  if (!state_->top_row) return 2;
  return 2 * (*state_->top_row + 1);
}

LevelRange WeightModule::interior(const Window& w) const {
  LevelRange r = level_range(w);
  if (r.empty()) return r;
  if (r.lo_truncated) r.lo += margin();
  if (r.hi_truncated) r.hi -= margin();
  return r;
}

namespace {

void put(ModuleVector& out, const WeightModule& m, BasisIndex b, const Scalar& c) {
  if (c.is_zero()) return;
  if (!m.contains(b)) {
    throw std::logic_error("action produced index (" + std::to_string(b.i) + "," +
                           std::to_string(b.j) + ") outside the module");
  }
  out.add_term(b, c);
}

}  // namespace

ModuleVector WeightModule::act(Generator g, const ModuleVector& v) const {
  const ModuleSpec& s = state_->spec;
  if (s.family == Family::GenericTwist) {
    // Θ fixes q and f for both twists.
    if (g == Generator::q || g == Generator::f) return state_->base->act(g, v);
    return state_->base->act(state_->images[index_of(g)], v);
  }

  const Scalar& lambda = s.lambda;
  const Scalar& c = s.c;
  ModuleVector out;
  for (const auto& [b, a] : v.terms()) {
    if (!contains(b)) throw std::invalid_argument("vector index outside the module");
    const Scalar t = Scalar(b.i) + s.x;  // x = 0 for M and N
    const Scalar j(b.j);
    switch (g) {
      case Generator::q:
        put(out, *this, {b.i + 1, b.j}, a);
        break;
      case Generator::f:
        if (!state_->top_row || b.j < *state_->top_row) {
          put(out, *this, {b.i, b.j + 1}, a);
        } else {
          // Top row: -Σ_s binom(J+1, s) / (2c)^{J+1-s} v_{i+2(J+1)-2s, s}
          const long top = *state_->top_row + 1;
          Scalar denom(1);
          for (long k = 0; k < top; ++k) denom *= Scalar(2) * c;
          for (long sidx = 0; sidx < top; ++sidx) {
            put(out, *this, {b.i + 2 * top - 2 * sidx, sidx}, -a * binomial(top, sidx) / denom);
            denom /= Scalar(2) * c;
          }
        }
        break;
      case Generator::z:
        put(out, *this, b, a * c);
        break;
      case Generator::h:
        put(out, *this, b, a * (lambda - t - Scalar(2) * j));
        break;
      case Generator::p:
        put(out, *this, {b.i + 1, b.j - 1}, -a * j);
        put(out, *this, {b.i - 1, b.j}, a * c * t);
        break;
      case Generator::e:
        put(out, *this, {b.i, b.j - 1}, a * j * (lambda + Scalar(1) - t - j));
        put(out, *this, {b.i - 2, b.j}, a * Scalar(1, 2) * c * t * (t - Scalar(1)));
        break;
    }
  }
  return out;
}

ModuleVector WeightModule::act(const AlgebraElement& a, const ModuleVector& v) const {
  const auto inv = localized_generator(a.mode());
  ModuleVector out;
  for (const auto& [m, coeff] : a.terms()) {
    ModuleVector w = v;
    const Word word = word_of(m);
    for (auto it = word.rbegin(); it != word.rend() && !w.is_zero(); ++it) {
      if (it->exp > 0) {
        for (int k = 0; k < it->exp; ++k) w = act(it->gen, w);
      } else {
        if (inv != it->gen) throw IllegalNegativeExponent("negative exponent outside localization");
        for (int k = 0; k < -it->exp; ++k) w = act_inverse(it->gen, w);
      }
    }
    w *= coeff;
    out += w;
  }
  return out;
}

namespace {

std::shared_ptr<const LevelInverse> build_level_inverse(const WeightModule& m, Generator u,
                                                        long target_level) {
  auto inv = std::make_shared<LevelInverse>();
  const long source_level = target_level - level_shift(u);
  inv->source = m.level_basis(source_level);
  inv->target = m.level_basis(target_level);
  const std::string where = std::string(1, name_of(u)) + " from level " +
                            std::to_string(source_level) + " to level " +
                            std::to_string(target_level);
  if (inv->source.size() != inv->target.size()) {
    throw SingularAction(where + " maps a space of dimension " +
                         std::to_string(inv->source.size()) + " to one of dimension " +
                         std::to_string(inv->target.size()));
  }
  const auto cols = m.level_matrix(u, source_level);
  linalg::Matrix a(inv->target.size(), inv->source.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = cols[r][c];
  }
  auto ainv = linalg::inverse(a);
  if (!ainv) throw SingularAction(where + " is not invertible");
  inv->inverse = std::move(*ainv);
  return inv;
}

std::map<long, ModuleVector> split_by_level(const ModuleVector& v) {
  std::map<long, ModuleVector> parts;
  for (const auto& [b, c] : v.terms()) parts[WeightModule::level(b)].add_term(b, c);
  return parts;
}

ModuleVector solve_on_level(const LevelInverse& inv, const WeightModule& m,
                            const ModuleVector& part, long level) {
  const std::vector<Scalar> y = inv.inverse.apply(m.coordinates(part, level));
  ModuleVector out;
  for (std::size_t k = 0; k < y.size(); ++k) out.add_term(inv.source[k], y[k]);
  return out;
}

}  // namespace

ModuleVector WeightModule::act_inverse(Generator u, const ModuleVector& v) const {
  if (u != Generator::q && u != Generator::f) {
    throw NonInvertibleAction(std::string("no inverse of ") + name_of(u) + " in any localization");
  }
  const ModuleSpec& s = state_->spec;
  switch (s.family) {
    case Family::VermaQuotientM:
    case Family::TopRowN:
      throw NonInvertibleAction(std::string(1, name_of(u)) + " does not act bijectively on " +
                                family_name(s.family) + "(lambda,c)");
    case Family::GenericTwist:
      return state_->base->act_inverse(u, v);
    case Family::TwistedB_q:
      if (u == Generator::q) {
        ModuleVector out;
        for (const auto& [b, c] : v.terms()) out.add_term({b.i - 1, b.j}, c);
        return out;
      }
      break;
  }

  ModuleVector out;
  for (const auto& [level, part] : split_by_level(v)) {
    std::shared_ptr<const LevelInverse> inv;
    {
      std::lock_guard lock(state_->mutex);
      auto it = state_->inverses.find({u, level});
      if (it != state_->inverses.end()) inv = it->second;
    }
    if (!inv) {
      inv = build_level_inverse(*this, u, level);
      std::lock_guard lock(state_->mutex);
      state_->inverses.emplace(std::make_pair(u, level), inv);
    }
    out += solve_on_level(*inv, *this, part, level);
  }
  return out;
}

std::vector<std::vector<Scalar>> WeightModule::level_matrix(Generator g, long from) const {
  const auto source = level_basis(from);
  const long to = from + level_shift(g);
  const auto target = level_basis(to);
  std::vector<std::vector<Scalar>> m(target.size(), std::vector<Scalar>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    const std::vector<Scalar> col = coordinates(act(g, ModuleVector::basis(source[c])), to);
    for (std::size_t r = 0; r < target.size(); ++r) m[r][c] = col[r];
  }
  return m;
}

std::vector<Scalar> WeightModule::coordinates(const ModuleVector& v, long n) const {
  const auto basis = level_basis(n);
  std::vector<Scalar> out(basis.size());
  for (const auto& [b, c] : v.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), b);
    if (it == basis.end() || *it != b) {
      throw std::invalid_argument("vector is not supported on level " + std::to_string(n));
    }
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

ModuleVector invert_generator_on_weight_space(Generator u, const WeightModule& module,
                                              const ModuleVector& w, const Window& window) {
  if (u != Generator::q && u != Generator::f) {
    throw std::invalid_argument("only q and f can be inverted");
  }
  if (w.is_zero()) return {};
  const auto parts = split_by_level(w);
  if (parts.size() != 1) throw std::invalid_argument("vector is not a weight vector");
  const long target = parts.begin()->first;
  const long source = target - level_shift(u);
  const LevelRange range = module.level_range(window);
  if (!range.contains(target) || !range.contains(source)) {
    throw WindowTooSmall("weight spaces at levels " + std::to_string(source) + " and " +
                         std::to_string(target) + " are not both inside the window");
  }
  const auto inv = build_level_inverse(module, u, target);
  return solve_on_level(*inv, module, w, target);
}

ShiftIsomorphism shift_isomorphism(const ModuleSpec& spec, long n) {
  if (spec.family != Family::TwistedB_q) {
    throw std::invalid_argument("shift isomorphisms are defined between B_q modules");
  }
  return {n, spec, ModuleSpec::twisted_bq(spec.lambda, spec.c, spec.x + Scalar(n))};
}

ModuleVector ShiftIsomorphism::apply(const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [b, c] : v.terms()) out.add_term({b.i - n, b.j}, c);
  return out;
}

}  // namespace schrodinger
