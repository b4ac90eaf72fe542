#include "schrodinger/algebra.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "schrodinger/errors.hpp"

namespace schrodinger {

int PbwMonomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool PbwMonomial::is_unit() const {
  for (int e : exponents) {
    if (e != 0) return false;
  }
  return true;
}

Word word_of(const PbwMonomial& m) {
  Word w;
  for (Generator g : kGenerators) {
    if (m[g] != 0) w.push_back({g, m[g]});
  }
  return w;
}

namespace {

void check_exponent(Generator g, int exp, LocalizationMode mode) {
  if (exp >= 0) return;
  if (localized_generator(mode) != g) {
    throw IllegalNegativeExponent(std::string("negative exponent on ") + name_of(g) +
                                  " in mode " + std::string(name_of(mode)));
  }
}

void require_same_mode(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.mode() != b.mode()) {
    throw ModeMismatch("operands in modes " + std::string(name_of(a.mode())) + " and " +
                       std::string(name_of(b.mode())));
  }
}

}  // namespace

AlgebraElement AlgebraElement::constant(const Scalar& c, LocalizationMode mode) {
  AlgebraElement r(mode);
  r.add_term(PbwMonomial::unit(), c);
  return r;
}

AlgebraElement AlgebraElement::generator(Generator g, LocalizationMode mode) {
  AlgebraElement r(mode);
  r.add_term(PbwMonomial::of(g), Scalar(1));
  return r;
}

AlgebraElement AlgebraElement::monomial(const PbwMonomial& m, const Scalar& c,
                                        LocalizationMode mode) {
  for (Generator g : kGenerators) check_exponent(g, m[g], mode);
  AlgebraElement r(mode);
  r.add_term(m, c);
  return r;
}

Scalar AlgebraElement::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add_term(const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_mode(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_mode(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  r *= Scalar(-1);
  return r;
}

BracketEntry bracket_entry(Generator a, Generator b) {
  using G = Generator;
  // Only one orientation of each nonzero relation is listed.
  auto lookup = [](G x, G y) -> BracketEntry {
    if (x == G::h && y == G::e) return {2, G::e};
    if (x == G::h && y == G::p) return {1, G::p};
    if (x == G::h && y == G::f) return {-2, G::f};
    if (x == G::e && y == G::q) return {1, G::p};
    if (x == G::e && y == G::f) return {1, G::h};
    if (x == G::p && y == G::f) return {-1, G::q};
    if (x == G::h && y == G::q) return {-1, G::q};
    if (x == G::p && y == G::q) return {1, G::z};
    return {};
  };
  BracketEntry r = lookup(a, b);
  if (r.coeff != 0) return r;
  r = lookup(b, a);
  r.coeff = -r.coeff;
  return r;
}

AlgebraElement bracket_table(Generator a, Generator b) {
  const BracketEntry br = bracket_entry(a, b);
  AlgebraElement r;
  if (br.coeff != 0) r.add_term(PbwMonomial::of(br.gen), Scalar(br.coeff));
  return r;
}

namespace {

// Products are built by right-multiplying PBW monomials by one letter g^{±1}
// at a time. For m = m' x^a with x the largest generator of m and x > g:
//   m g      = (m' g) x^a + c Σ_i (m' x^i y) x^{a-1-i}          [x,g] = c y
//   m u^{-1} = (m' u^{-1}) x^a - c Σ_i (m' x^i u^{-1} y u^{-1}) x^{a-1-i}
//                                                               [x,u] = c y
// Results are memoized per thread, so repeated subproducts are shared.
class Multiplier {
 public:
  explicit Multiplier(LocalizationMode mode) : mode_(mode) {}

  AlgebraElement times_letter(const AlgebraElement& a, Generator g, int sign) {
    AlgebraElement out(mode_);
    for (const auto& [m, c] : a.terms()) {
      for (const auto& [mm, cc] : times_letter(m, g, sign).terms()) out.add_term(mm, c * cc);
    }
    return out;
  }

  AlgebraElement times_power(AlgebraElement a, Generator g, int exp) {
    const int sign = exp < 0 ? -1 : 1;
    for (int k = 0; k < exp * sign; ++k) a = times_letter(a, g, sign);
    return a;
  }

 private:
  using Key = std::tuple<LocalizationMode, PbwMonomial, Generator, int>;

  const AlgebraElement& times_letter(const PbwMonomial& m, Generator g, int sign) {
    thread_local std::map<Key, AlgebraElement> cache;
    Key key{mode_, m, g, sign};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    AlgebraElement r = compute(m, g, sign);
    return cache.insert_or_assign(std::move(key), std::move(r)).first->second;
  }

  AlgebraElement single(const PbwMonomial& m) const {
    AlgebraElement r(mode_);
    r.add_term(m, Scalar(1));
    return r;
  }

  AlgebraElement compute(const PbwMonomial& m, Generator g, int sign) {
    std::optional<Generator> top;
    for (std::size_t k = kGeneratorCount; k-- > index_of(g) + 1;) {
      if (m[kGenerators[k]] != 0) {
        top = kGenerators[k];
        break;
      }
    }
    if (!top) {
      PbwMonomial r = m;
      r[g] += sign;
      return single(r);
    }
    const Generator x = *top;
    const int a = m[x];
    PbwMonomial rest = m;
    rest[x] = 0;
    AlgebraElement out = times_power(times_letter(single(rest), g, sign), x, a);

    const BracketEntry br = bracket_entry(x, g);
    if (br.coeff == 0) return out;
    if (a < 0) {
      // x = u sits after g and fails to commute with it; impossible for u in {q,f}.
      throw std::logic_error("unexpected non-commuting inverse letter in straightening");
    }
    const Scalar coeff(br.coeff);
    for (int i = 0; i < a; ++i) {
      PbwMonomial head = rest;
      head[x] = i;
      AlgebraElement t = single(head);
      if (sign > 0) {
        t = times_letter(t, br.gen, 1);
        out += times_power(std::move(t), x, a - 1 - i) * coeff;
      } else {
        t = times_letter(t, g, -1);
        t = times_letter(t, br.gen, 1);
        t = times_letter(t, g, -1);
        out -= times_power(std::move(t), x, a - 1 - i) * coeff;
      }
    }
    return out;
  }

  LocalizationMode mode_;
};

using ProductKey = std::tuple<LocalizationMode, PbwMonomial, PbwMonomial>;

const AlgebraElement& monomial_product(LocalizationMode mode, const PbwMonomial& a,
                                       const PbwMonomial& b) {
  thread_local std::map<ProductKey, AlgebraElement> cache;
  ProductKey key{mode, a, b};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Multiplier mul(mode);
  AlgebraElement r(mode);
  r.add_term(a, Scalar(1));
  for (const Letter& l : word_of(b)) r = mul.times_power(std::move(r), l.gen, l.exp);
  return cache.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace

AlgebraElement normalize(std::span<const Letter> word, LocalizationMode mode) {
  for (const Letter& l : word) check_exponent(l.gen, l.exp, mode);
  Multiplier mul(mode);
  AlgebraElement r = AlgebraElement::constant(Scalar(1), mode);
  for (const Letter& l : word) r = mul.times_power(std::move(r), l.gen, l.exp);
  return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_mode(a, b);
  AlgebraElement r(a.mode());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Scalar cab = ca * cb;
      for (const auto& [m, c] : monomial_product(a.mode(), ma, mb).terms()) {
        r.add_term(m, cab * c);
      }
    }
  }
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

AlgebraElement power(const AlgebraElement& a, unsigned n) {
  AlgebraElement r = AlgebraElement::constant(Scalar(1), a.mode());
  for (unsigned k = 0; k < n; ++k) r = multiply(r, a);
  return r;
}

std::size_t ad_nilpotency_index(Generator s, const AlgebraElement& target, std::size_t cap) {
  const AlgebraElement ad_s = AlgebraElement::generator(s, target.mode());
  AlgebraElement cur = target;
  for (std::size_t n = 0; n <= cap; ++n) {
    if (cur.is_zero()) return n;
    cur = bracket(ad_s, cur);
  }
  throw NotNilpotent(std::string("ad_") + name_of(s) + " not nilpotent within " +
                     std::to_string(cap) + " iterations");
}

}  // namespace schrodinger
