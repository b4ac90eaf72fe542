#include "schrodinger/generator.hpp"

namespace schrodinger {

char name_of(Generator g) {
  static constexpr char kNames[] = {'q', 'f', 'p', 'e', 'h', 'z'};
  return kNames[index_of(g)];
}

std::optional<Generator> generator_from_name(char c) {
  switch (c) {
    case 'q': return Generator::q;
    case 'f': return Generator::f;
    case 'p': return Generator::p;
    case 'e': return Generator::e;
    case 'h': return Generator::h;
    case 'z': return Generator::z;
    default: return std::nullopt;
  }
}

std::optional<Generator> generator_from_name(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  return generator_from_name(s[0]);
}

int weight_shift(Generator g) {
  switch (g) {
    case Generator::q: return -1;
    case Generator::f: return -2;
    case Generator::p: return 1;
    case Generator::e: return 2;
    case Generator::h:
    case Generator::z: return 0;
  }
  return 0;
}

std::string_view name_of(LocalizationMode m) {
  switch (m) {
    case LocalizationMode::none: return "none";
    case LocalizationMode::at_q: return "at_q";
    case LocalizationMode::at_f: return "at_f";
  }
  return "none";
}

std::optional<LocalizationMode> mode_from_name(std::string_view s) {
  if (s == "none") return LocalizationMode::none;
  if (s == "at_q") return LocalizationMode::at_q;
  if (s == "at_f") return LocalizationMode::at_f;
  return std::nullopt;
}

std::optional<Generator> localized_generator(LocalizationMode m) {
  switch (m) {
    case LocalizationMode::at_q: return Generator::q;
    case LocalizationMode::at_f: return Generator::f;
    case LocalizationMode::none: break;
  }
  return std::nullopt;
}

std::optional<LocalizationMode> mode_localizing(Generator u) {
  if (u == Generator::q) return LocalizationMode::at_q;
  if (u == Generator::f) return LocalizationMode::at_f;
  return std::nullopt;
}

}  // namespace schrodinger
