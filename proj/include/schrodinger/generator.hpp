#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace schrodinger {

/// Basis of the Schrödinger algebra. Enumerator order is the PBW order
/// q < f < p < e < h < z; rewriting moves later generators to the right.
enum class Generator : std::uint8_t { q = 0, f, p, e, h, z };

inline constexpr std::size_t kGeneratorCount = 6;

inline constexpr std::array<Generator, kGeneratorCount> kGenerators = {
    Generator::q, Generator::f, Generator::p, Generator::e, Generator::h, Generator::z};

constexpr std::size_t index_of(Generator g) { return static_cast<std::size_t>(g); }

char name_of(Generator g);
std::optional<Generator> generator_from_name(char c);
std::optional<Generator> generator_from_name(std::string_view s);

/// Change of h-eigenvalue caused by applying g to a weight vector.
int weight_shift(Generator g);

enum class LocalizationMode : std::uint8_t { none, at_q, at_f };

std::string_view name_of(LocalizationMode m);
std::optional<LocalizationMode> mode_from_name(std::string_view s);

/// The generator that may carry negative exponents in mode m.
std::optional<Generator> localized_generator(LocalizationMode m);

/// at_q for q, at_f for f; nullopt otherwise.
std::optional<LocalizationMode> mode_localizing(Generator u);

}  // namespace schrodinger
