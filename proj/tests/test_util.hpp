#pragma once

#include "cubulate/errors.hpp"
#include "cubulate/words.hpp"

#include <functional>
#include <optional>
#include <random>

namespace test_util {

inline std::optional<cubulate::ErrorKind> error_kind(
    const std::function<void()>& f) {
  try {
    f();
  } catch (const cubulate::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline cubulate::Word random_word(std::mt19937& rng, std::size_t letters,
                                  int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(letters) - 1);
  cubulate::Word w(static_cast<std::size_t>(len(rng)));
  for (cubulate::Letter& l : w) l = static_cast<cubulate::Letter>(pick(rng));
  return w;
}

} // namespace test_util
