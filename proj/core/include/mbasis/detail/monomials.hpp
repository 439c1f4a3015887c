#pragma once

// Implementation of mbasis::for_each_monomial; included from fiber.hpp.

#include <cstddef>
#include <cstdint>

namespace mbasis {

template <typename F>
void for_each_monomial(std::size_t p, std::int64_t n, F&& f) {
  if (p == 0 || n < 0) return;
  std::vector<std::int64_t> x(p, 0);
  x[0] = n;
  while (true) {
    f(FrequencyVector(x));
    // Descending-lex successor: move one unit from the last nonzero
    // non-final coordinate j to j + 1, together with everything in the tail.
    std::size_t j = p - 1;
    while (j > 0 && x[j - 1] == 0) --j;
    if (j == 0) return;
    --j;
    const std::int64_t tail = x[p - 1];
    --x[j];
    x[p - 1] = 0;
    x[j + 1] = tail + 1;
  }
}

}  // namespace mbasis
