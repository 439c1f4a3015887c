#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mbasis/fiber.hpp"
#include "mbasis/frequency_vector.hpp"
#include "mbasis/move.hpp"

namespace mbasis {

/// |F_{Ax}| == 1.
bool is_one_element(const FiberEngine& engine, const FrequencyVector& x);

/// |F_{Ax}| >= 2 and x - e_i is a 1-element for every i in supp(x).
bool is_minimal_multi_element(const FiberEngine& engine, const FrequencyVector& x);

/// A monomial is indispensable exactly when it is a minimal multi-element;
/// this is that test under the name callers usually mean.
inline bool is_indispensable_monomial(const FiberEngine& engine, const FrequencyVector& x) {
  return is_minimal_multi_element(engine, x);
}

/// x is a 1-element, x + e_i is not, and x + e_i - e_j is a 1-element for
/// every j in supp(x). Throws InputError when i is out of range.
bool is_minimal_i_lacking_one_element(const FiberEngine& engine, const FrequencyVector& x,
                                      std::size_t i);

/// Orders monomials by degree, then larger vector first.
struct DegreeThenMonomialOrder {
  bool operator()(const FrequencyVector& a, const FrequencyVector& b) const {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da < db;
    return a > b;
  }
};

/// All indispensable monomials of degree <= max_degree, by a degree sweep
/// over the frontier of 1-elements starting from the zero vector. Every
/// minimal multi-element x has x - e_i a 1-element, so the frontier reaches
/// all of them. Sorted by DegreeThenMonomialOrder.
///
/// The budget bounds the number of candidate vectors examined.
std::vector<FrequencyVector> enumerate_indispensable_monomials(const FiberEngine& engine,
                                                               std::int64_t max_degree,
                                                               Budget budget = {});

/// Bounded uniform draw in [0, n) from a 64-bit engine. Portable across
/// standard libraries, unlike std::uniform_int_distribution.
std::size_t draw_index(std::mt19937_64& rng, std::size_t n);

/// Outcome of one step of the randomized 1-element walk.
struct SearchStep {
  enum class Kind { kAdvanced, kFound };
  Kind kind = Kind::kAdvanced;
  /// The new 1-element state (kAdvanced) or the indispensable monomial found (kFound).
  FrequencyVector vector;
  /// The cell i that was added.
  std::size_t cell = 0;
};

/// One step of the randomized walk over 1-elements.
///
/// Picks a cell i (uniformly, unless forced). If state + e_i is still a
/// 1-element it becomes the new state. Otherwise cells j != i are removed
/// from the state one at a time, scanning in a shuffled order and removing
/// the first j for which state + e_i - e_j stays multi-element, until the
/// state is a minimal i-lacking 1-element x'; then x' + e_i is returned.
/// Throws InputError when `state` is not a 1-element.
SearchStep random_search_step(const FiberEngine& engine, const FrequencyVector& state,
                              std::mt19937_64& rng,
                              std::optional<std::size_t> forced_cell = std::nullopt);

/// The fiber of Az^+ is exactly {z^+, z^-}.
bool is_indispensable_binomial(const FiberEngine& engine, const Move& z);

/// The move of every two-element fiber of degree <= max_degree whose two
/// elements have disjoint supports (those are exactly the fibers {z^+, z^-};
/// a two-element fiber with a shared cell repeats the move of a smaller
/// one), sorted by
/// degree and then by z. Throws InvariantViolation if a term of a returned
/// move fails is_indispensable_monomial.
std::vector<Move> enumerate_indispensable_binomials(const FiberEngine& engine,
                                                    std::int64_t max_degree, Budget budget = {});

}  // namespace mbasis
