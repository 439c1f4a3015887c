#include "mbasis/indispensable.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "mbasis/checked.hpp"
#include "mbasis/error.hpp"

namespace mbasis {

namespace {

// A(x) - a_i, i.e. the statistic of x - e_i, without materializing x - e_i.
std::vector<std::int64_t> shifted(const ConfigMatrix& a, std::vector<std::int64_t> t, std::size_t i,
                                  int sign) {
  auto col = a.column(i);
  for (std::size_t k = 0; k < t.size(); ++k) {
    t[k] = sign > 0 ? checked_add(t[k], col[k]) : checked_sub(t[k], col[k]);
  }
  return t;
}

bool single(const FiberEngine& engine, std::span<const std::int64_t> t) {
  return engine.size(t, 2) == 1;
}

bool multi(const FiberEngine& engine, std::span<const std::int64_t> t) {
  return engine.size(t, 2) >= 2;
}

void check_cells(const FiberEngine& engine, const FrequencyVector& x) {
  if (x.size() != engine.cells()) throw InputError("vector length does not match the number of cells");
}

}  // namespace

bool is_one_element(const FiberEngine& engine, const FrequencyVector& x) {
  check_cells(engine, x);
  return single(engine, engine.matrix().statistic(x));
}

bool is_minimal_multi_element(const FiberEngine& engine, const FrequencyVector& x) {
  check_cells(engine, x);
  const auto& a = engine.matrix();
  auto t = a.statistic(x);
  if (!multi(engine, t)) return false;
  for (auto i : x.support()) {
    if (!single(engine, shifted(a, t, i, -1))) return false;
  }
  return true;
}

bool is_minimal_i_lacking_one_element(const FiberEngine& engine, const FrequencyVector& x,
                                      std::size_t i) {
  check_cells(engine, x);
  if (i >= engine.cells()) throw InputError("cell index " + std::to_string(i) + " out of range");
  const auto& a = engine.matrix();
  auto t = a.statistic(x);
  if (!single(engine, t)) return false;
  auto t_plus = shifted(a, t, i, +1);
  if (!multi(engine, t_plus)) return false;
  for (auto j : x.support()) {
    if (!single(engine, shifted(a, t_plus, j, -1))) return false;
  }
  return true;
}

std::vector<FrequencyVector> enumerate_indispensable_monomials(const FiberEngine& engine,
                                                               std::int64_t max_degree,
                                                               Budget budget) {
  if (max_degree < 1) throw InputError("max_degree must be at least 1");
  const std::size_t p = engine.cells();
  std::vector<FrequencyVector> found;
  std::vector<FrequencyVector> frontier{FrequencyVector(p)};
  std::uint64_t examined = 0;

  for (std::int64_t k = 0; k < max_degree && !frontier.empty(); ++k) {
    std::unordered_set<FrequencyVector, FrequencyVectorHash> seen;
    std::vector<FrequencyVector> next;
    for (const auto& x : frontier) {
      for (std::size_t i = 0; i < p; ++i) {
        auto y = x.plus_unit(i);
        if (!seen.insert(y).second) continue;
        if (++examined > budget.max_monomials) {
          throw BudgetExceeded("indispensable-monomial sweep examined more than " +
                               std::to_string(budget.max_monomials) + " candidates");
        }
        if (is_one_element(engine, y)) {
          next.push_back(std::move(y));
        } else if (is_minimal_multi_element(engine, y)) {
          found.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), DegreeThenMonomialOrder{});
  return found;
}

std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  if (n == 0) throw InputError("cannot draw from an empty range");
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v > limit);
  return static_cast<std::size_t>(v % bound);
}

SearchStep random_search_step(const FiberEngine& engine, const FrequencyVector& state,
                              std::mt19937_64& rng, std::optional<std::size_t> forced_cell) {
  check_cells(engine, state);
  if (!is_one_element(engine, state)) throw InputError("random search state must be a 1-element");
  const std::size_t p = engine.cells();
  const std::size_t i = forced_cell ? *forced_cell : draw_index(rng, p);
  if (i >= p) throw InputError("cell index " + std::to_string(i) + " out of range");

  auto grown = state.plus_unit(i);
  if (is_one_element(engine, grown)) return {SearchStep::Kind::kAdvanced, std::move(grown), i};

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t k = p; k > 1; --k) std::swap(order[k - 1], order[draw_index(rng, k)]);

  const auto& a = engine.matrix();
  FrequencyVector x = state;
  while (!is_minimal_i_lacking_one_element(engine, x, i)) {
    auto t_plus = a.statistic(x.plus_unit(i));
    bool removed = false;
    for (auto j : order) {
      if (j == i || x[j] == 0) continue;
      if (multi(engine, shifted(a, t_plus, j, -1))) {
        x = x.minus_unit(j);
        removed = true;
        break;
      }
    }
    if (!removed) throw InvariantViolation("random search found no removable cell");
  }
  auto result = x.plus_unit(i);
  if (!is_indispensable_monomial(engine, result)) {
    throw InvariantViolation("random search produced a dispensable monomial");
  }
  return {SearchStep::Kind::kFound, std::move(result), i};
}

bool is_indispensable_binomial(const FiberEngine& engine, const Move& z) {
  z.validate(engine.matrix());
  // z^+ != z^- both lie in the fiber, so a size of exactly two pins it down.
  return engine.size(engine.matrix().statistic(z.plus()), 3) == 2;
}

std::vector<Move> enumerate_indispensable_binomials(const FiberEngine& engine,
                                                    std::int64_t max_degree, Budget budget) {
  std::vector<Move> moves;
  std::uint64_t used = 0;
  for (std::int64_t n = 1; n <= max_degree; ++n) {
    auto fibers = engine.fibers_of_degree(n, Budget{budget.max_monomials - used});
    used += monomial_count(engine.cells(), n);
    for (const auto& f : fibers) {
      if (f.size() != 2) continue;
      // Two elements sharing a cell repeat a lower-degree two-element fiber.
      if (!FrequencyVector::meet(f.elements[0], f.elements[1]).is_zero()) continue;
      Move m = Move::between(f.elements[0], f.elements[1]);
      if (!is_indispensable_monomial(engine, m.plus()) || !is_indispensable_monomial(engine, m.minus())) {
        throw InvariantViolation("indispensable binomial has a dispensable term");
      }
      moves.push_back(std::move(m));
    }
  }
  std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
    auto dx = x.degree();
    auto dy = y.degree();
    return dx != dy ? dx < dy : x < y;
  });
  return moves;
}

}  // namespace mbasis
