#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "mbasis/frequency_vector.hpp"
#include "mbasis/model.hpp"

namespace mbasis {

/// Blocks of element indices. Blocks are ordered by their smallest index.
using Partition = std::vector<std::vector<std::size_t>>;

/// F_t = {x in N^p : Ax = t}.
struct Fiber {
  std::vector<std::int64_t> t;
  /// w^T t, or -1 when that is not a nonnegative integer (the fiber is then empty).
  std::int64_t degree = 0;
  /// Distinct, in MonomialOrder (largest vector first).
  std::vector<FrequencyVector> elements;
  std::optional<Partition> partition;

  std::size_t size() const noexcept { return elements.size(); }
  bool empty() const noexcept { return elements.empty(); }
  std::optional<std::size_t> index_of(const FrequencyVector& x) const;
};

/// Caller-imposed cap on the number of monomials a sweep may enumerate.
struct Budget {
  std::uint64_t max_monomials = 10'000'000;
};

/// Edge rule for equivalence classes.
enum class Adjacency {
  /// {x, y} adjacent iff deg(x - y) <= n.
  kMoveDegree,
  /// {x, y} adjacent iff supp(x) and supp(y) meet; only valid for n = |t| - 1.
  kSupportOverlap,
};

/// Connected components of the fiber under moves of degree <= max_move_degree.
Partition equivalence_classes(const Fiber& fiber, std::int64_t max_move_degree,
                              Adjacency rule = Adjacency::kMoveDegree);

/// B_{|t|-1} classes, the partition every Markov-basis statement refers to.
inline Partition lower_degree_classes(const Fiber& fiber) {
  return equivalence_classes(fiber, fiber.degree - 1);
}

/// deg(x - y) = |(x - y)^+|.
std::int64_t move_degree(const FrequencyVector& x, const FrequencyVector& y);

/// Thread-safe memo of fiber sizes keyed by the raw statistic t.
///
/// An entry is either exact, or a lower bound flagged `capped` that was
/// produced by an early-exit count.
class FiberSizeCache {
 public:
  struct Entry {
    std::uint64_t count = 0;
    bool capped = false;
  };

  std::optional<Entry> find(std::span<const std::int64_t> t) const;
  /// Keeps the more informative of the stored and the new entry.
  void record(std::span<const std::int64_t> t, Entry entry);
  std::size_t entries() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<std::int64_t>, Entry, IntVectorHash> map_;
};

/// Fiber enumeration and size queries for one graded configuration matrix.
///
/// Enumeration is a depth-first search over cells in left-to-right order.
/// At each partial assignment the residual t - A x' must be reachable by
/// spending exactly the remaining degree on the remaining columns; since
/// every unit spent there moves row k by an amount in [min, max] of that
/// row over the remaining columns, a branch is cut as soon as some residual
/// row leaves that interval.
class FiberEngine {
 public:
  /// Throws NoGradingError when `a` has no grading.
  explicit FiberEngine(ConfigMatrix a);

  const ConfigMatrix& matrix() const noexcept { return a_; }
  std::size_t cells() const noexcept { return a_.cols(); }

  Fiber enumerate(std::span<const std::int64_t> t) const;

  /// min(|F_t|, cap), stopping the search once cap solutions are seen.
  /// Results are memoized; a stale capped entry triggers a recount.
  std::uint64_t size(std::span<const std::int64_t> t,
                     std::optional<std::uint64_t> cap = std::nullopt) const;
  std::uint64_t size_uncached(std::span<const std::int64_t> t,
                              std::optional<std::uint64_t> cap = std::nullopt) const;

  /// |F_{Ax}|, capped.
  std::uint64_t size_of(const FrequencyVector& x, std::optional<std::uint64_t> cap = std::nullopt) const {
    return size(a_.statistic(x), cap);
  }

  /// Every fiber of total degree n, ordered by t. Throws BudgetExceeded when
  /// the number of degree-n monomials exceeds the budget.
  std::vector<Fiber> fibers_of_degree(std::int64_t n, Budget budget = {}) const;

  FiberSizeCache& cache() const noexcept { return *cache_; }

 private:
  // Calls emit(x) for each solution until it returns false.
  template <typename Emit>
  void search(std::span<const std::int64_t> t, std::int64_t degree, Emit&& emit) const;

  ConfigMatrix a_;
  std::vector<std::int64_t> suffix_min_;  // [(j * d) + k]: min over columns >= j of row k
  std::vector<std::int64_t> suffix_max_;
  std::int64_t max_abs_entry_ = 0;
  std::unique_ptr<FiberSizeCache> cache_;
};

/// Convenience wrapper over a throwaway engine.
Fiber enumerate_fiber(const ConfigMatrix& a, std::span<const std::int64_t> t);

/// Number of monomials of degree n in p variables, saturating at UINT64_MAX.
std::uint64_t monomial_count(std::size_t p, std::int64_t n);

/// Calls f(x) for every x in N^p with |x| = n, in MonomialOrder.
template <typename F>
void for_each_monomial(std::size_t p, std::int64_t n, F&& f);

}  // namespace mbasis

#include "mbasis/detail/monomials.hpp"
