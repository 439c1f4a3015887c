#include "mbasis/fiber.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "mbasis/checked.hpp"
#include "mbasis/error.hpp"
#include "mbasis/union_find.hpp"

namespace mbasis {

std::optional<std::size_t> Fiber::index_of(const FrequencyVector& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x, MonomialOrder{});
  if (it == elements.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::int64_t move_degree(const FrequencyVector& x, const FrequencyVector& y) {
  if (x.size() != y.size()) throw InputError("frequency vectors differ in length");
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) deg = checked_add(deg, x[i] - y[i]);
  }
  return deg;
}

namespace {

bool supports_meet(const FrequencyVector& x, const FrequencyVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && y[i] != 0) return true;
  }
  return false;
}

}  // namespace

Partition equivalence_classes(const Fiber& fiber, std::int64_t max_move_degree, Adjacency rule) {
  if (rule == Adjacency::kSupportOverlap && max_move_degree != fiber.degree - 1) {
    throw InputError("support-overlap adjacency is only valid for moves of degree |t| - 1");
  }
  const std::size_t m = fiber.size();
  UnionFind uf(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (uf.same(i, j)) continue;
      const auto& x = fiber.elements[i];
      const auto& y = fiber.elements[j];
      bool edge = rule == Adjacency::kSupportOverlap ? supports_meet(x, y)
                                                      : move_degree(x, y) <= max_move_degree;
      if (edge) uf.unite(i, j);
    }
  }
  return uf.blocks();
}

// ---------------------------------------------------------------------------

std::optional<FiberSizeCache::Entry> FiberSizeCache::find(std::span<const std::int64_t> t) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(std::vector<std::int64_t>(t.begin(), t.end()));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void FiberSizeCache::record(std::span<const std::int64_t> t, Entry entry) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = map_.try_emplace(std::vector<std::int64_t>(t.begin(), t.end()), entry);
  if (inserted) return;
  Entry& cur = it->second;
  if (!cur.capped) return;  // already exact
  if (!entry.capped || entry.count > cur.count) cur = entry;
}

std::size_t FiberSizeCache::entries() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void FiberSizeCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

// ---------------------------------------------------------------------------

FiberEngine::FiberEngine(ConfigMatrix a) : a_(std::move(a)), cache_(std::make_unique<FiberSizeCache>()) {
  a_.require_grading();
  const std::size_t d = a_.rows();
  const std::size_t p = a_.cols();
  suffix_min_.assign((p + 1) * d, 0);
  suffix_max_.assign((p + 1) * d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (std::size_t j = p; j-- > 0;) {
      lo = std::min(lo, a_.at(k, j));
      hi = std::max(hi, a_.at(k, j));
      suffix_min_[j * d + k] = lo;
      suffix_max_[j * d + k] = hi;
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < p; ++j) {
      auto v = a_.at(k, j);
      if (v == std::numeric_limits<std::int64_t>::min()) throw OverflowError("matrix entry too large");
      max_abs_entry_ = std::max(max_abs_entry_, v < 0 ? -v : v);
    }
  }
}

template <typename Emit>
void FiberEngine::search(std::span<const std::int64_t> t, std::int64_t degree, Emit&& emit) const {
  const std::size_t d = a_.rows();
  const std::size_t p = a_.cols();

  // Bound every intermediate residual once so the inner loop can use plain arithmetic.
  std::int64_t t_abs = 0;
  for (auto v : t) t_abs = std::max(t_abs, v < 0 ? checked_sub(0, v) : v);
  checked_add(checked_mul(checked_mul(degree, max_abs_entry_), 2), t_abs);

  std::vector<std::int64_t> x(p, 0);
  std::vector<std::int64_t> r(t.begin(), t.end());
  bool stopped = false;

  auto reachable = [&](std::size_t from, std::int64_t budget) {
    const std::int64_t* lo = suffix_min_.data() + from * d;
    const std::int64_t* hi = suffix_max_.data() + from * d;
    for (std::size_t k = 0; k < d; ++k) {
      if (r[k] < budget * lo[k] || r[k] > budget * hi[k]) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t j, std::int64_t budget) -> void {
    auto col = a_.column(j);
    if (j + 1 == p) {
      for (std::size_t k = 0; k < d; ++k) {
        if (r[k] != budget * col[k]) return;
      }
      x[j] = budget;
      if (!emit(x)) stopped = true;
      x[j] = 0;
      return;
    }
    // Largest value first, so solutions come out in MonomialOrder.
    for (std::size_t k = 0; k < d; ++k) r[k] -= budget * col[k];
    for (std::int64_t v = budget; v >= 0 && !stopped; --v) {
      if (reachable(j + 1, budget - v)) {
        x[j] = v;
        self(self, j + 1, budget - v);
        x[j] = 0;
      }
      for (std::size_t k = 0; k < d; ++k) r[k] += col[k];
    }
    // The loop leaves r shifted by one extra column; r is dead once stopped.
    if (!stopped) {
      for (std::size_t k = 0; k < d; ++k) r[k] -= col[k];
    }
  };

  if (!reachable(0, degree)) return;
  dfs(dfs, 0, degree);
}

Fiber FiberEngine::enumerate(std::span<const std::int64_t> t) const {
  Fiber f;
  f.t.assign(t.begin(), t.end());
  auto degree = a_.degree_of(t);
  if (!degree) {
    f.degree = -1;
    return f;
  }
  f.degree = *degree;
  search(t, *degree, [&](const std::vector<std::int64_t>& x) {
    f.elements.emplace_back(x);
    return true;
  });
  cache_->record(t, {f.elements.size(), false});
  return f;
}

std::uint64_t FiberEngine::size_uncached(std::span<const std::int64_t> t,
                                         std::optional<std::uint64_t> cap) const {
  if (cap && *cap == 0) return 0;
  auto degree = a_.degree_of(t);
  if (!degree) return 0;
  std::uint64_t count = 0;
  search(t, *degree, [&](const std::vector<std::int64_t>&) {
    ++count;
    return !(cap && count >= *cap);
  });
  return count;
}

std::uint64_t FiberEngine::size(std::span<const std::int64_t> t, std::optional<std::uint64_t> cap) const {
  if (cap && *cap == 0) return 0;
  if (auto hit = cache_->find(t)) {
    if (!hit->capped) return cap ? std::min(hit->count, *cap) : hit->count;
    if (cap && hit->count >= *cap) return *cap;
  }
  std::uint64_t n = size_uncached(t, cap);
  const bool capped = cap && n >= *cap;
  cache_->record(t, {n, capped});
  return n;
}

std::vector<Fiber> FiberEngine::fibers_of_degree(std::int64_t n, Budget budget) const {
  if (n < 0) throw InputError("degree must be nonnegative");
  const std::uint64_t total = monomial_count(a_.cols(), n);
  if (total > budget.max_monomials) {
    throw BudgetExceeded("degree " + std::to_string(n) + " has " +
                         (total == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                             : std::to_string(total)) +
                         " monomials, over the budget of " + std::to_string(budget.max_monomials));
  }
  std::map<std::vector<std::int64_t>, std::vector<FrequencyVector>> groups;
  for_each_monomial(a_.cols(), n, [&](FrequencyVector x) {
    auto t = a_.statistic(x);
    groups[std::move(t)].push_back(std::move(x));
  });
  std::vector<Fiber> out;
  out.reserve(groups.size());
  for (auto& [t, elems] : groups) {
    Fiber f;
    f.t = t;
    f.degree = n;
    f.elements = std::move(elems);  // generated in MonomialOrder already
    cache_->record(f.t, {f.elements.size(), false});
    out.push_back(std::move(f));
  }
  return out;
}

Fiber enumerate_fiber(const ConfigMatrix& a, std::span<const std::int64_t> t) {
  return FiberEngine(a).enumerate(t);
}

std::uint64_t monomial_count(std::size_t p, std::int64_t n) {
  if (p == 0 || n < 0) return 0;
  // C(n + p - 1, p - 1), built incrementally so every prefix is an integer.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  const std::uint64_t k = p - 1;
  const auto un = static_cast<std::uint64_t>(n);
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(c, i);
    c /= g;
    const std::uint64_t num = (un + i) / (i / g);  // exact: i / g divides n + i
    if (__builtin_mul_overflow(c, num, &c)) return kMax;
  }
  return c;
}

}  // namespace mbasis
