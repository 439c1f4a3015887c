#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace mbasis {

/// Hash for integer tuples (sufficient statistics, coordinate vectors).
struct IntVectorHash {
  std::size_t operator()(std::span<const std::int64_t> v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    return (*this)(std::span<const std::int64_t>(v));
  }
};

/// A point of N^p: the exponent vector of a monomial in the cell indeterminates.
///
/// Ordering is plain lexicographic on the coordinates. Fibers list their
/// elements from the largest to the smallest vector, which is the
/// lexicographic monomial order with the first cell as the largest variable.
class FrequencyVector {
 public:
  FrequencyVector() = default;
  explicit FrequencyVector(std::size_t cells) : coords_(cells, 0) {}
  explicit FrequencyVector(std::vector<std::int64_t> coords);
  FrequencyVector(std::initializer_list<std::int64_t> coords)
      : FrequencyVector(std::vector<std::int64_t>(coords)) {}

  static FrequencyVector unit(std::size_t cells, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  const std::vector<std::int64_t>& vec() const noexcept { return coords_; }

  /// Sample size |x|.
  std::int64_t degree() const;
  std::vector<std::size_t> support() const;
  bool is_zero() const noexcept;

  /// Componentwise x >= other.
  bool dominates(const FrequencyVector& other) const;

  FrequencyVector plus_unit(std::size_t i) const;
  /// Throws InputError when coordinate i is already zero.
  FrequencyVector minus_unit(std::size_t i) const;

  /// Componentwise minimum.
  static FrequencyVector meet(const FrequencyVector& a, const FrequencyVector& b);

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
  friend auto operator<=>(const FrequencyVector&, const FrequencyVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

struct FrequencyVectorHash {
  std::size_t operator()(const FrequencyVector& x) const noexcept {
    return IntVectorHash{}(x.coords());
  }
};

/// Listing order for fiber elements: larger vectors first.
struct MonomialOrder {
  bool operator()(const FrequencyVector& a, const FrequencyVector& b) const { return a > b; }
};

/// L1 distance |x - y|.
std::int64_t l1_distance(const FrequencyVector& x, const FrequencyVector& y);

}  // namespace mbasis
