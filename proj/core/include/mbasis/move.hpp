#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "mbasis/frequency_vector.hpp"
#include "mbasis/model.hpp"

namespace mbasis {

/// A nonzero integer vector z with Az = 0, stored with its first nonzero
/// coordinate positive. That makes z^+ lexicographically greater than z^-,
/// so z and -z share one representation.
class Move {
 public:
  /// Throws InputError for the zero vector.
  explicit Move(std::vector<std::int64_t> z);
  /// The canonical form of x - y. Throws InputError when x == y.
  static Move between(const FrequencyVector& x, const FrequencyVector& y);
  /// Builds from explicit parts; the parts must have disjoint supports.
  static Move from_parts(const FrequencyVector& plus, const FrequencyVector& minus);

  std::span<const std::int64_t> z() const noexcept { return z_; }
  std::size_t size() const noexcept { return z_.size(); }
  FrequencyVector plus() const;
  FrequencyVector minus() const;
  /// |z^+|.
  std::int64_t degree() const;
  /// |z^+| == |z^-| and Az = 0.
  bool is_move_for(const ConfigMatrix& a) const;
  /// Throws InputError unless is_move_for(a).
  void validate(const ConfigMatrix& a) const;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;

 private:
  std::vector<std::int64_t> z_;
};

/// "plus - minus" using the matrix's monomial strings.
std::string binomial_string(const ConfigMatrix& a, const Move& m);

}  // namespace mbasis
