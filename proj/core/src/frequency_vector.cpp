#include "mbasis/frequency_vector.hpp"

#include <algorithm>
#include <string>

#include "mbasis/checked.hpp"
#include "mbasis/error.hpp"

namespace mbasis {

FrequencyVector::FrequencyVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  for (auto c : coords_) {
    if (c < 0) throw InputError("frequency vector has a negative coordinate");
  }
}

FrequencyVector FrequencyVector::unit(std::size_t cells, std::size_t i) {
  if (i >= cells) throw InputError("unit vector index out of range");
  FrequencyVector e(cells);
  e.coords_[i] = 1;
  return e;
}

std::int64_t FrequencyVector::degree() const {
  std::int64_t s = 0;
  for (auto c : coords_) s = checked_add(s, c);
  return s;
}

std::vector<std::size_t> FrequencyVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) s.push_back(i);
  }
  return s;
}

bool FrequencyVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool FrequencyVector::dominates(const FrequencyVector& other) const {
  if (other.size() != size()) throw InputError("frequency vectors differ in length");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] < other.coords_[i]) return false;
  }
  return true;
}

FrequencyVector FrequencyVector::plus_unit(std::size_t i) const {
  if (i >= coords_.size()) throw InputError("cell index out of range");
  FrequencyVector r = *this;
  r.coords_[i] = checked_add(r.coords_[i], 1);
  return r;
}

FrequencyVector FrequencyVector::minus_unit(std::size_t i) const {
  if (i >= coords_.size()) throw InputError("cell index out of range");
  if (coords_[i] == 0) throw InputError("cannot remove cell " + std::to_string(i) + ": coordinate is zero");
  FrequencyVector r = *this;
  --r.coords_[i];
  return r;
}

FrequencyVector FrequencyVector::meet(const FrequencyVector& a, const FrequencyVector& b) {
  if (a.size() != b.size()) throw InputError("frequency vectors differ in length");
  FrequencyVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.coords_[i] = std::min(a.coords_[i], b.coords_[i]);
  return r;
}

std::int64_t l1_distance(const FrequencyVector& x, const FrequencyVector& y) {
  if (x.size() != y.size()) throw InputError("frequency vectors differ in length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t diff = checked_sub(x[i], y[i]);
    s = checked_add(s, diff < 0 ? -diff : diff);
  }
  return s;
}

}  // namespace mbasis
