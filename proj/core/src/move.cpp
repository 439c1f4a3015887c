#include "mbasis/move.hpp"

#include <algorithm>

#include "mbasis/checked.hpp"
#include "mbasis/error.hpp"

namespace mbasis {

Move::Move(std::vector<std::int64_t> z) : z_(std::move(z)) {
  auto first = std::find_if(z_.begin(), z_.end(), [](auto v) { return v != 0; });
  if (first == z_.end()) throw InputError("a move must be nonzero");
  if (*first < 0) {
    for (auto& v : z_) v = checked_sub(0, v);
  }
}

Move Move::between(const FrequencyVector& x, const FrequencyVector& y) {
  if (x.size() != y.size()) throw InputError("frequency vectors differ in length");
  std::vector<std::int64_t> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = checked_sub(x[i], y[i]);
  return Move(std::move(z));
}

Move Move::from_parts(const FrequencyVector& plus, const FrequencyVector& minus) {
  if (plus.size() != minus.size()) throw InputError("move parts differ in length");
  for (std::size_t i = 0; i < plus.size(); ++i) {
    if (plus[i] != 0 && minus[i] != 0) throw InputError("move parts must have disjoint supports");
  }
  return between(plus, minus);
}

FrequencyVector Move::plus() const {
  std::vector<std::int64_t> v(z_.size());
  for (std::size_t i = 0; i < z_.size(); ++i) v[i] = z_[i] > 0 ? z_[i] : 0;
  return FrequencyVector(std::move(v));
}

FrequencyVector Move::minus() const {
  std::vector<std::int64_t> v(z_.size());
  for (std::size_t i = 0; i < z_.size(); ++i) v[i] = z_[i] < 0 ? -z_[i] : 0;
  return FrequencyVector(std::move(v));
}

std::int64_t Move::degree() const { return plus().degree(); }

bool Move::is_move_for(const ConfigMatrix& a) const {
  if (z_.size() != a.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) s = checked_add(s, checked_mul(a.at(r, c), z_[c]));
    if (s != 0) return false;
  }
  return plus().degree() == minus().degree();
}

void Move::validate(const ConfigMatrix& a) const {
  if (z_.size() != a.cols()) throw InputError("move length does not match the number of cells");
  if (!is_move_for(a)) throw InputError("vector is not a move: Az != 0");
}

std::string binomial_string(const ConfigMatrix& a, const Move& m) {
  return a.monomial(m.plus()) + " - " + a.monomial(m.minus());
}

}  // namespace mbasis
