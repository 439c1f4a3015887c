#pragma once

// Reference matrices, bundled model loading, and the
// random graded-matrix generator shared by the property suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mbasis/fiber.hpp"
#include "mbasis/indispensable.hpp"
#include "mbasis/model.hpp"

namespace mbasis::testing {

inline std::string model_path(const std::string& name) {
  return std::string(MBASIS_MODELS_DIR) + "/" + name;
}

inline ConfigMatrix load_model(const std::string& name) {
  return build(load_model_spec(model_path(name)));
}

inline const std::vector<std::string>& bundled_models() {
  static const std::vector<std::string> names = {
      "oneway3.json", "indep22.json",       "indep222.json",           "indepIJK.json",
      "hw4.json",     "m12-13-23-34.json", "m12-13-23-34-zero.json", "identity3.json"};
  return names;
}

// Complete independence of 2x2x2 tables, corner parameterization.
inline IntMatrix reference_indep222() {
  return {{1, 1, 1, 1, 1, 1, 1, 1},
          {1, 1, 1, 1, 0, 0, 0, 0},
          {1, 1, 0, 0, 1, 1, 0, 0},
          {1, 0, 1, 0, 1, 0, 1, 0}};
}

// 12/13/23/34 model of 2x2x2x2 tables, d = 9.
inline IntMatrix reference_m12() {
  return {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
          {1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
          {1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0},
          {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
          {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}};
}

// The same model with cell 1111 removed.
inline IntMatrix reference_m12_zero() {
  return {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
          {1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
          {1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0},
          {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
          {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}};
}

inline ConfigMatrix oneway(std::size_t p) {
  return ConfigMatrix(IntMatrix{std::vector<std::int64_t>(p, 1)});
}

inline ConfigMatrix identity(std::size_t p) {
  IntMatrix m(p, std::vector<std::int64_t>(p, 0));
  for (std::size_t i = 0; i < p; ++i) m[i][i] = 1;
  return ConfigMatrix(std::move(m));
}

inline std::vector<FrequencyVector> monomials(const ConfigMatrix& a, const std::vector<std::string>& texts) {
  std::vector<FrequencyVector> out;
  for (const auto& s : texts) out.push_back(a.parse_monomial(s));
  return out;
}

template <typename T, typename Cmp = std::less<>>
std::vector<T> sorted(std::vector<T> v, Cmp cmp = {}) {
  std::sort(v.begin(), v.end(), cmp);
  return v;
}

/// A graded random matrix with p columns, d rows, entries in 0..2.
///
/// Half of the draws force a constant column sum of 2 (grading 1/2 on every
/// row); the others are uniform draws with one row overwritten by ones.
/// Duplicate columns are legitimate and exercise degree-1 moves.
inline ConfigMatrix random_graded_matrix(std::uint64_t seed, std::size_t p, std::size_t d) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0;; ++attempt) {
    IntMatrix m(d, std::vector<std::int64_t>(p, 0));
    if ((seed + attempt) % 2 == 0 && d >= 2) {
      for (std::size_t c = 0; c < p; ++c) {
        // Place two units in the column.
        for (int u = 0; u < 2; ++u) m[draw_index(rng, d)][c] += 1;
      }
    } else {
      for (auto& row : m) {
        for (auto& v : row) v = static_cast<std::int64_t>(draw_index(rng, 3));
      }
      auto& total = m[draw_index(rng, d)];
      std::fill(total.begin(), total.end(), 1);
    }
    if (find_grading(m)) return ConfigMatrix(std::move(m));
  }
}

}  // namespace mbasis::testing
