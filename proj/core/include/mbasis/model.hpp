#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mbasis/frequency_vector.hpp"

namespace mbasis {

using Rational = mpq_class;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Exact rational solution w of A^T w = 1 (all ones), or nullopt when none exists.
///
/// The solution is canonical: reduced row echelon form of the augmented system
/// with every free variable set to zero.
std::optional<std::vector<Rational>> find_grading(const IntMatrix& rows);

/// True iff the two matrices have the same integer kernel, decided by comparing
/// reduced row echelon forms over the rationals. Throws InputError on a column
/// count mismatch.
bool kernel_equal(const IntMatrix& a, const IntMatrix& b);

/// Rank over the rationals.
std::size_t matrix_rank(const IntMatrix& rows);

/// The d x p configuration matrix defining the sufficient statistic t = Ax.
///
/// Immutable after construction. Every column carries a distinct label
/// ("1121" for a level tuple, "12" for a genotype). A grading is searched
/// for at construction; matrices with a negative entry and no grading are
/// rejected because their fibers need not be finite.
class ConfigMatrix {
 public:
  /// Labels default to "1".."p".
  explicit ConfigMatrix(IntMatrix rows, std::vector<std::string> labels = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Column c as a contiguous d-vector.
  std::span<const std::int64_t> column(std::size_t c) const {
    return {columns_.data() + c * rows_, rows_};
  }
  IntMatrix matrix() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t c) const { return labels_.at(c); }
  /// Index of the column with this label; throws InputError if unknown.
  std::size_t index_of(const std::string& label) const;

  const std::optional<std::vector<Rational>>& grading() const noexcept { return grading_; }
  bool has_grading() const noexcept { return grading_.has_value(); }

  /// Sufficient statistic Ax, with checked arithmetic.
  std::vector<std::int64_t> statistic(const FrequencyVector& x) const;
  std::vector<std::int64_t> statistic(std::span<const std::int64_t> x) const;

  /// Degree w^T t of a statistic. nullopt when w^T t is not a nonnegative
  /// integer (the fiber is then empty). Throws NoGradingError without grading.
  std::optional<std::int64_t> degree_of(std::span<const std::int64_t> t) const;

  /// Throws NoGradingError when the matrix has no grading.
  void require_grading() const;

  /// Human-readable monomial, e.g. "u111^2*u122". The zero vector prints as "1".
  std::string monomial(const FrequencyVector& x) const;
  /// Inverse of monomial(): "u111^2*u122" or "1". Throws InputError.
  FrequencyVector parse_monomial(const std::string& text) const;

  friend bool operator==(const ConfigMatrix& a, const ConfigMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> entries_;  // row-major
  std::vector<std::int64_t> columns_;  // column-major copy
  std::vector<std::string> labels_;
  std::optional<std::vector<Rational>> grading_;
};

bool kernel_equal(const ConfigMatrix& a, const ConfigMatrix& b);

/// Deletes the column labelled `cell`. Throws InputError if the label is unknown.
ConfigMatrix remove_structural_zero(const ConfigMatrix& a, const std::string& cell);

// ---------------------------------------------------------------------------
// Model specifications

struct ExplicitModel {
  IntMatrix matrix;
};

/// Complete independence over axes with the given level counts.
struct IndependenceModel {
  std::vector<std::size_t> levels;
};

/// Hierarchical log-linear model; generators hold 0-based axis indices.
struct HierarchicalModel {
  std::vector<std::size_t> levels;
  std::vector<std::vector<std::size_t>> generators;
};

struct HardyWeinbergModel {
  std::size_t alleles = 0;
};

struct ModelSpec {
  std::variant<ExplicitModel, IndependenceModel, HierarchicalModel, HardyWeinbergModel> kind;
  std::vector<std::string> structural_zeros;
};

/// Builds the configuration matrix of a model, then deletes structural zeros.
ConfigMatrix build(const ModelSpec& spec);

/// Cell labels of a full contingency table in lexicographic level order.
std::vector<std::string> table_cell_labels(std::span<const std::size_t> levels);

/// Parses the JSON model-spec format (see README). Throws InputError.
ModelSpec parse_model_spec(const std::string& json_text);
ModelSpec load_model_spec(const std::string& path);

}  // namespace mbasis
