#include "mbasis/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mbasis/checked.hpp"
#include "mbasis/error.hpp"

namespace mbasis {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row. Zero rows are dropped.
std::vector<std::size_t> reduce_rows(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

RationalMatrix to_rational(const IntMatrix& rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Rational> q;
    q.reserve(row.size());
    for (auto v : row) q.emplace_back(static_cast<long>(v));
    m.push_back(std::move(q));
  }
  return m;
}

std::size_t column_count(const IntMatrix& rows) { return rows.empty() ? 0 : rows.front().size(); }

std::string join_levels(std::span<const std::size_t> tuple, bool separate) {
  std::string s;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (separate && i > 0) s += ',';
    s += std::to_string(tuple[i] + 1);
  }
  return s;
}

// All level tuples in lexicographic order, last axis fastest.
std::vector<std::vector<std::size_t>> level_tuples(std::span<const std::size_t> levels) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(levels.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = levels.size();
    while (k > 0) {
      --k;
      if (++cur[k] < levels[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (levels.empty()) return out;
  }
}

void check_levels(const std::vector<std::size_t>& levels) {
  if (levels.empty()) throw InputError("model needs at least one axis");
  for (auto l : levels) {
    if (l == 0) throw InputError("every axis needs at least one level");
  }
}

ConfigMatrix build_independence(const IndependenceModel& m) {
  check_levels(m.levels);
  auto cells = level_tuples(m.levels);
  IntMatrix rows;
  rows.emplace_back(cells.size(), 1);
  for (std::size_t axis = 0; axis < m.levels.size(); ++axis) {
    for (std::size_t lvl = 0; lvl < m.levels[axis]; ++lvl) {
      std::vector<std::int64_t> row(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) row[c] = cells[c][axis] == lvl ? 1 : 0;
      rows.push_back(std::move(row));
    }
  }
  return ConfigMatrix(std::move(rows), table_cell_labels(m.levels));
}

ConfigMatrix build_hierarchical(const HierarchicalModel& m) {
  check_levels(m.levels);
  if (m.generators.empty()) throw InputError("hierarchical model needs at least one generator");
  auto cells = level_tuples(m.levels);
  IntMatrix rows;
  for (const auto& gen : m.generators) {
    if (gen.empty()) throw InputError("hierarchical generator is empty");
    std::set<std::size_t> seen;
    std::vector<std::size_t> sub_levels;
    for (auto axis : gen) {
      if (axis >= m.levels.size()) throw InputError("generator references a nonexistent axis");
      if (!seen.insert(axis).second) throw InputError("generator repeats an axis");
      sub_levels.push_back(m.levels[axis]);
    }
    for (const auto& combo : level_tuples(sub_levels)) {
      std::vector<std::int64_t> row(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        bool match = true;
        for (std::size_t k = 0; k < gen.size() && match; ++k) match = cells[c][gen[k]] == combo[k];
        row[c] = match ? 1 : 0;
      }
      rows.push_back(std::move(row));
    }
  }
  return ConfigMatrix(std::move(rows), table_cell_labels(m.levels));
}

ConfigMatrix build_hardy_weinberg(const HardyWeinbergModel& m) {
  if (m.alleles == 0) throw InputError("Hardy-Weinberg model needs at least one allele");
  const std::size_t n = m.alleles;
  const bool separate = n > 9;
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cells.emplace_back(i, j);
      const std::size_t pair[2] = {i, j};
      labels.push_back(join_levels(pair, separate));
    }
  }
  IntMatrix rows(n, std::vector<std::int64_t>(cells.size(), 0));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    rows[cells[c].first][c] += 1;
    rows[cells[c].second][c] += 1;
  }
  return ConfigMatrix(std::move(rows), std::move(labels));
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<std::vector<Rational>> find_grading(const IntMatrix& rows) {
  const std::size_t d = rows.size();
  const std::size_t p = column_count(rows);
  // Augmented system A^T w = 1: one equation per column of A.
  RationalMatrix sys(p, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < d; ++k) sys[i][k] = static_cast<long>(rows[k][i]);
    sys[i][d] = 1;
  }
  auto pivots = reduce_rows(sys, d + 1);
  std::vector<Rational> w(d, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == d) return std::nullopt;  // 0 = 1
    w[pivots[r]] = sys[r][d];
  }
  return w;
}

bool kernel_equal(const IntMatrix& a, const IntMatrix& b) {
  if (column_count(a) != column_count(b)) throw InputError("kernel_equal: column counts differ");
  auto ra = to_rational(a);
  auto rb = to_rational(b);
  reduce_rows(ra, column_count(a));
  reduce_rows(rb, column_count(b));
  return ra == rb;
}

std::size_t matrix_rank(const IntMatrix& rows) {
  auto m = to_rational(rows);
  return reduce_rows(m, column_count(rows)).size();
}

bool kernel_equal(const ConfigMatrix& a, const ConfigMatrix& b) {
  return kernel_equal(a.matrix(), b.matrix());
}

ConfigMatrix::ConfigMatrix(IntMatrix rows, std::vector<std::string> labels) {
  if (rows.empty()) throw InputError("configuration matrix needs at least one row");
  rows_ = rows.size();
  cols_ = rows.front().size();
  if (cols_ == 0) throw InputError("configuration matrix needs at least one column");
  bool negative = false;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("configuration matrix rows differ in length");
    for (auto v : row) {
      negative = negative || v < 0;
      entries_.push_back(v);
    }
  }
  columns_.resize(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) columns_[c * rows_ + r] = entries_[r * cols_ + c];
  }

  if (labels.empty()) {
    for (std::size_t c = 0; c < cols_; ++c) labels.push_back(std::to_string(c + 1));
  }
  if (labels.size() != cols_) throw InputError("need exactly one label per column");
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw InputError("cell labels must be distinct");
  labels_ = std::move(labels);

  grading_ = find_grading(rows);
  if (negative && !grading_) {
    throw InputError("matrix has negative entries and no grading; fibers may be infinite");
  }
}

IntMatrix ConfigMatrix::matrix() const {
  IntMatrix m(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  }
  return m;
}

std::size_t ConfigMatrix::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown cell label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::int64_t> ConfigMatrix::statistic(const FrequencyVector& x) const {
  return statistic(x.coords());
}

std::vector<std::int64_t> ConfigMatrix::statistic(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) throw InputError("vector length does not match the number of cells");
  std::vector<std::int64_t> t(rows_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c] == 0) continue;
    auto col = column(c);
    for (std::size_t r = 0; r < rows_; ++r) t[r] = checked_add(t[r], checked_mul(col[r], x[c]));
  }
  return t;
}

void ConfigMatrix::require_grading() const {
  if (!grading_) throw NoGradingError("configuration matrix has no grading (A^T w = 1 is unsolvable)");
}

std::optional<std::int64_t> ConfigMatrix::degree_of(std::span<const std::int64_t> t) const {
  require_grading();
  if (t.size() != rows_) throw InputError("statistic length does not match the number of rows");
  Rational s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*grading_)[r] * Rational(static_cast<long>(t[r]));
  if (s.get_den() != 1 || s < 0) return std::nullopt;
  if (!s.get_num().fits_slong_p()) throw OverflowError("fiber degree exceeds int64");
  return s.get_num().get_si();
}

std::string ConfigMatrix::monomial(const FrequencyVector& x) const {
  if (x.size() != cols_) throw InputError("vector length does not match the number of cells");
  std::string s;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'u';
    s += labels_[c];
    if (x[c] > 1) s += '^' + std::to_string(x[c]);
  }
  return s.empty() ? "1" : s;
}

FrequencyVector ConfigMatrix::parse_monomial(const std::string& text) const {
  std::vector<std::int64_t> x(cols_, 0);
  if (text == "1") return FrequencyVector(std::move(x));
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor.size() < 2 || factor[0] != 'u') throw InputError("bad monomial factor '" + factor + "'");
    std::string label = factor.substr(1);
    std::int64_t power = 1;
    if (auto caret = label.find('^'); caret != std::string::npos) {
      try {
        std::size_t used = 0;
        power = std::stoll(label.substr(caret + 1), &used);
        if (used != label.size() - caret - 1 || power < 1) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("bad exponent in '" + factor + "'");
      }
      label.resize(caret);
    }
    auto& slot = x[index_of(label)];
    slot = checked_add(slot, power);
  }
  return FrequencyVector(std::move(x));
}

ConfigMatrix remove_structural_zero(const ConfigMatrix& a, const std::string& cell) {
  const std::size_t drop = a.index_of(cell);
  if (a.cols() == 1) throw InputError("cannot remove the only cell");
  IntMatrix rows = a.matrix();
  for (auto& row : rows) row.erase(row.begin() + static_cast<std::ptrdiff_t>(drop));
  auto labels = a.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(drop));
  return ConfigMatrix(std::move(rows), std::move(labels));
}

std::vector<std::string> table_cell_labels(std::span<const std::size_t> levels) {
  const bool separate = std::any_of(levels.begin(), levels.end(), [](auto l) { return l > 9; });
  std::vector<std::string> labels;
  for (const auto& t : level_tuples(levels)) labels.push_back(join_levels(t, separate));
  return labels;
}

ConfigMatrix build(const ModelSpec& spec) {
  ConfigMatrix a = std::visit(
      [](const auto& m) -> ConfigMatrix {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ExplicitModel>) {
          return ConfigMatrix(m.matrix);
        } else if constexpr (std::is_same_v<T, IndependenceModel>) {
          return build_independence(m);
        } else if constexpr (std::is_same_v<T, HierarchicalModel>) {
          return build_hierarchical(m);
        } else {
          return build_hardy_weinberg(m);
        }
      },
      spec.kind);
  for (const auto& cell : spec.structural_zeros) a = remove_structural_zero(a, cell);
  return a;
}

// ---------------------------------------------------------------------------
// JSON model specs

namespace {

using nlohmann::json;

template <typename T>
T get_field(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("model field '") + key + "': " + e.what());
  }
}

std::vector<std::size_t> get_levels(const json& doc) {
  auto raw = get_field<std::vector<std::int64_t>>(doc, "levels");
  std::vector<std::size_t> levels;
  for (auto l : raw) {
    if (l < 1) throw InputError("levels must be positive");
    levels.push_back(static_cast<std::size_t>(l));
  }
  return levels;
}

}  // namespace

ModelSpec parse_model_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("model file must be a JSON object");

  const auto kind = get_field<std::string>(doc, "kind");
  static const std::map<std::string, std::set<std::string>> required = {
      {"explicit", {"matrix"}},
      {"independence", {"levels"}},
      {"hierarchical", {"levels", "generators"}},
      {"hardy_weinberg", {"alleles"}},
  };
  auto req = required.find(kind);
  if (req == required.end()) throw InputError("unknown model kind '" + kind + "'");
  for (const auto& key : req->second) {
    if (!doc.contains(key)) throw InputError("model kind '" + kind + "' requires field '" + key + "'");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key == "kind" || key == "structural_zeros" || req->second.count(key)) continue;
    throw InputError("field '" + key + "' is not allowed for model kind '" + kind + "'");
  }

  ModelSpec spec;
  if (kind == "explicit") {
    spec.kind = ExplicitModel{get_field<IntMatrix>(doc, "matrix")};
  } else if (kind == "independence") {
    spec.kind = IndependenceModel{get_levels(doc)};
  } else if (kind == "hierarchical") {
    HierarchicalModel m{get_levels(doc), {}};
    for (const auto& gen : get_field<std::vector<std::vector<std::int64_t>>>(doc, "generators")) {
      std::vector<std::size_t> g;
      for (auto axis : gen) {
        if (axis < 1 || static_cast<std::size_t>(axis) > m.levels.size()) {
          throw InputError("generator axis " + std::to_string(axis) + " out of range");
        }
        g.push_back(static_cast<std::size_t>(axis - 1));
      }
      m.generators.push_back(std::move(g));
    }
    spec.kind = std::move(m);
  } else {
    auto alleles = get_field<std::int64_t>(doc, "alleles");
    if (alleles < 1) throw InputError("alleles must be positive");
    spec.kind = HardyWeinbergModel{static_cast<std::size_t>(alleles)};
  }
  if (doc.contains("structural_zeros")) {
    spec.structural_zeros = get_field<std::vector<std::string>>(doc, "structural_zeros");
  }
  return spec;
}

ModelSpec load_model_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_spec(ss.str());
}

}  // namespace mbasis
