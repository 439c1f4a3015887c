#include "mbasis/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mbasis/error.hpp"

namespace mbasis::oracle {

namespace {

using Vec = std::vector<std::int64_t>;

// All x in N^p with |x| = n, recursively.
void compositions(std::size_t p, std::int64_t n, Vec& x, std::size_t pos, std::vector<Vec>& out) {
  if (pos + 1 == p) {
    x[pos] = n;
    out.push_back(x);
    x[pos] = 0;
    return;
  }
  for (std::int64_t v = 0; v <= n; ++v) {
    x[pos] = v;
    compositions(p, n - v, x, pos + 1, out);
  }
  x[pos] = 0;
}

std::vector<Vec> all_of_degree(std::size_t p, std::int64_t n) {
  std::vector<Vec> out;
  Vec x(p, 0);
  compositions(p, n, x, 0, out);
  return out;
}

Vec times(const ConfigMatrix& a, const Vec& x) {
  Vec t(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t[r] += a.at(r, c) * x[c];
  }
  return t;
}

// Fiber table: t -> elements, for every degree 0..max_degree.
std::map<Vec, std::vector<Vec>> fiber_table(const ConfigMatrix& a, std::int64_t max_degree,
                                            std::uint64_t max_monomials) {
  if (!a.grading()) throw NoGradingError("oracle needs a graded matrix");
  std::map<Vec, std::vector<Vec>> table;
  std::uint64_t seen = 0;
  for (std::int64_t n = 0; n <= max_degree; ++n) {
    for (auto& x : all_of_degree(a.cols(), n)) {
      if (++seen > max_monomials) throw BudgetExceeded("oracle table over budget");
      table[times(a, x)].push_back(std::move(x));
    }
  }
  return table;
}

std::size_t table_size(const std::map<Vec, std::vector<Vec>>& table, const Vec& t) {
  auto it = table.find(t);
  return it == table.end() ? 0 : it->second.size();
}

std::int64_t total(const Vec& x) {
  std::int64_t s = 0;
  for (auto v : x) s += v;
  return s;
}

}  // namespace

std::vector<FrequencyVector> brute_fiber(const ConfigMatrix& a, std::span<const std::int64_t> t) {
  if (!a.grading()) throw NoGradingError("oracle needs a graded matrix");
  if (t.size() != a.rows()) throw InputError("statistic length does not match the number of rows");
  Rational deg = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) deg += (*a.grading())[r] * Rational(static_cast<long>(t[r]));
  if (deg < 0 || deg.get_den() != 1) return {};
  const Vec target(t.begin(), t.end());
  std::vector<FrequencyVector> out;
  for (auto& x : all_of_degree(a.cols(), deg.get_num().get_si())) {
    if (times(a, x) == target) out.emplace_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<std::pair<Vec, std::vector<FrequencyVector>>> brute_fibers_of_degree(const ConfigMatrix& a,
                                                                                 std::int64_t n) {
  std::map<Vec, std::vector<FrequencyVector>> groups;
  for (auto& x : all_of_degree(a.cols(), n)) {
    auto t = times(a, x);
    groups[t].emplace_back(std::move(x));
  }
  std::vector<std::pair<Vec, std::vector<FrequencyVector>>> out;
  for (auto& [t, elems] : groups) {
    std::sort(elems.begin(), elems.end(), std::greater<>());
    out.emplace_back(t, std::move(elems));
  }
  return out;
}

std::vector<FrequencyVector> brute_indispensable_monomials(const ConfigMatrix& a, std::int64_t max_degree,
                                                           std::uint64_t max_monomials) {
  const auto table = fiber_table(a, max_degree, max_monomials);
  std::vector<FrequencyVector> out;
  for (const auto& [t, elems] : table) {
    if (elems.size() < 2) continue;
    for (const auto& x : elems) {
      bool minimal = true;
      for (std::size_t i = 0; i < x.size() && minimal; ++i) {
        if (x[i] == 0) continue;
        Vec y = x;
        --y[i];
        minimal = table_size(table, times(a, y)) == 1;
      }
      if (minimal) out.emplace_back(x);
    }
  }
  std::sort(out.begin(), out.end(), [](const FrequencyVector& p, const FrequencyVector& q) {
    if (total(p.vec()) != total(q.vec())) return total(p.vec()) < total(q.vec());
    return p > q;
  });
  return out;
}

std::vector<Move> brute_two_element_fibers(const ConfigMatrix& a, std::int64_t max_degree,
                                           std::uint64_t max_monomials) {
  const auto table = fiber_table(a, max_degree, max_monomials);
  std::set<Vec> found;
  for (const auto& [t, elems] : table) {
    if (elems.size() != 2) continue;
    Vec z(a.cols()), plus(a.cols()), minus(a.cols());
    for (std::size_t i = 0; i < z.size(); ++i) {
      z[i] = elems[0][i] - elems[1][i];
      plus[i] = std::max<std::int64_t>(z[i], 0);
      minus[i] = std::max<std::int64_t>(-z[i], 0);
    }
    auto it = table.find(times(a, plus));
    if (it == table.end() || it->second.size() != 2) continue;
    const auto& pair = it->second;
    if ((pair[0] == plus && pair[1] == minus) || (pair[0] == minus && pair[1] == plus)) {
      if (z < Vec(z.size(), 0)) {
        for (auto& v : z) v = -v;
      }
      found.insert(z);
    }
  }
  std::vector<Move> out;
  for (const auto& z : found) out.emplace_back(z);
  std::sort(out.begin(), out.end(), [](const Move& p, const Move& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    return p < q;
  });
  return out;
}

}  // namespace mbasis::oracle
