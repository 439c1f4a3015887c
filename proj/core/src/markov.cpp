#include "mbasis/markov.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mbasis/checked.hpp"
#include "mbasis/error.hpp"
#include "mbasis/union_find.hpp"

namespace mbasis {

namespace {

using Catalog = std::vector<Fiber>;

bool multi_class(const Fiber& f) { return f.partition && f.partition->size() >= 2; }

std::vector<Move> minimum_fiber_moves(const Fiber& f) {
  std::vector<Move> out;
  const auto& blocks = *f.partition;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      for (auto i : blocks[a]) {
        for (auto j : blocks[b]) out.push_back(Move::between(f.elements[i], f.elements[j]));
      }
    }
  }
  return out;
}

std::vector<Move> two_element_moves(const Catalog& fibers) {
  std::vector<Move> out;
  for (const auto& f : fibers) {
    if (f.size() != 2) continue;
    if (!FrequencyVector::meet(f.elements[0], f.elements[1]).is_zero()) continue;
    out.push_back(Move::between(f.elements[0], f.elements[1]));
  }
  return out;
}

bool catalog_unique(const Catalog& fibers) {
  return std::all_of(fibers.begin(), fibers.end(),
                     [](const Fiber& f) { return f.partition->size() == 1 || f.size() == 2; });
}

struct PreparedMove {
  FrequencyVector plus;
  FrequencyVector minus;
  std::int64_t degree;
  std::span<const std::int64_t> z;
};

std::vector<PreparedMove> prepare(const FiberEngine& engine, std::span<const Move> moves) {
  std::vector<PreparedMove> out;
  out.reserve(moves.size());
  for (const auto& m : moves) {
    m.validate(engine.matrix());
    out.push_back({m.plus(), m.minus(), m.degree(), m.z()});
  }
  return out;
}

FrequencyVector step(const FrequencyVector& x, std::span<const std::int64_t> z, int sign) {
  std::vector<std::int64_t> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = sign > 0 ? x[i] + z[i] : x[i] - z[i];
  return FrequencyVector(std::move(y));
}

VerifyResult verify_catalog(const Catalog& fibers, const std::vector<PreparedMove>& moves,
                            std::int64_t max_degree) {
  VerifyResult res;
  res.degree_bound = max_degree;
  for (const auto& f : fibers) {
    if (f.size() < 2) continue;
    UnionFind uf(f.size());
    for (std::size_t i = 0; i < f.size() && uf.components() > 1; ++i) {
      const auto& x = f.elements[i];
      for (const auto& m : moves) {
        if (m.degree > f.degree || !x.dominates(m.minus)) continue;
        auto j = f.index_of(step(x, m.z, +1));
        if (!j) throw InvariantViolation("applicable move left its fiber");
        uf.unite(i, *j);
      }
    }
    if (uf.components() > 1) {
      res.connected = false;
      Fiber w = f;
      w.partition = uf.blocks();
      res.witness = std::move(w);
      return res;
    }
  }
  return res;
}

CaseVerdict classify_catalog(const Catalog& fibers) {
  CaseVerdict v;
  if (catalog_unique(fibers)) {
    v.case_number = 1;
    return v;
  }
  v.case_number = 2;
  for (const auto& f : fibers) {
    if (!multi_class(f)) continue;
    for (const auto& block : *f.partition) {
      if (block.size() > 1) {
        ClassEvidence e{f.t, {}};
        for (auto i : block) e.members.push_back(f.elements[i]);
        v.case_number = 3;
        v.evidence = std::move(e);
        return v;
      }
    }
  }
  return v;
}

}  // namespace

std::vector<Fiber> partitioned_fibers(const FiberEngine& engine, std::int64_t max_degree, Budget budget) {
  if (max_degree < 1) throw InputError("max_degree must be at least 1");
  std::vector<Fiber> out;
  std::uint64_t used = 0;
  for (std::int64_t n = 1; n <= max_degree; ++n) {
    if (used > budget.max_monomials) throw BudgetExceeded("fiber sweep exceeded the monomial budget");
    auto fibers = engine.fibers_of_degree(n, Budget{budget.max_monomials - used});
    used += monomial_count(engine.cells(), n);
    for (auto& f : fibers) {
      f.partition = lower_degree_classes(f);
      out.push_back(std::move(f));
    }
  }
  return out;
}

MinimumFiberBasis minimum_fiber_basis(const FiberEngine& engine, std::int64_t max_degree, Budget budget) {
  MinimumFiberBasis mf;
  for (auto& f : partitioned_fibers(engine, max_degree, budget)) {
    if (!multi_class(f)) continue;
    auto moves = minimum_fiber_moves(f);
    mf.moves.insert(mf.moves.end(), moves.begin(), moves.end());
    mf.fibers.push_back(std::move(f));
  }
  return mf;
}

MarkovBasisReport minimal_markov_basis(const FiberEngine& engine, std::int64_t max_degree, Budget budget) {
  const auto fibers = partitioned_fibers(engine, max_degree, budget);
  MarkovBasisReport rep;
  rep.degree_bound = max_degree;

  for (const auto& f : fibers) {
    if (!multi_class(f)) continue;
    const auto& blocks = *f.partition;
    rep.minimum_fiber_fibers.push_back({f.t, f.degree, f.size(), blocks.size()});
    const auto& root = f.elements[blocks.front().front()];
    for (std::size_t b = 1; b < blocks.size(); ++b) {
      const auto& rep_b = f.elements[blocks[b].front()];
      rep.moves.push_back({Move::between(root, rep_b), {f.t, root, rep_b}});
    }
  }

  rep.indispensable_moves = two_element_moves(fibers);
  rep.unique_minimal = catalog_unique(fibers);
  rep.verdict = classify_catalog(fibers);

  std::vector<Move> selected;
  for (const auto& bm : rep.moves) selected.push_back(bm.move);
  rep.verification = verify_catalog(fibers, prepare(engine, selected), max_degree);
  if (!rep.verification.connected) {
    throw InvariantViolation("selected minimal basis fails bounded verification");
  }
  const bool idp_basis =
      verify_catalog(fibers, prepare(engine, rep.indispensable_moves), max_degree).connected;
  if (idp_basis != rep.unique_minimal) {
    throw InvariantViolation("uniqueness test disagrees with the indispensable-move basis test");
  }
  return rep;
}

VerifyResult verify_markov_basis(const FiberEngine& engine, std::span<const Move> moves,
                                 std::int64_t max_degree, Budget budget) {
  auto prepared = prepare(engine, moves);
  if (max_degree < 1) throw InputError("max_degree must be at least 1");
  Catalog fibers;
  std::uint64_t used = 0;
  for (std::int64_t n = 1; n <= max_degree; ++n) {
    auto batch = engine.fibers_of_degree(n, Budget{budget.max_monomials - used});
    used += monomial_count(engine.cells(), n);
    fibers.insert(fibers.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return verify_catalog(fibers, prepared, max_degree);
}

bool indispensable_moves_form_basis(const FiberEngine& engine, std::int64_t max_degree, Budget budget) {
  const auto fibers = partitioned_fibers(engine, max_degree, budget);
  return verify_catalog(fibers, prepare(engine, two_element_moves(fibers)), max_degree).connected;
}

bool unique_minimal(const FiberEngine& engine, std::int64_t max_degree, Budget budget) {
  return catalog_unique(partitioned_fibers(engine, max_degree, budget));
}

CaseVerdict classify_case(const FiberEngine& engine, std::int64_t max_degree, Budget budget) {
  return classify_catalog(partitioned_fibers(engine, max_degree, budget));
}

NormResult is_one_norm_reducing(const FiberEngine& engine, std::span<const Move> moves,
                                std::int64_t max_degree, Budget budget) {
  auto prepared = prepare(engine, moves);
  NormResult res;
  res.degree_bound = max_degree;

  auto improves = [&](const FrequencyVector& from, const FrequencyVector& target, std::int64_t dist) {
    for (const auto& m : prepared) {
      if (from.dominates(m.minus) && l1_distance(step(from, m.z, +1), target) < dist) return true;
      if (from.dominates(m.plus) && l1_distance(step(from, m.z, -1), target) < dist) return true;
    }
    return false;
  };

  if (max_degree < 1) throw InputError("max_degree must be at least 1");
  std::uint64_t used = 0;
  for (std::int64_t n = 1; n <= max_degree; ++n) {
    auto fibers = engine.fibers_of_degree(n, Budget{budget.max_monomials - used});
    used += monomial_count(engine.cells(), n);
    for (const auto& f : fibers) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          const auto& x = f.elements[i];
          const auto& y = f.elements[j];
          const auto dist = l1_distance(x, y);
          if (improves(x, y, dist) || improves(y, x, dist)) continue;
          res.reducing = false;
          res.witness = NormWitness{f.t, x, y};
          return res;
        }
      }
    }
  }
  return res;
}

bool is_minimal_multi_element_fiber(const FiberEngine& engine, std::span<const std::int64_t> t) {
  const auto& a = engine.matrix();
  const Fiber f = engine.enumerate(t);
  if (f.size() < 2) return false;
  if (f.degree == 1) return true;

  std::set<std::vector<std::int64_t>> tried;
  for (const auto& x : f.elements) {
    // Mixed-radix walk over 0 <= sub <= x, skipping 0 and x itself.
    std::vector<std::int64_t> sub(x.size(), 0);
    while (true) {
      std::size_t k = 0;
      while (k < sub.size() && sub[k] == x[k]) sub[k++] = 0;
      if (k == sub.size()) break;
      ++sub[k];
      if (std::equal(sub.begin(), sub.end(), x.coords().begin())) continue;
      auto t1 = a.statistic(std::span<const std::int64_t>(sub));
      if (!tried.insert(t1).second) continue;
      std::vector<std::int64_t> t2(t.size());
      for (std::size_t r = 0; r < t.size(); ++r) t2[r] = checked_sub(t[r], t1[r]);
      if (engine.size(t1, 2) != 1 || engine.size(t2, 2) != 1) return false;
    }
  }
  return true;
}

}  // namespace mbasis
