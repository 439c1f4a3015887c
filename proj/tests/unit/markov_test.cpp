#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "mbasis/error.hpp"
#include "mbasis/indispensable.hpp"
#include "mbasis/markov.hpp"
#include "mbasis/union_find.hpp"

namespace mbasis {
namespace {

using testing::load_model;

Move binomial(const ConfigMatrix& a, const std::string& plus, const std::string& minus) {
  return Move::from_parts(a.parse_monomial(plus), a.parse_monomial(minus));
}

std::vector<Move> selected_moves(const MarkovBasisReport& r) {
  std::vector<Move> out;
  for (const auto& bm : r.moves) out.push_back(bm.move);
  return out;
}

std::set<std::string> strings(const ConfigMatrix& a, const std::vector<FrequencyVector>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(a.monomial(x));
  return out;
}

// u_{ii} u_{jk} - u_{ij} u_{ik} and u_{ii} u_{jj} - u_{ij}^2, plus the three
// moves inside the fiber {u12 u34, u13 u24, u14 u23}.
std::set<Move> hardy_weinberg_idp_and_star(const ConfigMatrix& a) {
  auto g = [](std::size_t i, std::size_t j) {
    return "u" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
  };
  std::set<Move> out;
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      for (std::size_t k = j + 1; k <= 4; ++k) {
        if (j != i && k != i) out.insert(binomial(a, g(i, i) + "*" + g(j, k), g(i, j) + "*" + g(i, k)));
      }
    }
    for (std::size_t j = i + 1; j <= 4; ++j) out.insert(binomial(a, g(i, i) + "*" + g(j, j), g(i, j) + "^2"));
  }
  out.insert(binomial(a, "u12*u34", "u13*u24"));
  out.insert(binomial(a, "u12*u34", "u14*u23"));
  out.insert(binomial(a, "u13*u24", "u14*u23"));
  return out;
}

TEST(MinimumFiberBasis, HardyWeinbergIsIndispensablePlusStar) {
  auto a = load_model("hw4.json");
  FiberEngine e(a);
  auto mf = minimum_fiber_basis(e, 2);
  EXPECT_EQ(mf.moves.size(), 21u);
  EXPECT_EQ(std::set<Move>(mf.moves.begin(), mf.moves.end()), hardy_weinberg_idp_and_star(a));
  std::size_t two = 0, three = 0;
  for (const auto& f : mf.fibers) {
    ASSERT_TRUE(f.partition);
    if (f.size() == 2) ++two;
    if (f.size() == 3) {
      ++three;
      EXPECT_EQ(f.partition->size(), 3u);
    }
  }
  EXPECT_EQ(two, 18u);
  EXPECT_EQ(three, 1u);
}

TEST(MinimumFiberBasis, IndependenceConnectsTheFourElementFiberCompletely) {
  auto a = load_model("indep222.json");
  FiberEngine e(a);
  auto mf = minimum_fiber_basis(e, 2);
  ASSERT_EQ(mf.fibers.size(), 7u);
  std::size_t four = 0;
  for (const auto& f : mf.fibers) {
    if (f.size() == 4) {
      ++four;
      EXPECT_EQ(f.partition->size(), 4u);
    } else {
      EXPECT_EQ(f.size(), 2u);
    }
  }
  EXPECT_EQ(four, 1u);
  EXPECT_EQ(mf.moves.size(), 6u + 6u);
}

TEST(MinimumFiberBasis, IdentityIsEmpty) {
  FiberEngine e(testing::identity(3));
  auto mf = minimum_fiber_basis(e, 4);
  EXPECT_TRUE(mf.fibers.empty());
  EXPECT_TRUE(mf.moves.empty());
}

TEST(MinimalBasis, OneWayIsAStarFromTheFirstCell) {
  for (std::size_t p : {3u, 4u, 5u}) {
    SCOPED_TRACE(p);
    FiberEngine e(testing::oneway(p));
    auto r = minimal_markov_basis(e, 3);
    ASSERT_EQ(r.moves.size(), p - 1);
    for (std::size_t j = 1; j < p; ++j) {
      std::vector<std::int64_t> z(p, 0);
      z[0] = 1;
      z[j] = -1;
      EXPECT_EQ(r.moves[j - 1].move, Move(z));
    }
    EXPECT_TRUE(r.verification.connected);
    EXPECT_FALSE(r.unique_minimal);
    EXPECT_EQ(r.verdict.case_number, 2);
    EXPECT_TRUE(r.indispensable_moves.empty());
  }
}

TEST(MinimalBasis, TwoByTwoIndependenceIsTheSingleMove) {
  auto a = load_model("indep22.json");
  FiberEngine e(a);
  auto r = minimal_markov_basis(e, 4);
  ASSERT_EQ(r.moves.size(), 1u);
  EXPECT_EQ(r.moves[0].move, binomial(a, "u11*u22", "u12*u21"));
  EXPECT_TRUE(r.unique_minimal);
  EXPECT_EQ(r.verdict.case_number, 1);
  EXPECT_EQ(r.indispensable_moves, selected_moves(r));
}

TEST(MinimalBasis, IndependenceIsIndispensablePlusThreeStarMoves) {
  auto a = load_model("indep222.json");
  FiberEngine e(a);
  auto r = minimal_markov_basis(e, 3);
  EXPECT_EQ(r.indispensable_moves.size(), 6u);
  ASSERT_EQ(r.moves.size(), 9u);
  std::set<Move> idp(r.indispensable_moves.begin(), r.indispensable_moves.end());
  std::size_t star = 0;
  for (const auto& bm : r.moves) {
    if (idp.count(bm.move)) continue;
    ++star;
    EXPECT_EQ(bm.move.plus(), a.parse_monomial("u111*u222"));
    EXPECT_EQ(bm.provenance.from, a.parse_monomial("u111*u222"));
  }
  EXPECT_EQ(star, 3u);
}

TEST(MinimalBasis, HardyWeinbergHasNoMovesAboveDegreeTwo) {
  auto a = load_model("hw4.json");
  FiberEngine e(a);
  auto r2 = minimal_markov_basis(e, 2);
  auto r4 = minimal_markov_basis(e, 4);
  EXPECT_EQ(r2.moves.size(), 20u);
  EXPECT_EQ(selected_moves(r2), selected_moves(r4));
  EXPECT_EQ(r4.degree_bound, 4);
}

TEST(MinimalBasis, TreeArithmeticAndProvenance) {
  for (const auto& name : testing::bundled_models()) {
    SCOPED_TRACE(name);
    auto a = load_model(name);
    FiberEngine e(a);
    const std::int64_t n = a.cols() > 10 ? 4 : 3;
    auto r = minimal_markov_basis(e, n);
    std::map<std::vector<std::int64_t>, std::vector<const BasisMove*>> per_fiber;
    for (const auto& bm : r.moves) {
      EXPECT_TRUE(bm.move.is_move_for(a));
      EXPECT_EQ(Move::between(bm.provenance.from, bm.provenance.to), bm.move);
      per_fiber[bm.provenance.fiber_t].push_back(&bm);
    }
    ASSERT_EQ(per_fiber.size(), r.minimum_fiber_fibers.size());
    for (const auto& s : r.minimum_fiber_fibers) {
      auto f = e.enumerate(s.t);
      auto classes = lower_degree_classes(f);
      ASSERT_EQ(classes.size(), s.classes);
      const auto& chosen = per_fiber.at(s.t);
      ASSERT_EQ(chosen.size(), classes.size() - 1);
      std::vector<std::size_t> owner(f.size());
      for (std::size_t b = 0; b < classes.size(); ++b) {
        for (auto i : classes[b]) owner[i] = b;
      }
      UnionFind uf(classes.size());
      for (const auto* bm : chosen) {
        uf.unite(owner[*f.index_of(bm->provenance.from)], owner[*f.index_of(bm->provenance.to)]);
      }
      EXPECT_EQ(uf.components(), 1u);
    }
  }
}

TEST(MinimalBasis, FourWayModelContainsTheIndispensableMoves) {
  auto a = load_model("m12-13-23-34.json");
  FiberEngine e(a);
  auto r = minimal_markov_basis(e, 4);
  EXPECT_EQ(r.indispensable_moves.size(), 16u);
  auto moves = selected_moves(r);
  std::set<Move> chosen(moves.begin(), moves.end());
  for (const auto& z : r.indispensable_moves) EXPECT_TRUE(chosen.count(z));
  EXPECT_FALSE(r.unique_minimal);
  EXPECT_EQ(r.verdict.case_number, 3);
  EXPECT_GT(moves.size(), 16u);
}

TEST(MinimalBasis, StructuralZeroSelectsTheFirstPartner) {
  auto a = load_model("m12-13-23-34-zero.json");
  FiberEngine e(a);
  auto r = minimal_markov_basis(e, 4);
  const auto plus = a.parse_monomial("u1112*u1221*u2121*u2211");
  const auto first = a.parse_monomial("u1121*u1211*u2112*u2221");
  const auto second = a.parse_monomial("u1121*u1212*u2111*u2221");
  int hits = 0;
  for (const auto& bm : r.moves) {
    if (bm.move.plus() == plus) {
      ++hits;
      EXPECT_EQ(bm.move.minus(), first);
    }
    EXPECT_NE(bm.move, Move::from_parts(plus, second));
  }
  EXPECT_EQ(hits, 1);
}

TEST(Verify, TwoByTwoSingleMoveUpToThree) {
  auto a = load_model("indep22.json");
  FiberEngine e(a);
  std::vector<Move> b{binomial(a, "u11*u22", "u12*u21")};
  auto v = verify_markov_basis(e, b, 3);
  EXPECT_TRUE(v.connected);
  EXPECT_EQ(v.degree_bound, 3);
  EXPECT_FALSE(v.witness);
}

TEST(Verify, OneWayMissingMoveGivesDegreeOneWitness) {
  FiberEngine e(testing::oneway(3));
  std::vector<Move> b{Move({1, -1, 0})};
  auto v = verify_markov_basis(e, b, 3);
  EXPECT_FALSE(v.connected);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->degree, 1);
  EXPECT_EQ(*v.witness->partition, (Partition{{0, 1}, {2}}));
}

// Components of one fiber under +-z applied wherever x >= z^-.
std::size_t components(const Fiber& f, const std::vector<Move>& moves) {
  UnionFind uf(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const auto& m : moves) {
      for (int sign : {1, -1}) {
        std::vector<std::int64_t> y(f.elements[i].coords().begin(), f.elements[i].coords().end());
        bool ok = true;
        for (std::size_t c = 0; c < y.size(); ++c) {
          y[c] += sign * m.z()[c];
          ok = ok && y[c] >= 0;
        }
        if (!ok) continue;
        if (auto j = f.index_of(FrequencyVector(y))) uf.unite(i, *j);
      }
    }
  }
  return uf.components();
}

TEST(Verify, FourWayIndispensableMovesMissF1AndF2) {
  auto a = load_model("m12-13-23-34.json");
  FiberEngine e(a);
  auto idp = enumerate_indispensable_binomials(e, 4);
  auto v = verify_markov_basis(e, idp, 4);
  EXPECT_FALSE(v.connected);
  ASSERT_TRUE(v.witness);
  // The first disconnected fiber is F1 or an image of it under the model's symmetries.
  EXPECT_EQ(v.witness->degree, 4);
  EXPECT_EQ(v.witness->partition->size(), 2u);
  EXPECT_EQ(components(*v.witness, idp), 2u);
  EXPECT_FALSE(indispensable_moves_form_basis(e, 4));
  for (const auto& seed : {"u1111*u1221*u2121*u2212", "u1111*u1221*u2122*u2212"}) {
    SCOPED_TRACE(seed);
    auto f = e.enumerate(a.statistic(a.parse_monomial(seed)));
    EXPECT_EQ(components(f, idp), 2u);
  }
}

TEST(Verify, RejectsNonMoves) {
  FiberEngine e(testing::oneway(3));
  std::vector<Move> b{Move({1, 0, 0})};
  EXPECT_THROW(verify_markov_basis(e, b, 2), InputError);
}

TEST(Uniqueness, Examples) {
  EXPECT_TRUE(unique_minimal(FiberEngine(load_model("indep22.json")), 4));
  EXPECT_FALSE(unique_minimal(FiberEngine(load_model("hw4.json")), 4));
  EXPECT_FALSE(unique_minimal(FiberEngine(load_model("indep222.json")), 3));
  EXPECT_TRUE(indispensable_moves_form_basis(FiberEngine(load_model("indep22.json")), 2));
  EXPECT_FALSE(indispensable_moves_form_basis(FiberEngine(testing::oneway(3)), 3));
}

TEST(Uniqueness, AgreesWithIndispensableBasisTestEverywhere) {
  for (const auto& name : testing::bundled_models()) {
    SCOPED_TRACE(name);
    FiberEngine e(load_model(name));
    for (std::int64_t n = 1; n <= 4; ++n) {
      EXPECT_EQ(unique_minimal(e, n), indispensable_moves_form_basis(e, n)) << "bound " << n;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_case(FiberEngine(load_model("indep22.json")), 4).case_number, 1);
  EXPECT_EQ(classify_case(FiberEngine(load_model("hw4.json")), 4).case_number, 2);
  EXPECT_EQ(classify_case(FiberEngine(load_model("indep222.json")), 3).case_number, 2);
  EXPECT_EQ(classify_case(FiberEngine(testing::oneway(3)), 3).case_number, 2);
  EXPECT_EQ(classify_case(FiberEngine(testing::identity(3)), 3).case_number, 1);
  auto a = load_model("m12-13-23-34.json");
  auto v = classify_case(FiberEngine(a), 4);
  EXPECT_EQ(v.case_number, 3);
  ASSERT_TRUE(v.evidence);
  EXPECT_GE(v.evidence->members.size(), 2u);
}

TEST(Classify, CaseTwoBasesUseOnlyIndispensableMonomials) {
  for (const auto& name : testing::bundled_models()) {
    SCOPED_TRACE(name);
    FiberEngine e(load_model(name));
    auto r = minimal_markov_basis(e, e.cells() > 10 ? 4 : 3);
    if (r.verdict.case_number != 2) continue;
    for (const auto& bm : r.moves) {
      EXPECT_TRUE(is_indispensable_monomial(e, bm.move.plus()));
      EXPECT_TRUE(is_indispensable_monomial(e, bm.move.minus()));
    }
  }
}

TEST(NormReducing, Examples) {
  auto two = load_model("indep22.json");
  FiberEngine e22(two);
  std::vector<Move> b{binomial(two, "u11*u22", "u12*u21")};
  EXPECT_TRUE(is_one_norm_reducing(e22, b, 3).reducing);
  auto empty = is_one_norm_reducing(e22, std::vector<Move>{}, 3);
  EXPECT_FALSE(empty.reducing);
  ASSERT_TRUE(empty.witness);
  EXPECT_EQ(empty.witness->t, two.statistic(two.parse_monomial("u11*u22")));
  EXPECT_EQ(empty.degree_bound, 3);

  auto hw = load_model("hw4.json");
  FiberEngine ehw(hw);
  auto moves = hardy_weinberg_idp_and_star(hw);
  EXPECT_TRUE(is_one_norm_reducing(ehw, std::vector<Move>(moves.begin(), moves.end()), 2).reducing);
}

TEST(NormReducing, DroppingAMoveBetweenIndispensableMonomialsBreaksIt) {
  for (const auto& name : {"indep22.json", "indep222.json", "hw4.json", "oneway3.json"}) {
    SCOPED_TRACE(name);
    FiberEngine e(load_model(name));
    auto mf = minimum_fiber_basis(e, 2).moves;
    ASSERT_TRUE(is_one_norm_reducing(e, mf, 2).reducing);
    for (std::size_t k = 0; k < mf.size(); ++k) {
      const auto& z = mf[k];
      if (!is_indispensable_monomial(e, z.plus()) || !is_indispensable_monomial(e, z.minus())) continue;
      auto rest = mf;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      auto res = is_one_norm_reducing(e, rest, 2);
      ASSERT_FALSE(res.reducing);
      EXPECT_EQ(res.witness->t, e.matrix().statistic(z.plus()));
    }
  }
}

TEST(MinimalMultiElementFiber, Examples) {
  auto a = load_model("indep222.json");
  FiberEngine e(a);
  EXPECT_TRUE(is_minimal_multi_element_fiber(e, a.statistic(a.parse_monomial("u111*u222"))));
  EXPECT_FALSE(is_minimal_multi_element_fiber(e, a.statistic(a.parse_monomial("u111^2"))));

  auto m = load_model("m12-13-23-34.json");
  FiberEngine em(m);
  EXPECT_FALSE(is_minimal_multi_element_fiber(em, m.statistic(m.parse_monomial("u1111*u1221*u2121*u2212"))));

  // The degree-one branch: e_i itself is not a 1-element here.
  FiberEngine e1(testing::oneway(3));
  EXPECT_TRUE(is_minimal_multi_element_fiber(e1, std::vector<std::int64_t>{1}));
}

TEST(MinimalMultiElementFiber, MatchesElementwiseIndispensability) {
  for (const auto& name : {"indep22.json", "indep222.json", "indepIJK.json", "hw4.json", "m12-13-23-34.json",
                           "m12-13-23-34-zero.json", "identity3.json"}) {
    SCOPED_TRACE(name);
    FiberEngine e(load_model(name));
    for (std::int64_t n = 1; n <= 4; ++n) {
      for (const auto& f : e.fibers_of_degree(n)) {
        const bool all = std::all_of(f.elements.begin(), f.elements.end(),
                                     [&](const FrequencyVector& x) { return is_indispensable_monomial(e, x); });
        ASSERT_EQ(is_minimal_multi_element_fiber(e, f.t), all);
      }
    }
  }
}

}  // namespace
}  // namespace mbasis
