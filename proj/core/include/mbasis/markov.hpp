#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mbasis/fiber.hpp"
#include "mbasis/move.hpp"

namespace mbasis {

// Every "is a Markov basis" verdict in this header is bounded: it covers the
// fibers of degree 1..max_degree and nothing beyond. Reports carry the bound.

/// All fibers of degree 1..max_degree, each with its B_{|t|-1} partition.
std::vector<Fiber> partitioned_fibers(const FiberEngine& engine, std::int64_t max_degree,
                                      Budget budget = {});

struct MinimumFiberBasis {
  /// Fibers with at least two classes, partition filled in.
  std::vector<Fiber> fibers;
  /// Every move joining two elements in different classes of one of those fibers.
  std::vector<Move> moves;
};

MinimumFiberBasis minimum_fiber_basis(const FiberEngine& engine, std::int64_t max_degree,
                                      Budget budget = {});

/// Where a selected move came from: its fiber and the two class representatives.
struct MoveProvenance {
  std::vector<std::int64_t> fiber_t;
  FrequencyVector from;
  FrequencyVector to;
};

struct BasisMove {
  Move move;
  MoveProvenance provenance;
};

struct VerifyResult {
  bool connected = true;
  std::int64_t degree_bound = 0;
  /// First disconnected fiber; its partition holds the components under the moves.
  std::optional<Fiber> witness;
};

struct NormWitness {
  std::vector<std::int64_t> t;
  FrequencyVector x;
  FrequencyVector y;
};

struct NormResult {
  bool reducing = true;
  std::int64_t degree_bound = 0;
  std::optional<NormWitness> witness;
};

/// A class with more than one element in a fiber that has several classes.
struct ClassEvidence {
  std::vector<std::int64_t> t;
  std::vector<FrequencyVector> members;
};

struct CaseVerdict {
  /// 1: unique minimal basis. 2: not unique, every basis monomial indispensable.
  /// 3: some minimal basis uses a dispensable monomial.
  int case_number = 1;
  std::optional<ClassEvidence> evidence;
};

struct FiberSummary {
  std::vector<std::int64_t> t;
  std::int64_t degree = 0;
  std::size_t size = 0;
  std::size_t classes = 0;
};

struct MarkovBasisReport {
  std::vector<BasisMove> moves;
  std::int64_t degree_bound = 0;
  bool unique_minimal = false;
  CaseVerdict verdict;
  std::vector<Move> indispensable_moves;
  std::vector<FiberSummary> minimum_fiber_fibers;
  VerifyResult verification;
};

/// One deterministic minimal Markov basis, up to the bound.
///
/// In each fiber with K >= 2 classes, every class is represented by its first
/// element in MonomialOrder, classes are ordered by representative, and the
/// K - 1 moves form a star around the first class. Each move is oriented
/// with the root representative as z^+.
///
/// Throws InvariantViolation if the selection fails verification or if the
/// uniqueness test and the indispensable-move test disagree.
MarkovBasisReport minimal_markov_basis(const FiberEngine& engine, std::int64_t max_degree,
                                       Budget budget = {});

/// Connectivity of every fiber of degree 1..max_degree under the moves.
/// Throws InputError if some vector is not a move for the engine's matrix.
VerifyResult verify_markov_basis(const FiberEngine& engine, std::span<const Move> moves,
                                 std::int64_t max_degree, Budget budget = {});

/// The indispensable moves connect every fiber up to the bound.
bool indispensable_moves_form_basis(const FiberEngine& engine, std::int64_t max_degree,
                                    Budget budget = {});

/// Every fiber up to the bound is one class or has exactly two elements.
bool unique_minimal(const FiberEngine& engine, std::int64_t max_degree, Budget budget = {});

/// For every pair x != y in a fiber up to the bound, some applicable +-z
/// from the set moves x toward y (or y toward x) in L1 distance.
NormResult is_one_norm_reducing(const FiberEngine& engine, std::span<const Move> moves,
                                std::int64_t max_degree, Budget budget = {});

CaseVerdict classify_case(const FiberEngine& engine, std::int64_t max_degree, Budget budget = {});

/// |F_t| >= 2 and either |t| = 1 or every split t = A x1 + A x2 into two
/// nonzero nonempty parts has both parts 1-element fibers. Splits are
/// enumerated over sub-vectors of the fiber's elements.
bool is_minimal_multi_element_fiber(const FiberEngine& engine, std::span<const std::int64_t> t);

}  // namespace mbasis
