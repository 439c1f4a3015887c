#pragma once

// Naive reference implementations for the property suites.
//
// Nothing here calls into the fiber engine: the only shared pieces are the
// value types (ConfigMatrix, FrequencyVector, Move). Keep it slow and obvious.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mbasis/frequency_vector.hpp"
#include "mbasis/model.hpp"
#include "mbasis/move.hpp"

namespace mbasis::oracle {

/// Scans every x with |x| = w^T t and keeps those with Ax = t. Largest vector
/// first. Empty when w^T t is not a nonnegative integer.
std::vector<FrequencyVector> brute_fiber(const ConfigMatrix& a, std::span<const std::int64_t> t);

/// Every monomial of degree n grouped by t = Ax, as (t, elements) pairs
/// sorted by t, elements largest first.
std::vector<std::pair<std::vector<std::int64_t>, std::vector<FrequencyVector>>> brute_fibers_of_degree(
    const ConfigMatrix& a, std::int64_t n);

/// Tests every monomial of degree 1..max_degree against the minimal
/// multi-element definition using a full table of fiber sizes. Ordered by
/// degree, then largest vector first.
std::vector<FrequencyVector> brute_indispensable_monomials(const ConfigMatrix& a,
                                                           std::int64_t max_degree,
                                                           std::uint64_t max_monomials = 10'000'000);

/// Every move z with F_{Az+} = {z+, z-} and deg z <= max_degree, sorted by
/// degree then z.
std::vector<Move> brute_two_element_fibers(const ConfigMatrix& a, std::int64_t max_degree,
                                           std::uint64_t max_monomials = 10'000'000);

}  // namespace mbasis::oracle
