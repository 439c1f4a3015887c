#pragma once

#include <nlohmann/json.hpp>

#include <span>
#include <vector>

#include "mbasis/fiber.hpp"
#include "mbasis/markov.hpp"
#include "mbasis/model.hpp"
#include "mbasis/move.hpp"

namespace mbasis {

// JSON documents keep insertion order so that output is stable and a
// parse/dump cycle reproduces the same bytes.
using Json = nlohmann::ordered_json;

/// {"t":[...],"degree":n,"elements":[[...],...],"classes":[[...],...]}.
/// "classes" is null when the partition has not been computed.
Json fiber_to_json(const Fiber& f);

/// {"plus":[...],"minus":[...],"degree":n,"fiber_t":[...],"binomial":"..."}.
Json move_to_json(const ConfigMatrix& a, const Move& m);

/// {"vector":[...],"monomial":"...","degree":n}.
Json monomial_to_json(const ConfigMatrix& a, const FrequencyVector& x);

/// Fields: moves, degree_bound, bounded_verification, unique_minimal, case,
/// indispensable_moves, minimum_fiber_fibers, witnesses.
Json report_to_json(const ConfigMatrix& a, const MarkovBasisReport& r);

Json verify_to_json(const ConfigMatrix& a, const VerifyResult& r);
Json norm_to_json(const ConfigMatrix& a, const NormResult& r);

/// Reads moves from either a bare array or an object with a "moves" array.
/// Each move is {"plus":[...],"minus":[...]} (other fields are ignored) or
/// a plain integer array z. Throws InputError on malformed input or on a
/// vector that is not a move for `a`.
std::vector<Move> moves_from_json(const ConfigMatrix& a, const Json& doc);

}  // namespace mbasis
