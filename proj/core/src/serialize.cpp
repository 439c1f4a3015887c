#include "mbasis/serialize.hpp"

#include "mbasis/error.hpp"

namespace mbasis {

namespace {

Json vec(std::span<const std::int64_t> v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

Json fiber_witness(const ConfigMatrix& a, const Fiber& f) {
  Json j = fiber_to_json(f);
  Json names = Json::array();
  for (const auto& x : f.elements) names.push_back(a.monomial(x));
  j["monomials"] = std::move(names);
  return j;
}

}  // namespace

Json fiber_to_json(const Fiber& f) {
  Json j;
  j["t"] = vec(f.t);
  j["degree"] = f.degree;
  Json elems = Json::array();
  for (const auto& x : f.elements) elems.push_back(vec(x.coords()));
  j["elements"] = std::move(elems);
  j["classes"] = f.partition ? Json(*f.partition) : Json(nullptr);
  return j;
}

Json move_to_json(const ConfigMatrix& a, const Move& m) {
  Json j;
  j["plus"] = vec(m.plus().coords());
  j["minus"] = vec(m.minus().coords());
  j["degree"] = m.degree();
  j["fiber_t"] = a.statistic(m.plus());
  j["binomial"] = binomial_string(a, m);
  return j;
}

Json monomial_to_json(const ConfigMatrix& a, const FrequencyVector& x) {
  Json j;
  j["vector"] = vec(x.coords());
  j["monomial"] = a.monomial(x);
  j["degree"] = x.degree();
  return j;
}

Json verify_to_json(const ConfigMatrix& a, const VerifyResult& r) {
  Json j;
  j["connected"] = r.connected;
  j["degree_bound"] = r.degree_bound;
  j["bounded_verification"] = true;
  j["witness"] = r.witness ? fiber_witness(a, *r.witness) : Json(nullptr);
  return j;
}

Json norm_to_json(const ConfigMatrix& a, const NormResult& r) {
  Json j;
  j["one_norm_reducing"] = r.reducing;
  j["degree_bound"] = r.degree_bound;
  j["bounded_verification"] = true;
  if (r.witness) {
    Json w;
    w["t"] = r.witness->t;
    w["x"] = monomial_to_json(a, r.witness->x);
    w["y"] = monomial_to_json(a, r.witness->y);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json report_to_json(const ConfigMatrix& a, const MarkovBasisReport& r) {
  Json j;
  Json moves = Json::array();
  for (const auto& bm : r.moves) {
    Json m = move_to_json(a, bm.move);
    m["fiber_t"] = bm.provenance.fiber_t;
    m["from"] = a.monomial(bm.provenance.from);
    m["to"] = a.monomial(bm.provenance.to);
    moves.push_back(std::move(m));
  }
  j["moves"] = std::move(moves);
  j["degree_bound"] = r.degree_bound;
  j["bounded_verification"] = true;
  j["unique_minimal"] = r.unique_minimal;
  j["case"] = r.verdict.case_number;

  Json idp = Json::array();
  for (const auto& m : r.indispensable_moves) idp.push_back(move_to_json(a, m));
  j["indispensable_moves"] = std::move(idp);

  Json mf = Json::array();
  for (const auto& s : r.minimum_fiber_fibers) {
    Json f;
    f["t"] = s.t;
    f["degree"] = s.degree;
    f["size"] = s.size;
    f["classes"] = s.classes;
    mf.push_back(std::move(f));
  }
  j["minimum_fiber_fibers"] = std::move(mf);

  Json w;
  w["verification"] = verify_to_json(a, r.verification);
  if (r.verdict.evidence) {
    Json e;
    e["t"] = r.verdict.evidence->t;
    Json members = Json::array();
    for (const auto& x : r.verdict.evidence->members) members.push_back(a.monomial(x));
    e["class"] = std::move(members);
    w["case_evidence"] = std::move(e);
  } else {
    w["case_evidence"] = nullptr;
  }
  j["witnesses"] = std::move(w);
  return j;
}

std::vector<Move> moves_from_json(const ConfigMatrix& a, const Json& doc) {
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("moves")) throw InputError("basis file has no 'moves' array");
    list = &doc.at("moves");
  }
  if (!list->is_array()) throw InputError("basis moves must be a JSON array");
  std::vector<Move> out;
  try {
    for (const auto& item : *list) {
      std::optional<Move> m;
      if (item.is_array()) {
        m = Move(item.get<std::vector<std::int64_t>>());
      } else if (item.is_object()) {
        FrequencyVector plus(item.at("plus").get<std::vector<std::int64_t>>());
        FrequencyVector minus(item.at("minus").get<std::vector<std::int64_t>>());
        m = Move::from_parts(plus, minus);
      } else {
        throw InputError("each move must be an object or an integer array");
      }
      m->validate(a);
      out.push_back(std::move(*m));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed move: ") + e.what());
  }
  return out;
}

}  // namespace mbasis
