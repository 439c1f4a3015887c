#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "mbasis/error.hpp"
#include "mbasis/fiber.hpp"
#include "mbasis/indispensable.hpp"
#include "mbasis/markov.hpp"
#include "mbasis/model.hpp"
#include "mbasis/serialize.hpp"

namespace mbasis::cli {

namespace {

std::string tuple(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<std::int64_t> parse_statistic(const std::string& text, std::size_t rows) {
  std::vector<std::int64_t> t;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      t.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("--t expects comma-separated integers, got '" + text + "'");
    }
  }
  if (t.size() != rows) {
    throw InputError("--t has " + std::to_string(t.size()) + " entries but the model has " +
                     std::to_string(rows) + " rows");
  }
  return t;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// State shared by every subcommand once the model is loaded.
struct Session {
  const RunConfig& cfg;
  ConfigMatrix a;
  FiberEngine engine;
  std::int64_t bound;
  bool heuristic_bound;
  Budget budget;

  Json header(const std::string& command) const {
    Json j;
    j["command"] = command;
    Json m;
    m["cells"] = a.labels();
    m["rows"] = a.rows();
    m["rank"] = matrix_rank(a.matrix());
    j["model"] = std::move(m);
    j["degree_bound"] = bound;
    j["degree_bound_heuristic"] = heuristic_bound;
    return j;
  }

  std::string bound_note() const {
    std::string s = "degree bound " + std::to_string(bound);
    if (heuristic_bound) s += " (heuristic default, not a certified bound)";
    return s;
  }
};

void text_fiber(std::ostream& os, const ConfigMatrix& a, const Fiber& f) {
  os << "fiber t=" << tuple(f.t) << " degree " << f.degree << " size " << f.size();
  if (f.partition) os << " classes " << f.partition->size();
  os << "\n";
  for (std::size_t i = 0; i < f.size(); ++i) os << "  " << i << "  " << a.monomial(f.elements[i]) << "\n";
  if (f.partition && !f.partition->empty()) {
    os << "  classes:";
    for (const auto& block : *f.partition) {
      os << " {";
      for (std::size_t k = 0; k < block.size(); ++k) os << (k ? "," : "") << block[k];
      os << "}";
    }
    os << "\n";
  }
}

Json json_fiber(const ConfigMatrix& a, const Fiber& f) {
  Json j = fiber_to_json(f);
  j["size"] = f.size();
  Json names = Json::array();
  for (const auto& x : f.elements) names.push_back(a.monomial(x));
  j["monomials"] = std::move(names);
  return j;
}

// ---------------------------------------------------------------------------

void cmd_fibers(const Session& s, std::ostream& os) {
  std::vector<Fiber> fibers;
  if (!s.cfg.t.empty()) {
    auto f = s.engine.enumerate(parse_statistic(s.cfg.t, s.a.rows()));
    if (!f.empty()) f.partition = lower_degree_classes(f);
    fibers.push_back(std::move(f));
  } else {
    for (auto& f : partitioned_fibers(s.engine, s.bound, s.budget)) {
      if (f.size() >= s.cfg.min_size) fibers.push_back(std::move(f));
    }
  }

  if (s.cfg.format == "json") {
    Json j = s.header("fibers");
    j["min_size"] = s.cfg.min_size;
    Json list = Json::array();
    for (const auto& f : fibers) list.push_back(json_fiber(s.a, f));
    j["fibers"] = std::move(list);
    os << j.dump(2) << "\n";
    return;
  }
  if (s.cfg.t.empty()) {
    os << fibers.size() << " fibers of degree 1.." << s.bound << " with at least " << s.cfg.min_size
       << " elements; " << s.bound_note() << "\n";
  }
  for (const auto& f : fibers) text_fiber(os, s.a, f);
}

void cmd_indispensable(const Session& s, std::ostream& os) {
  const bool both = !s.cfg.monomials && !s.cfg.binomials;
  const bool want_monomials = both || s.cfg.monomials;
  const bool want_binomials = both || s.cfg.binomials;

  std::vector<FrequencyVector> monomials;
  std::vector<Move> binomials;
  if (want_monomials) monomials = enumerate_indispensable_monomials(s.engine, s.bound, s.budget);
  if (want_binomials) binomials = enumerate_indispensable_binomials(s.engine, s.bound, s.budget);

  std::vector<SearchStep> found;
  if (s.cfg.walk_steps > 0) {
    std::mt19937_64 rng(s.cfg.seed);
    FrequencyVector state(s.a.cols());
    for (std::size_t k = 0; k < s.cfg.walk_steps; ++k) {
      auto step = random_search_step(s.engine, state, rng);
      if (step.kind == SearchStep::Kind::kFound) {
        found.push_back(step);
        state = FrequencyVector(s.a.cols());
      } else {
        state = step.vector;
      }
    }
  }

  if (s.cfg.format == "json") {
    Json j = s.header("indispensable");
    if (want_monomials) {
      Json list = Json::array();
      for (const auto& x : monomials) {
        Json m = monomial_to_json(s.a, x);
        m["fiber_size"] = s.engine.size_of(x);
        list.push_back(std::move(m));
      }
      j["monomials"] = std::move(list);
    }
    if (want_binomials) {
      Json list = Json::array();
      for (const auto& z : binomials) list.push_back(move_to_json(s.a, z));
      j["binomials"] = std::move(list);
    }
    if (s.cfg.walk_steps > 0) {
      Json w;
      w["seed"] = s.cfg.seed;
      w["steps"] = s.cfg.walk_steps;
      Json list = Json::array();
      for (const auto& step : found) {
        Json m = monomial_to_json(s.a, step.vector);
        m["cell"] = s.a.label(step.cell);
        list.push_back(std::move(m));
      }
      w["found"] = std::move(list);
      j["walk"] = std::move(w);
    }
    os << j.dump(2) << "\n";
    return;
  }

  os << s.bound_note() << "\n";
  if (want_monomials) {
    os << monomials.size() << " indispensable monomials\n";
    for (const auto& x : monomials) {
      os << "  degree " << x.degree() << "  fiber size " << s.engine.size_of(x) << "  " << s.a.monomial(x) << "\n";
    }
  }
  if (want_binomials) {
    os << binomials.size() << " indispensable binomials\n";
    for (const auto& z : binomials) os << "  degree " << z.degree() << "  " << binomial_string(s.a, z) << "\n";
  }
  if (s.cfg.walk_steps > 0) {
    os << "random walk, seed " << s.cfg.seed << ", " << s.cfg.walk_steps << " steps: " << found.size()
       << " indispensable monomials found\n";
    for (const auto& step : found) {
      os << "  via " << s.a.label(step.cell) << "  " << s.a.monomial(step.vector) << "\n";
    }
  }
}

void text_verification(std::ostream& os, const ConfigMatrix& a, const VerifyResult& v) {
  if (v.connected) {
    os << "verification: every fiber of degree <= " << v.degree_bound << " is connected (bounded check)\n";
    return;
  }
  os << "verification: FAILED, first disconnected fiber below (bounded check up to degree " << v.degree_bound
     << ")\n";
  text_fiber(os, a, *v.witness);
}

void cmd_basis(const Session& s, std::ostream& os) {
  if (!s.cfg.verify_path.empty()) {
    auto moves = moves_from_json(s.a, read_json_file(s.cfg.verify_path));
    auto v = verify_markov_basis(s.engine, moves, s.bound, s.budget);
    if (s.cfg.format == "json") {
      Json j = s.header("basis");
      j["moves"] = moves.size();
      j["verification"] = verify_to_json(s.a, v);
      os << j.dump(2) << "\n";
    } else {
      os << moves.size() << " moves read from " << s.cfg.verify_path << "; " << s.bound_note() << "\n";
      text_verification(os, s.a, v);
    }
    return;
  }

  auto r = minimal_markov_basis(s.engine, s.bound, s.budget);
  if (s.cfg.format == "json") {
    Json j = s.header("basis");
    const Json body = report_to_json(s.a, r);
    for (const auto& [key, value] : body.items()) {
      if (key != "degree_bound") j[key] = value;
    }
    os << j.dump(2) << "\n";
    return;
  }

  os << "minimal Markov basis: " << r.moves.size() << " moves; " << s.bound_note() << "\n";
  os << "unique minimal basis: " << (r.unique_minimal ? "yes" : "no") << "\n";
  os << "case: " << r.verdict.case_number << "\n";
  os << "indispensable moves: " << r.indispensable_moves.size() << "\n";
  std::size_t k = 0;
  for (const auto& summary : r.minimum_fiber_fibers) {
    os << "fiber t=" << tuple(summary.t) << " degree " << summary.degree << " size " << summary.size
       << " classes " << summary.classes << "\n";
    for (; k < r.moves.size() && r.moves[k].provenance.fiber_t == summary.t; ++k) {
      os << "  " << binomial_string(s.a, r.moves[k].move) << "\n";
    }
  }
  text_verification(os, s.a, r.verification);
}

void cmd_classify(const Session& s, std::ostream& os) {
  auto r = minimal_markov_basis(s.engine, s.bound, s.budget);
  if (s.cfg.format == "json") {
    Json j = s.header("classify");
    j["case"] = r.verdict.case_number;
    j["unique_minimal"] = r.unique_minimal;
    if (r.verdict.evidence) {
      Json e;
      e["t"] = r.verdict.evidence->t;
      Json members = Json::array();
      for (const auto& x : r.verdict.evidence->members) members.push_back(s.a.monomial(x));
      e["class"] = std::move(members);
      j["evidence"] = std::move(e);
    } else {
      j["evidence"] = nullptr;
    }
    os << j.dump(2) << "\n";
    return;
  }
  os << "case " << r.verdict.case_number << "; " << s.bound_note() << "\n";
  os << "unique minimal basis: " << (r.unique_minimal ? "yes" : "no") << "\n";
  if (r.verdict.evidence) {
    os << "non-singleton class in fiber t=" << tuple(r.verdict.evidence->t) << ":\n";
    for (const auto& x : r.verdict.evidence->members) os << "  " << s.a.monomial(x) << "\n";
  }
}

void cmd_check_norm_reducing(const Session& s, std::ostream& os) {
  std::vector<Move> moves;
  std::string source;
  if (s.cfg.basis_path.empty()) {
    moves = minimum_fiber_basis(s.engine, s.bound, s.budget).moves;
    source = "minimum fiber basis";
  } else {
    moves = moves_from_json(s.a, read_json_file(s.cfg.basis_path));
    source = s.cfg.basis_path;
  }
  auto r = is_one_norm_reducing(s.engine, moves, s.bound, s.budget);
  if (s.cfg.format == "json") {
    Json j = s.header("check-norm-reducing");
    j["basis"] = source;
    j["moves"] = moves.size();
    const Json body = norm_to_json(s.a, r);
    for (const auto& [key, value] : body.items()) {
      if (key != "degree_bound") j[key] = value;
    }
    os << j.dump(2) << "\n";
    return;
  }
  os << moves.size() << " moves from " << source << "; " << s.bound_note() << "\n";
  if (r.reducing) {
    os << "1-norm reducing for every fiber of degree <= " << r.degree_bound << " (bounded check)\n";
  } else {
    os << "not 1-norm reducing: no move brings these closer in fiber t=" << tuple(r.witness->t) << "\n";
    os << "  x = " << s.a.monomial(r.witness->x) << "\n";
    os << "  y = " << s.a.monomial(r.witness->y) << "\n";
  }
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& cfg, std::int64_t& max_degree) {
  sub->add_option("--model", cfg.model_path, "Model specification (JSON)")->required();
  sub->add_option("--max-degree", max_degree,
                  "Largest fiber degree to sweep (default 2*max(rank A, 4), a heuristic, not a certified bound)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Seed for the randomized search")->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
  sub->add_option("--budget", cfg.budget, "Cap on monomials enumerated by one sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int execute(const RunConfig& cfg, std::ostream& out) {
  ConfigMatrix a = build(load_model_spec(cfg.model_path));
  FiberEngine engine(a);
  const bool heuristic = !cfg.max_degree;
  const std::int64_t bound =
      cfg.max_degree ? *cfg.max_degree : 2 * std::max<std::int64_t>(static_cast<std::int64_t>(matrix_rank(a.matrix())), 4);
  Session s{cfg, std::move(a), std::move(engine), bound, heuristic, Budget{cfg.budget}};

  std::ostringstream report;
  if (cfg.subcommand == "fibers") cmd_fibers(s, report);
  else if (cfg.subcommand == "indispensable") cmd_indispensable(s, report);
  else if (cfg.subcommand == "basis") cmd_basis(s, report);
  else if (cfg.subcommand == "classify") cmd_classify(s, report);
  else cmd_check_norm_reducing(s, report);

  if (cfg.output.empty()) {
    out << report.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw InputError("cannot write " + cfg.output);
    file << report.str();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibers, indispensable monomials and minimal Markov bases of toric models", "mbasis"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::int64_t max_degree = 0;

  auto* fibers = app.add_subcommand("fibers", "List fibers with their lower-degree equivalence classes");
  add_common(fibers, cfg, max_degree);
  fibers->add_option("--t", cfg.t, "Only the fiber of this statistic, comma separated");
  fibers->add_option("--min-size", cfg.min_size, "Hide fibers with fewer elements")->capture_default_str();

  auto* indisp = app.add_subcommand("indispensable", "Indispensable monomials and binomials up to the bound");
  add_common(indisp, cfg, max_degree);
  indisp->add_flag("--monomials", cfg.monomials, "Only monomials");
  indisp->add_flag("--binomials", cfg.binomials, "Only binomials");
  indisp->add_option("--walk", cfg.walk_steps, "Also run this many steps of the randomized 1-element walk");

  auto* basis = app.add_subcommand("basis", "A minimal Markov basis with uniqueness and case verdicts");
  add_common(basis, cfg, max_degree);
  basis->add_option("--verify", cfg.verify_path, "Verify the moves in this JSON file instead");

  auto* classify = app.add_subcommand("classify", "Case 1, 2 or 3 with evidence");
  add_common(classify, cfg, max_degree);

  auto* norm = app.add_subcommand("check-norm-reducing", "Bounded 1-norm reducing check");
  add_common(norm, cfg, max_degree);
  norm->add_option("--basis", cfg.basis_path, "Moves to check (default: the minimum fiber basis)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (max_degree > 0) cfg.max_degree = max_degree;

  try {
    return execute(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "mbasis: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvariantViolation& e) {
    err << "mbasis: internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "mbasis: error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "mbasis: internal error: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

}  // namespace mbasis::cli
