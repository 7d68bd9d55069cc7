#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fgring/errors.hpp"
#include "fgring/fol.hpp"
#include "fgring/presentation.hpp"
#include "fgring/witt.hpp"

namespace fgring::cli {

using Json = nlohmann::ordered_json;

namespace {

Json texts(const IdealPresentation& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_string(g));
  return out;
}

// Integers that fit are numbers; anything larger stays exact as a string.
Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

}  // namespace

Json prime_json(const PrimeCertificate& p) {
  Json j;
  j["generators"] = texts(p.prime);
  j["characteristic"] = integer_json(p.characteristic);
  j["finite_index"] = p.finite_index;
  j["provenance"] = p.provenance;
  return j;
}

namespace {

Json graph_json(const PrimeGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back(texts(v.prime));
  j["edges"] = Json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  j["components"] = g.components;
  return j;
}

}  // namespace

Json report_json(const ClassificationReport& r) {
  Json j;
  j["input"] = r.ring.to_string();
  j["status"] = "ok";
  j["verdict"] = verdict_name(r.verdict);
  Json cond;
  cond["finite"] = r.is_finite;
  cond["connected"] = r.decomposed ? Json(r.connected) : Json(nullptr);
  cond["d"] = r.decomposed ? integer_json(r.annihilator_exponent) : Json(nullptr);
  j["conditions"] = cond;
  j["is_zero_ring"] = r.is_zero_ring;
  j["reasons"] = r.reasons;
  j["nilradical"] = r.decomposed ? texts(r.nilradical) : Json(nullptr);
  j["minimal_primes"] = Json::array();
  for (const auto& p : r.minimal_primes) j["minimal_primes"].push_back(prime_json(p));
  j["graph"] = graph_json(r.graph);
  Json certs = Json::object();
  if (r.split) {
    Json s;
    s["component"] = r.split->component;
    s["rest"] = r.split->rest;
    s["left"] = texts(r.split->left);
    s["right"] = texts(r.split->right);
    s["witness"] = integer_json(r.split->witness);
    certs["split"] = s;
  }
  j["certificates"] = certs;
  j["assumptions"] = r.assumptions;
  return j;
}

namespace {

struct Settings {
  SpectrumConfig spectrum;
  std::size_t finite_cap = 64;
  std::optional<std::string> witt_cache;
};

void apply_config(const Json& j, Settings& s) {
  auto& g = s.spectrum.groebner;
  auto& d = s.spectrum.decompose;
  if (j.contains("groebner")) {
    const auto& gj = j["groebner"];
    if (gj.contains("max_basis_size")) g.max_basis_size = gj["max_basis_size"];
    if (gj.contains("max_reduction_steps")) g.max_reduction_steps = gj["max_reduction_steps"];
    if (gj.contains("max_pairs")) g.max_pairs = gj["max_pairs"];
  }
  if (j.contains("decompose")) {
    const auto& dj = j["decompose"];
    if (dj.contains("max_nodes")) d.max_nodes = dj["max_nodes"];
    if (dj.contains("primitive_attempts")) d.primitive_attempts = dj["primitive_attempts"];
    if (dj.contains("seed")) d.seed = dj["seed"];
  }
  if (j.contains("mult_order_bound")) s.spectrum.mult_order_bound = j["mult_order_bound"];
  if (j.contains("finite_ring_cap")) s.finite_cap = j["finite_ring_cap"];
  if (j.contains("witt_cache")) s.witt_cache = j["witt_cache"].get<std::string>();
  d.groebner = g;
}

struct Request {
  std::string command;
  Settings settings;
  unsigned d = 0;
  std::vector<std::string> a, b;
  std::string op = "add";
  std::string formula;
  unsigned n = 0;
  std::string phi, designated = "w";
  std::vector<std::string> assign, free;
  bool text = false;
};

struct Outcome {
  int code = kOk;
  Json body;
};

Json refusal(const std::string& input, const std::string& error, const std::string& message) {
  Json j;
  if (!input.empty()) j["input"] = input;
  j["status"] = "refused";
  j["error"] = error;
  if (error == "DECOMPOSITION_INCOMPLETE") j["verdict"] = verdict_name(Verdict::UndecidedDecompositionIncomplete);
  j["message"] = message;
  return j;
}

std::vector<Polynomial> parse_components(const std::vector<std::string>& items, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  for (const auto& s : items) out.push_back(parse_polynomial(s, ctx));
  return out;
}

Json components_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

Json witt_table_json(const WittTable& t) { return Json::parse(table_to_json(t)); }

Json do_witt_eval(const Request& q, const RingPresentation& ring, WittTableCache& cache) {
  CoefficientRing coeffs(ring, q.settings.spectrum.groebner);
  if (q.d == 0) throw std::invalid_argument("--d must be positive");
  WittVector a = make_witt_vector(q.d, parse_components(q.a, ring.ctx), coeffs);
  Json j;
  j["input"] = ring.to_string();
  j["d"] = q.d;
  j["divisors"] = divisors(q.d);
  j["op"] = q.op;
  if (q.op == "ghost") {
    j["result"] = components_json(ghost(a, coeffs));
  } else if (q.op == "w") {
    j["result"] = to_string(w_map(a, coeffs));
  } else if (q.op == "from-ghost") {
    j["result"] = components_json(from_ghost(a.components, q.d, coeffs).components);
  } else {
    WittOp op;
    if (q.op == "add") op = WittOp::Add;
    else if (q.op == "mul") op = WittOp::Mul;
    else if (q.op == "neg") op = WittOp::Neg;
    else throw std::invalid_argument("unknown --op '" + q.op + "' (add, mul, neg, ghost, w, from-ghost)");
    WittVector b = op == WittOp::Neg ? witt_zero(q.d, coeffs) : make_witt_vector(q.d, parse_components(q.b, ring.ctx), coeffs);
    j["result"] = components_json(witt_arith(a, b, cache.get(q.d), op, coeffs).components);
  }
  return j;
}

fol::Emitted emitted_formula(const Request& q, const std::optional<RingPresentation>& ring) {
  if (q.formula == "morphism") {
    if (!ring) throw std::invalid_argument("--formula morphism needs a ring presentation");
    return fol::emit_morphism_formula(*ring);
  }
  if (q.formula == "jac-phi") {
    fol::FormulaPtr phi = fol::parse_formula(q.phi);
    fol::FormulaPtr f = fol::emit_jac(phi, q.designated);
    auto free = fol::free_variables(f);
    return {f, std::vector<std::string>(free.begin(), free.end())};
  }
  if (!q.formula.empty() && (q.formula[0] == '(' || q.formula == "true" || q.formula == "false")) {
    fol::FormulaPtr f = fol::parse_formula(q.formula);
    auto free = fol::free_variables(f);
    return {f, std::vector<std::string>(free.begin(), free.end())};
  }
  return fol::emit_kronecker(q.n, fol::kronecker_from_name(q.formula));
}

Json do_eval_formula(const Request& q, const RingPresentation& ring) {
  fol::Emitted e = emitted_formula(q, ring);
  auto table = fol::FiniteRingTable::enumerate(ring, q.settings.finite_cap, q.settings.spectrum.groebner);
  fol::Assignment bound;
  for (const auto& item : q.assign) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--assign expects name=element, got '" + item + "'");
    bound[item.substr(0, eq)] = table.index_of(parse_polynomial(item.substr(eq + 1), ring.ctx));
  }
  std::vector<std::string> free = q.free;
  if (free.empty())
    for (const auto& v : e.slots)
      if (!bound.count(v) && fol::free_variables(e.formula).count(v)) free.push_back(v);
  Json j;
  j["input"] = ring.to_string();
  j["formula"] = fol::to_sexpr(e.formula);
  j["elements"] = table.size();
  Json b = Json::object();
  for (const auto& [k, v] : bound) b[k] = table.element_text(v);
  j["assignment"] = b;
  if (free.empty()) {
    j["value"] = fol::eval(e.formula, table, bound);
    return j;
  }
  j["free"] = free;
  Json tuples = Json::array();
  for (const auto& t : fol::defined_set(e.formula, table, free, bound)) {
    Json row = Json::array();
    for (auto idx : t) row.push_back(table.element_text(idx));
    tuples.push_back(row);
  }
  j["tuples"] = tuples;
  return j;
}

Outcome run_ring_command(const Request& q, const std::string& text, WittTableCache& cache) {
  Outcome o;
  const auto& cfg = q.settings.spectrum;
  try {
    RingPresentation ring = parse_presentation(text);
    std::string input = ring.to_string();
    if (q.command == "classify") {
      ClassificationReport r = classify(ring, cfg);
      if (r.verdict == Verdict::UndecidedDecompositionIncomplete) {
        o.code = kRefused;
        o.body = refusal(input, "DECOMPOSITION_INCOMPLETE", r.incomplete_reason);
      } else {
        o.body = report_json(r);
      }
    } else if (q.command == "minprimes") {
      o.body["input"] = input;
      o.body["minimal_primes"] = Json::array();
      for (const auto& p : minimal_primes(ring, cfg)) o.body["minimal_primes"].push_back(prime_json(p));
    } else if (q.command == "nilradical") {
      auto primes = minimal_primes(ring, cfg);
      IdealPresentation nil = nilradical_from(ring, primes, cfg.groebner);
      o.body["input"] = input;
      o.body["nilradical"] = texts(nil);
      o.body["d"] = integer_json(nil_annihilator_exponent(ring, nil, cfg.groebner));
    } else if (q.command == "graph") {
      PrimeGraph g = prime_graph(ring, cfg);
      o.body["input"] = input;
      o.body["graph"] = graph_json(g);
      o.body["connected"] = g.components.size() <= 1;
    } else if (q.command == "check-finite") {
      o.body["input"] = input;
      o.body["finite"] = is_finite(ring, cfg);
    } else if (q.command == "witt-eval") {
      o.body = do_witt_eval(q, ring, cache);
    } else if (q.command == "eval-formula") {
      o.body = do_eval_formula(q, ring);
    } else {
      throw std::invalid_argument("unknown command '" + q.command + "'");
    }
  } catch (const DecompositionIncomplete& e) {
    o = {kRefused, refusal(text, "DECOMPOSITION_INCOMPLETE", e.what())};
  } catch (const ResourceCapExceeded& e) {
    o = {kRefused, refusal(text, "RESOURCE_CAP", e.what())};
  } catch (const InvariantViolation& e) {
    Json j{{"input", text}, {"status", "error"}, {"error", "INVARIANT_VIOLATION"}, {"message", e.what()}};
    o = {kInvariant, j};
  } catch (const std::domain_error& e) {
    o = {kRefused, refusal(text, "NOT_INVERTIBLE", e.what())};
  } catch (const std::exception& e) {
    // Parse errors and bad arguments.
    Json j{{"input", text}, {"status", "error"}, {"error", "USAGE"}, {"message", e.what()}};
    o = {kUsage, j};
  }
  return o;
}

std::vector<std::string> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read batch file '" + path + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitely generated commutative rings: spectra, bi-interpretability verdicts, Witt vectors, formulas"};
  app.require_subcommand(1);
  Request q;
  std::string config_path, batch_path, presentation;
  std::optional<std::size_t> max_basis, max_steps, max_pairs, max_nodes, finite_cap;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> witt_cache;
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--batch", batch_path, "File with one presentation per line");
  app.add_option("--max-basis-size", max_basis, "Gröbner basis size cap");
  app.add_option("--max-steps", max_steps, "Reduction step cap");
  app.add_option("--max-pairs", max_pairs, "Critical pair cap");
  app.add_option("--max-nodes", max_nodes, "Decomposition worklist cap");
  app.add_option("--seed", seed, "Seed for randomized primitive-element search");
  app.add_option("--finite-cap", finite_cap, "Element cap for finite ring tables");
  app.add_option("--witt-cache", witt_cache, "Witt table cache file");

  auto ring_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("presentation", presentation, "e.g. 'ring Z[x] / (x^2 - x)'");
    return sub;
  };
  ring_command("classify", "Bi-interpretability verdict with certificates");
  ring_command("minprimes", "Minimal primes with provenance");
  ring_command("nilradical", "Nilradical and its annihilator exponent d");
  ring_command("graph", "Prime graph on the minimal primes");
  ring_command("check-finite", "Whether the ring is finite");
  CLI::App* witt_eval = ring_command("witt-eval", "Witt vector arithmetic over a coefficient ring (default Z)");
  witt_eval->add_option("--d", q.d, "Truncation index")->required();
  witt_eval->add_option("--a", q.a, "Components of a, one per divisor")->required();
  witt_eval->add_option("--b", q.b, "Components of b");
  witt_eval->add_option("--op", q.op, "add, mul, neg, ghost, w or from-ghost");
  CLI::App* eval_formula = ring_command("eval-formula", "Evaluate a formula over a finite ring");
  eval_formula->add_option("--formula", q.formula, "s-expression or formula name")->required();
  eval_formula->add_option("--n", q.n, "Index for named formulas");
  eval_formula->add_option("--phi", q.phi, "φ for --formula jac-phi");
  eval_formula->add_option("--designated", q.designated, "Variable of φ replaced by the bound w");
  eval_formula->add_option("--assign", q.assign, "name=element");
  eval_formula->add_option("--free", q.free, "Variables to enumerate, in output order");

  CLI::App* witt_table = app.add_subcommand("witt-table", "Universal polynomials S_j, M_j, N_j for W_d");
  witt_table->fallthrough();
  witt_table->add_option("--d", q.d, "Truncation index")->required()->check(CLI::PositiveNumber);
  witt_table->add_flag("--text", q.text, "Print `S_j = ...` lines instead of JSON");

  CLI::App* emit = app.add_subcommand("emit", "Emit a definability formula as an s-expression");
  emit->fallthrough();
  emit->add_option("--formula", q.formula, "gamma, jac, pi, mu, Pi, pi-circ, jac-phi or morphism")->required();
  emit->add_option("--n", q.n, "Index n");
  emit->add_option("--phi", q.phi, "φ for jac-phi");
  emit->add_option("--designated", q.designated, "Variable of φ replaced by the bound w");
  emit->add_option("presentation", presentation, "Ring for the morphism formula");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  q.command = app.get_subcommands().front()->get_name();

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot read config '" + config_path + "'");
      apply_config(Json::parse(in), q.settings);
    }
  } catch (const std::exception& e) {
    err << "config: " << e.what() << "\n";
    return kUsage;
  }
  auto& g = q.settings.spectrum.groebner;
  if (max_basis) g.max_basis_size = *max_basis;
  if (max_steps) g.max_reduction_steps = *max_steps;
  if (max_pairs) g.max_pairs = *max_pairs;
  if (max_nodes) q.settings.spectrum.decompose.max_nodes = *max_nodes;
  if (seed) q.settings.spectrum.decompose.seed = *seed;
  if (finite_cap) q.settings.finite_cap = *finite_cap;
  if (witt_cache) q.settings.witt_cache = witt_cache;
  q.settings.spectrum.decompose.groebner = g;

  WittTableCache cache(q.settings.witt_cache);

  if (q.command == "witt-table") {
    try {
      const WittTable& t = cache.get(q.d);
      if (q.text) {
        for (const char* name : {"S", "M", "N"}) {
          const auto& family = name[0] == 'S' ? t.S : name[0] == 'M' ? t.M : t.N;
          for (const auto& [i, f] : family) out << name << "_" << i << " = " << to_string(f) << "\n";
        }
      } else {
        out << witt_table_json(t).dump(2) << "\n";
      }
      return kOk;
    } catch (const InvariantViolation& e) {
      err << "invariant violation: " << e.what() << "\n";
      return kInvariant;
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return kRefused;
    }
  }

  if (q.command == "emit") {
    try {
      std::optional<RingPresentation> ring;
      if (!presentation.empty()) ring = parse_presentation(presentation);
      fol::Emitted e = emitted_formula(q, ring);
      Json j;
      j["formula"] = fol::to_sexpr(e.formula);
      j["slots"] = e.slots;
      j["name"] = q.formula;
      j["n"] = q.n;
      out << j.dump(2) << "\n";
      return kOk;
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return kUsage;
    }
  }

  std::vector<std::string> inputs;
  if (!batch_path.empty()) {
    try {
      inputs = read_batch(batch_path);
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return kUsage;
    }
  } else if (!presentation.empty()) {
    inputs.push_back(presentation);
  } else if (q.command == "witt-eval") {
    inputs.push_back("ring Z");
  } else {
    err << "missing ring presentation (positional argument or --batch)\n";
    return kUsage;
  }

  // Rings are analyzed independently; results keep input order.
  std::vector<std::future<Outcome>> jobs;
  for (const auto& text : inputs)
    jobs.push_back(std::async(inputs.size() > 1 ? std::launch::async : std::launch::deferred,
                              [&, text] { return run_ring_command(q, text, cache); }));
  int code = kOk;
  Json all = Json::array();
  for (auto& job : jobs) {
    Outcome o = job.get();
    code = std::max(code, o.code);
    if (o.code != kOk && o.body.contains("message")) err << o.body["message"].get<std::string>() << "\n";
    all.push_back(std::move(o.body));
  }
  out << (batch_path.empty() ? all[0] : all).dump(2) << "\n";
  return code;
}

}  // namespace fgring::cli
