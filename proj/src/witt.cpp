#include "fgring/witt.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fgring/errors.hpp"
#include "json.hpp"

namespace fgring {

namespace {

constexpr int kCacheVersion = 1;
constexpr const char* kCacheFormat = "fgring-witt-tables";

std::size_t position_of(const std::vector<unsigned>& divs, unsigned i) {
  auto it = std::find(divs.begin(), divs.end(), i);
  if (it == divs.end()) throw std::out_of_range("not a divisor: " + std::to_string(i));
  return static_cast<std::size_t>(it - divs.begin());
}

ContextPtr table_context(const std::vector<unsigned>& divs) {
  std::vector<std::string> names;
  for (unsigned i : divs) names.push_back("X" + std::to_string(i));
  for (unsigned i : divs) names.push_back("Y" + std::to_string(i));
  return Context::make(std::move(names));
}

// Sum over i | j, i < j of i * P_i^(j/i).
Polynomial lower_ghost_terms(const std::map<unsigned, Polynomial>& p, unsigned j, const ContextPtr& ctx) {
  Polynomial acc(ctx);
  for (const auto& [i, f] : p) {
    if (i >= j || j % i != 0) continue;
    acc = acc + f.pow(j / i).scaled(i);
  }
  return acc;
}

Polynomial divide_or_throw(const Polynomial& f, unsigned j, const char* what) {
  try {
    return exact_div_int(f, j);
  } catch (const NotDivisible&) {
    throw InvariantViolation(std::string("Witt integrality violated for ") + what + "_" + std::to_string(j) +
                             ": " + to_string(f) + " not divisible by " + std::to_string(j));
  }
}

// w_j evaluated on a table family P (the left side of a ghost equation).
Polynomial ghost_of_family(const std::map<unsigned, Polynomial>& p, unsigned j, const ContextPtr& ctx) {
  return lower_ghost_terms(p, j, ctx) + p.at(j).scaled(j);
}

}  // namespace

std::vector<unsigned> divisors(unsigned d) {
  if (d == 0) throw std::invalid_argument("divisors: d must be positive");
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= d; ++i)
    if (d % i == 0) out.push_back(i);
  return out;
}

std::size_t WittTable::x_index(unsigned i) const { return position_of(divs, i); }
std::size_t WittTable::y_index(unsigned i) const { return divs.size() + position_of(divs, i); }

WittTable build_table(unsigned d) {
  WittTable t;
  t.d = d;
  t.divs = divisors(d);
  t.ctx = table_context(t.divs);
  for (unsigned j : t.divs) {
    Polynomial wx(t.ctx), wy(t.ctx);
    for (unsigned i : t.divs) {
      if (i > j || j % i != 0) continue;
      wx = wx + Polynomial::variable(t.ctx, t.x_index(i)).pow(j / i).scaled(i);
      wy = wy + Polynomial::variable(t.ctx, t.y_index(i)).pow(j / i).scaled(i);
    }
    t.ghost_x.emplace(j, wx);
    t.ghost_y.emplace(j, wy);
    t.S.emplace(j, divide_or_throw(wx + wy - lower_ghost_terms(t.S, j, t.ctx), j, "S"));
    t.M.emplace(j, divide_or_throw(wx * wy - lower_ghost_terms(t.M, j, t.ctx), j, "M"));
    t.N.emplace(j, divide_or_throw(-wx - lower_ghost_terms(t.N, j, t.ctx), j, "N"));
  }
  return t;
}

void verify_table(const WittTable& t) {
  std::vector<std::size_t> swap(t.ctx->size());
  for (std::size_t k = 0; k < t.divs.size(); ++k) {
    swap[k] = k + t.divs.size();
    swap[k + t.divs.size()] = k;
  }
  for (unsigned j : t.divs) {
    const Polynomial& wx = t.ghost_x.at(j);
    const Polynomial& wy = t.ghost_y.at(j);
    if (ghost_of_family(t.S, j, t.ctx) != wx + wy)
      throw InvariantViolation("ghost equation for S_" + std::to_string(j) + " fails");
    if (ghost_of_family(t.M, j, t.ctx) != wx * wy)
      throw InvariantViolation("ghost equation for M_" + std::to_string(j) + " fails");
    if (ghost_of_family(t.N, j, t.ctx) != -wx)
      throw InvariantViolation("ghost equation for N_" + std::to_string(j) + " fails");
    if (rename(t.S.at(j), t.ctx, swap) != t.S.at(j)) throw InvariantViolation("S_" + std::to_string(j) + " not symmetric");
    if (rename(t.M.at(j), t.ctx, swap) != t.M.at(j)) throw InvariantViolation("M_" + std::to_string(j) + " not symmetric");
    for (std::size_t k = 0; k < t.divs.size(); ++k)
      if (t.N.at(j).degree_in(t.y_index(t.divs[k])) != 0)
        throw InvariantViolation("N_" + std::to_string(j) + " involves Y");
  }
}

std::string table_to_json(const WittTable& t) {
  nlohmann::ordered_json j;
  j["format"] = kCacheFormat;
  j["version"] = kCacheVersion;
  j["d"] = t.d;
  j["variables"] = t.ctx->names();
  for (const char* key : {"S", "M", "N"}) {
    const auto& family = key[0] == 'S' ? t.S : key[0] == 'M' ? t.M : t.N;
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [i, f] : family) entries[std::to_string(i)] = to_string(f);
    j[key] = entries;
  }
  return j.dump(2);
}

namespace {

WittTable table_from_node(const nlohmann::json& j) {
  WittTable t;
  t.d = j.at("d").get<unsigned>();
  t.divs = divisors(t.d);
  t.ctx = table_context(t.divs);
  if (j.at("variables").get<std::vector<std::string>>() != t.ctx->names())
    throw std::runtime_error("Witt table: unexpected variable list");
  for (unsigned i : t.divs) {
    std::string key = std::to_string(i);
    t.S.emplace(i, parse_polynomial(j.at("S").at(key).get<std::string>(), t.ctx));
    t.M.emplace(i, parse_polynomial(j.at("M").at(key).get<std::string>(), t.ctx));
    t.N.emplace(i, parse_polynomial(j.at("N").at(key).get<std::string>(), t.ctx));
    Polynomial wx(t.ctx), wy(t.ctx);
    for (unsigned k : t.divs) {
      if (k > i || i % k != 0) continue;
      wx = wx + Polynomial::variable(t.ctx, t.x_index(k)).pow(i / k).scaled(k);
      wy = wy + Polynomial::variable(t.ctx, t.y_index(k)).pow(i / k).scaled(k);
    }
    t.ghost_x.emplace(i, wx);
    t.ghost_y.emplace(i, wy);
  }
  return t;
}

void check_header(const nlohmann::json& j) {
  if (j.value("format", "") != kCacheFormat) throw std::runtime_error("Witt table: unknown format");
  if (j.value("version", 0) != kCacheVersion)
    throw std::runtime_error("Witt table: unsupported version " + std::to_string(j.value("version", 0)));
}

}  // namespace

WittTable table_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  check_header(j);
  WittTable t = table_from_node(j);
  verify_table(t);
  return t;
}

const WittTable& WittTableCache::get(unsigned d) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!loaded_) load();
  auto it = tables_.find(d);
  if (it != tables_.end()) return it->second;
  WittTable t = build_table(d);
  verify_table(t);
  auto& ref = tables_.emplace(d, std::move(t)).first->second;
  save();
  return ref;
}

void WittTableCache::load() {
  loaded_ = true;
  if (!path_) return;
  std::ifstream in(*path_);
  if (!in) return;
  auto j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  // An unreadable or outdated cache is rebuilt rather than trusted.
  if (j.is_discarded() || j.value("format", "") != kCacheFormat || j.value("version", 0) != kCacheVersion) return;
  for (const auto& node : j.value("tables", nlohmann::json::array())) {
    try {
      WittTable t = table_from_node(node);
      verify_table(t);
      tables_.emplace(t.d, std::move(t));
    } catch (const std::exception&) {
      continue;
    }
  }
}

void WittTableCache::save() const {
  if (!path_) return;
  nlohmann::ordered_json j;
  j["format"] = kCacheFormat;
  j["version"] = kCacheVersion;
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& [d, t] : tables_) j["tables"].push_back(nlohmann::ordered_json::parse(table_to_json(t)));
  std::ofstream out(*path_);
  out << j.dump(2) << "\n";
}

CoefficientRing::CoefficientRing(RingPresentation ring, const GroebnerConfig& config)
    : ring_(std::move(ring)), config_(config) {
  basis_ = strong_groebner(ring_.relations, MonomialOrder::grevlex(), config_);
}

CoefficientRing CoefficientRing::integers() { return CoefficientRing(RingPresentation(Context::make({}), {})); }

CoefficientRing CoefficientRing::integers_mod(const Integer& m) {
  ContextPtr ctx = Context::make({});
  return CoefficientRing(RingPresentation(ctx, {Polynomial::constant(ctx, m)}));
}

Polynomial CoefficientRing::reduce(const Polynomial& f) const {
  Polynomial r = normal_form(f, basis_);
  return r.order() == MonomialOrder::grevlex() ? r : r.with_order(MonomialOrder::grevlex());
}

Polynomial CoefficientRing::constant(const Integer& c) const { return reduce(Polynomial::constant(ring_.ctx, c)); }

bool CoefficientRing::same_as(const CoefficientRing& other) const {
  if (!ring_.ctx->same_as(*other.ring_.ctx)) return false;
  const auto& a = basis_.elements;
  const auto& b = other.basis_.elements;
  return a == b;
}

std::optional<Polynomial> CoefficientRing::inverse_of_integer(const Integer& n) const {
  if (!strong_groebner(ring_.relations.with(Polynomial::constant(ring_.ctx, n)), MonomialOrder::grevlex(), config_)
           .is_unit())
    return std::nullopt;
  ContextPtr ext = prepend_variables(ring_.ctx, 1, "_T");
  MonomialOrder order = MonomialOrder::block(1);
  std::vector<Polynomial> gens;
  for (const auto& g : ring_.relations.generators()) gens.push_back(embed(g, ext, order));
  gens.push_back(Polynomial::variable(ext, 0, order).scaled(n) - Polynomial::constant(ext, 1, order));
  GroebnerBasis gb = strong_groebner(IdealPresentation(ext, std::move(gens)), order, config_);
  Polynomial t = normal_form(Polynomial::variable(ext, 0, order), gb);
  if (t.degree_in(0) != 0) throw InvariantViolation("inverse of " + n.get_str() + " still involves T");
  std::vector<std::size_t> back(ext->size(), 0);
  for (std::size_t k = 1; k < ext->size(); ++k) back[k] = k - 1;
  Polynomial inv = reduce(rename(t, ring_.ctx, back));
  if (reduce(inv.scaled(n)) != constant(1)) throw InvariantViolation("computed inverse of " + n.get_str() + " is wrong");
  return inv;
}

WittVector make_witt_vector(unsigned d, const std::vector<Polynomial>& components, const CoefficientRing& ring) {
  if (components.size() != divisors(d).size())
    throw std::invalid_argument("Witt vector for d=" + std::to_string(d) + " needs " +
                                std::to_string(divisors(d).size()) + " components");
  WittVector v{d, {}};
  for (const auto& c : components) {
    if (!c.context()->same_as(*ring.context())) throw ContextMismatch("Witt component over a different ring");
    v.components.push_back(ring.reduce(c));
  }
  return v;
}

WittVector witt_zero(unsigned d, const CoefficientRing& ring) {
  return WittVector{d, std::vector<Polynomial>(divisors(d).size(), ring.constant(0))};
}

WittVector witt_one(unsigned d, const CoefficientRing& ring) {
  WittVector v = witt_zero(d, ring);
  v.components[0] = ring.constant(1);
  return v;
}

WittVector witt_arith(const WittVector& a, const WittVector& b, const WittTable& table, WittOp op,
                      const CoefficientRing& ring) {
  if (a.d != table.d || (op != WittOp::Neg && b.d != table.d))
    throw std::invalid_argument("witt_arith: vector length does not match the table");
  const ContextPtr& target = ring.context();
  std::vector<std::optional<Polynomial>> images(table.ctx->size());
  for (std::size_t k = 0; k < table.divs.size(); ++k) {
    images[k] = a.components[k];
    images[k + table.divs.size()] = op == WittOp::Neg ? Polynomial::constant(target, 0) : b.components[k];
  }
  const auto& family = op == WittOp::Add ? table.S : op == WittOp::Mul ? table.M : table.N;
  WittVector out{a.d, {}};
  for (unsigned j : table.divs) out.components.push_back(ring.reduce(substitute(family.at(j), images, target)));
  return out;
}

std::vector<Polynomial> ghost(const WittVector& a, const CoefficientRing& ring) {
  auto divs = divisors(a.d);
  std::vector<Polynomial> out;
  for (unsigned j : divs) {
    Polynomial acc = ring.constant(0);
    for (std::size_t k = 0; k < divs.size(); ++k) {
      unsigned i = divs[k];
      if (i > j || j % i != 0) continue;
      acc = ring.reduce(acc + a.components[k].pow(j / i).scaled(i));
    }
    out.push_back(acc);
  }
  return out;
}

WittVector from_ghost(const std::vector<Polynomial>& g, unsigned d, const CoefficientRing& ring) {
  auto divs = divisors(d);
  if (g.size() != divs.size()) throw std::invalid_argument("from_ghost: wrong number of ghost components");
  std::vector<Polynomial> inverses;
  for (unsigned j : divs) {
    auto inv = ring.inverse_of_integer(j);
    if (!inv) throw std::domain_error("from_ghost: divisor " + std::to_string(j) + " is not a unit");
    inverses.push_back(*inv);
  }
  WittVector out{d, {}};
  for (std::size_t k = 0; k < divs.size(); ++k) {
    unsigned j = divs[k];
    Polynomial rest = ring.reduce(g[k]);
    for (std::size_t m = 0; m < k; ++m) {
      unsigned i = divs[m];
      if (j % i != 0) continue;
      rest = ring.reduce(rest - out.components[m].pow(j / i).scaled(i));
    }
    out.components.push_back(ring.reduce(inverses[k] * rest));
  }
  return out;
}

Polynomial w_map(const WittVector& b, const CoefficientRing& ring) { return ghost(b, ring).back(); }

WittDescent::WittDescent(const RingPresentation& b, const std::vector<Polynomial>& i, unsigned d,
                         const GroebnerConfig& config)
    : b_(b, config), a_(b.with_relations(i), config), d_(d) {}

Polynomial WittDescent::evaluate(const WittVector& a) const {
  if (a.d != d_) throw std::invalid_argument("descent: vector length mismatch");
  WittVector lifted{a.d, {}};
  for (const auto& c : a.components) lifted.components.push_back(b_.reduce(c));
  return w_map(lifted, b_);
}

bool WittDescent::agrees_on_lift(const WittVector& a, const std::vector<Polynomial>& delta) const {
  WittVector shifted{a.d, {}};
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    if (!in_ideal(delta[k])) throw std::invalid_argument("descent: lift difference outside I");
    shifted.components.push_back(b_.reduce(a.components[k] + delta[k]));
  }
  return w_map(shifted, b_) == evaluate(a);
}

WittVector WittDescent::restrict(const WittVector& b) const {
  WittVector out{b.d, {}};
  for (const auto& c : b.components) out.components.push_back(a_.reduce(c));
  return out;
}

bool WittDescent::in_ideal(const Polynomial& f) const { return ideal_member(f, a_.basis()); }

WittDescent witt_descend(const RingPresentation& b, const std::vector<Polynomial>& i, unsigned d,
                         const GroebnerConfig& config) {
  if (d == 0) throw std::invalid_argument("witt_descend: d must be positive");
  GroebnerBasis gb = strong_groebner(b.relations, MonomialOrder::grevlex(), config);
  for (std::size_t x = 0; x < i.size(); ++x) {
    if (!ideal_member(i[x].scaled(d), gb))
      throw std::invalid_argument("witt_descend: d*I is not zero in B (generator " + to_string(i[x]) + ")");
    for (std::size_t y = x; y < i.size(); ++y)
      if (!ideal_member(i[x] * i[y], gb))
        throw std::invalid_argument("witt_descend: I^2 is not zero in B (" + to_string(i[x]) + " * " +
                                    to_string(i[y]) + ")");
  }
  return WittDescent(b, i, d, config);
}

}  // namespace fgring
