#include "odo/json_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace odo {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) parse_error(where + " must be an object");
}

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) parse_error("unknown key '" + item.key() + "' in " + where);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) parse_error("missing key '" + key + "' in " + where);
  return *it;
}

unsigned unsigned_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      j.get<long long>() > std::numeric_limits<unsigned>::max())
    parse_error("'" + where + "' must be a non-negative integer");
  return j.get<unsigned>();
}

IntVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error("'" + where + "' must be an array of integers");
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x, where));
  return out;
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) parse_error("'" + where + "' must be a non-empty array of rows");
  std::vector<IntVector> rows;
  for (const auto& row : j) {
    rows.push_back(vector_from_json(row, where));
    if (rows.back().size() != rows.front().size()) parse_error("'" + where + "' has rows of different lengths");
  }
  return IntMatrix::from_rows(rows);
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Json exponent_to_json(const Exponent& e) {
  if (e.is_finite()) return e.value;
  return e.render();
}

Json type_to_json(const ProfiniteType& type) {
  Json out = Json::array();
  for (const auto& pt : type.primes) {
    Json entries = Json::array();
    for (const auto& e : pt.exponents) entries.push_back(exponent_to_json(e));
    out.push_back(Json::array({int_to_json(pt.prime), entries}));
  }
  return out;
}

Json factorization_to_json(const PrimeFactorization& f) {
  Json out = Json::array();
  for (const auto& pp : f) out.push_back(Json::array({int_to_json(pp.prime), pp.exponent}));
  return out;
}

Coset coset_from_json(const QuotientTower& tower, unsigned level, const Json& j, const std::string& where) {
  Coset c{level, vector_from_json(j, where)};
  if (c.residue.size() != tower.dim()) parse_error("'" + where + "' has the wrong dimension");
  if (!tower.is_canonical(c)) return tower.reduce(level, c.residue);
  return c;
}

}  // namespace

Json int_to_json(const Int& value) {
  if (auto small = to_int64(value)) return *small;
  return to_string(value);
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    Int out;
    if (text.empty() || out.set_str(text, 10) != 0) parse_error("'" + where + "' holds a non-integer string");
    return out;
  }
  parse_error("'" + where + "' must hold integers");
}

ZdScale scale_from_json(const Json& j) {
  require_object(j, "scale");
  reject_unknown(j, {"name", "dim", "kind", "matrix", "prefix", "matrices"}, "scale");
  const Json& name = field(j, "name", "scale");
  if (!name.is_string()) parse_error("'name' must be a string");
  const unsigned dim = unsigned_from_json(field(j, "dim", "scale"), "dim");
  const Json& kind = field(j, "kind", "scale");
  if (!kind.is_string()) parse_error("'kind' must be a string");

  auto check_dim = [&](const IntMatrix& m, const std::string& key) {
    if (m.rows() != dim || m.cols() != dim) parse_error("'" + key + "' must be " + std::to_string(dim) + "x" +
                                                        std::to_string(dim));
  };

  if (kind == "geometric") {
    if (j.contains("matrices")) parse_error("key 'matrices' is not allowed for a geometric scale");
    IntMatrix base = matrix_from_json(field(j, "matrix", "scale"), "matrix");
    check_dim(base, "matrix");
    std::optional<IntMatrix> prefix;
    if (j.contains("prefix")) {
      prefix = matrix_from_json(j.at("prefix"), "prefix");
      check_dim(*prefix, "prefix");
    }
    return ZdScale::geometric(name.get<std::string>(), std::move(base), std::move(prefix));
  }
  if (kind == "explicit") {
    for (const char* key : {"matrix", "prefix"})
      if (j.contains(key)) parse_error(std::string("key '") + key + "' is not allowed for an explicit scale");
    const Json& list = field(j, "matrices", "scale");
    if (!list.is_array() || list.empty()) parse_error("'matrices' must be a non-empty array");
    std::vector<IntMatrix> ms;
    for (const auto& m : list) {
      ms.push_back(matrix_from_json(m, "matrices"));
      check_dim(ms.back(), "matrices");
    }
    return ZdScale::explicit_list(name.get<std::string>(), std::move(ms));
  }
  parse_error("'kind' must be \"geometric\" or \"explicit\"");
}

Json scale_to_json(const ZdScale& scale) {
  Json out{{"name", scale.name()}, {"dim", scale.dim()}};
  if (scale.is_geometric()) {
    out["kind"] = "geometric";
    out["matrix"] = matrix_to_json(scale.geometric_data().base);
    if (scale.has_prefix()) out["prefix"] = matrix_to_json(scale.geometric_data().prefix);
  } else {
    out["kind"] = "explicit";
    Json list = Json::array();
    for (const auto& m : scale.explicit_data().matrices) list.push_back(matrix_to_json(m));
    out["matrices"] = list;
  }
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

ZdScale load_scale(const std::string& path) { return scale_from_json(load_json(path)); }

std::pair<unsigned, unsigned> element_shape(const Json& j) {
  require_object(j, "element");
  reject_unknown(j, {"level", "depth", "table"}, "element");
  const unsigned n = unsigned_from_json(field(j, "level", "element"), "level");
  const unsigned N = unsigned_from_json(field(j, "depth", "element"), "depth");
  if (N < n) parse_error("'depth' must be at least 'level'");
  return {n, N};
}

FullGroupElement element_from_json(const TowerPtr& tower, const Json& j) {
  const auto [n, N] = element_shape(j);
  const Json& table = field(j, "table", "element");
  if (!table.is_array()) parse_error("'table' must be an array");
  std::vector<std::pair<Coset, Coset>> cells;
  for (const auto& row : table) {
    require_object(row, "table entry");
    reject_unknown(row, {"cell", "translation"}, "table entry");
    cells.emplace_back(coset_from_json(*tower, n, field(row, "cell", "table entry"), "cell"),
                       coset_from_json(*tower, N, field(row, "translation", "table entry"), "translation"));
  }
  return FullGroupElement::from_cells(tower, n, N, cells);
}

Json element_to_json(const FullGroupElement& f) {
  const auto cells = f.tower()->enumerate(f.level());
  Json table = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i)
    table.push_back({{"cell", vector_to_json(cells[i].residue)},
                     {"translation", vector_to_json(f.table()[i].residue)}});
  return {{"level", f.level()}, {"depth", f.depth()}, {"table", table}};
}

Json decomposition_to_json(const Decomposition& dec) {
  const auto cells = dec.tower->enumerate(dec.level);
  Json sigma = Json::array(), phi = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    sigma.push_back({{"cell", vector_to_json(cells[i].residue)},
                     {"image", vector_to_json(cells[dec.sigma[i]].residue)}});
    phi.push_back({{"cell", vector_to_json(cells[i].residue)}, {"w", vector_to_json(dec.phi[i].residue)}});
  }
  return {{"level", dec.level}, {"depth", dec.depth}, {"sigma", sigma}, {"phi", phi}};
}

Decomposition decomposition_from_json(const TowerPtr& tower, const Json& j) {
  require_object(j, "decomposition");
  reject_unknown(j, {"level", "depth", "sigma", "phi"}, "decomposition");
  Decomposition dec;
  dec.tower = tower;
  dec.level = unsigned_from_json(field(j, "level", "decomposition"), "level");
  dec.depth = unsigned_from_json(field(j, "depth", "decomposition"), "depth");
  if (dec.depth < dec.level || dec.depth > tower->depth())
    throw Error(Errc::DepthExceeded, "decomposition depth outside the tower");
  const std::size_t count = tower->enumerate(dec.level).size();
  const Json& sigma = field(j, "sigma", "decomposition");
  const Json& phi = field(j, "phi", "decomposition");
  if (!sigma.is_array() || sigma.size() != count) parse_error("'sigma' must list every cell once");
  if (!phi.is_array() || phi.size() != count) parse_error("'phi' must list every cell once");
  dec.sigma.assign(count, count);
  dec.phi.assign(count, Coset{});
  std::vector<bool> seen_sigma(count), seen_phi(count), hit(count);
  for (const auto& row : sigma) {
    require_object(row, "sigma entry");
    reject_unknown(row, {"cell", "image"}, "sigma entry");
    const std::size_t a = tower->index_of(coset_from_json(*tower, dec.level, field(row, "cell", "sigma entry"), "cell"));
    const std::size_t b = tower->index_of(coset_from_json(*tower, dec.level, field(row, "image", "sigma entry"), "image"));
    if (seen_sigma[a]) parse_error("cell listed twice in 'sigma'");
    if (hit[b]) throw Error(Errc::NotBijective, "sigma maps two cells to one image");
    seen_sigma[a] = hit[b] = true;
    dec.sigma[a] = b;
  }
  for (const auto& row : phi) {
    require_object(row, "phi entry");
    reject_unknown(row, {"cell", "w"}, "phi entry");
    const std::size_t a = tower->index_of(coset_from_json(*tower, dec.level, field(row, "cell", "phi entry"), "cell"));
    if (seen_phi[a]) parse_error("cell listed twice in 'phi'");
    seen_phi[a] = true;
    Coset w = coset_from_json(*tower, dec.depth, field(row, "w", "phi entry"), "w");
    if (tower->project(w, dec.level) != tower->zero(dec.level))
      parse_error("'w' entries must vanish at the decomposition level");
    dec.phi[a] = std::move(w);
  }
  return dec;
}

Json certificate_to_json(const TrivialityCertificate& cert) {
  Json out{{"status", status_name(cert.status)}, {"rule", cert.rule}};
  if (cert.status == TrivialityCertificate::Status::EvidenceOnly) {
    out["depth"] = cert.depth;
    out["shortest_vector"] = vector_to_json(cert.shortest_vector);
    out["shortest_norm_squared"] = int_to_json(cert.shortest_norm_squared);
  }
  return out;
}

Json invariants_block(const ScaleInvariants& inv) {
  Json supernatural = Json::array();
  for (const auto& [p, e] : inv.supernatural.factors)
    supernatural.push_back(Json::array({int_to_json(p), exponent_to_json(e)}));
  Json out{{"supernatural", supernatural}};
  out["profinite_type"] = inv.type ? type_to_json(*inv.type) : Json(nullptr);
  if (inv.min_generators)
    out["min_generators"] = *inv.min_generators;
  else
    out["min_generators"] = "unknown";
  return out;
}

Json report_to_json(const DecisionReport& report) {
  Json out{{"question", question_name(report.question)}, {"verdict", verdict_name(report.verdict)}};
  if (report.witness) {
    const Witness& w = *report.witness;
    out["witness"] = {{"type", type_to_json(w.type)},
                      {"type_text", w.type.render()},
                      {"index", int_to_json(w.index)},
                      {"index_factorization", factorization_to_json(w.index_factorization)}};
  } else {
    out["witness"] = nullptr;
  }
  if (report.distinguishing) {
    const Distinguishing& d = *report.distinguishing;
    out["distinguishing"] = {{"kind", d.kind},
                             {"prime", d.prime ? int_to_json(*d.prime) : Json(nullptr)},
                             {"first", d.first},
                             {"second", d.second}};
  } else {
    out["distinguishing"] = nullptr;
  }
  out["invariants"] = {{"s1", invariants_block(report.s1)}, {"s2", invariants_block(report.s2)}};
  out["notes"] = report.notes;
  return out;
}

Json check_to_json(const CheckReport& check) {
  Json facts = Json::array();
  for (const auto& [k, v] : check.facts) facts.push_back(Json::array({k, v}));
  return {{"check", check.check},
          {"subject", check.subject},
          {"passed", check.passed},
          {"mode", mode_name(check.mode)},
          {"seed", check.seed ? Json(*check.seed) : Json(nullptr)},
          {"facts", facts},
          {"failures", check.failures}};
}

Json example_to_json(const ExampleRecord& record) {
  Json asserted = Json::object(), computed = Json::object();
  for (const auto& [q, v] : record.asserted) asserted[question_name(q)] = verdict_name(v);
  for (const auto& r : record.computed) computed[question_name(r.question)] = verdict_name(r.verdict);
  Json facts = Json::array();
  for (const auto& [k, v] : record.facts) facts.push_back(Json::array({k, v}));
  return {{"id", record.id},
          {"description", record.description},
          {"first", scale_to_json(record.first)},
          {"second", scale_to_json(record.second)},
          {"asserted", asserted},
          {"computed", computed},
          {"discrepancy", record.discrepancy},
          {"facts", facts},
          {"notes", record.notes}};
}

}  // namespace odo
