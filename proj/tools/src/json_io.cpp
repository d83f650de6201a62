#include "json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "leibcoh/errors.hpp"

namespace leibcoh::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

FieldSpec parse_field(const json& j) {
  const json& kind = member(j, "kind", "field");
  if (!kind.is_string()) fail("field.kind: expected a string");
  std::string k = kind.get<std::string>();
  if (k == "Q") return FieldSpec::rationals();
  if (k != "Fp") fail("field.kind: expected \"Q\" or \"Fp\", got \"" + k + "\"");
  const json& p = member(j, "p", "field");
  if (!p.is_number_unsigned()) fail("field.p: expected a positive integer");
  try {
    return FieldSpec::prime(p.get<std::uint64_t>());
  } catch (const std::invalid_argument& e) {
    fail(std::string("field.p: ") + e.what());
  }
}

Scalar parse_scalar(FieldSpec f, const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (!j.is_string()) fail(where + ": expected a scalar string");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where + ": " + e.what());
  }
}

std::size_t lookup(const StructureConstants& c, const json& name, const std::string& where) {
  if (!name.is_string()) fail(where + ": expected a basis name");
  try {
    return c.index_of(name.get<std::string>());
  } catch (const std::out_of_range&) {
    fail(where + ": unknown basis element \"" + name.get<std::string>() + "\"");
  }
}

SparseMatrix parse_matrix(FieldSpec f, const json& j, std::size_t m, const std::string& where) {
  if (!j.is_array() || j.size() != m) fail(where + ": expected " + std::to_string(m) + " rows");
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t r = 0; r < m; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != m)
      fail(where + ": row " + std::to_string(r) + " needs " + std::to_string(m) + " entries");
    for (std::size_t c = 0; c < m; ++c) {
      Scalar s = parse_scalar(f, row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      if (!s.is_zero()) t.push_back({r, c, s});
    }
  }
  return SparseMatrix::from_triplets(f, m, m, t);
}

std::vector<SparseMatrix> parse_actions(const json& j, const StructureConstants& c, std::size_t m,
                                        const std::string& where) {
  std::vector<SparseMatrix> out(c.dim(), SparseMatrix(c.field(), m, m));
  if (!j.is_object()) fail(where + ": expected an object of matrices");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t i = lookup(c, json(it.key()), where);
    out[i] = parse_matrix(c.field(), it.value(), m, where + "." + it.key());
  }
  return out;
}

json matrix_to_json(const SparseMatrix& a) {
  json rows = json::array();
  for (const auto& row : a.to_dense()) {
    json r = json::array();
    for (const Scalar& s : row) r.push_back(s.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

StructureConstants parse_algebra(const json& j) {
  FieldSpec f = parse_field(member(j, "field", "algebra"));
  const json& dim = member(j, "dim", "algebra");
  if (!dim.is_number_unsigned()) fail("algebra.dim: expected a non-negative integer");
  const json& basis = member(j, "basis", "algebra");
  if (!basis.is_array()) fail("algebra.basis: expected an array of names");
  if (basis.size() != dim.get<std::size_t>()) fail("algebra.basis: length differs from dim");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const json& b : basis) {
    if (!b.is_string()) fail("algebra.basis: names must be strings");
    if (!seen.insert(b.get<std::string>()).second) fail("algebra.basis: repeated name \"" + b.get<std::string>() + "\"");
    names.push_back(b.get<std::string>());
  }
  StructureConstants c(f, names);
  auto it = j.find("products");
  if (it == j.end()) return c;
  if (!it->is_array()) fail("algebra.products: expected an array");
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (std::size_t k = 0; k < it->size(); ++k) {
    const json& p = (*it)[k];
    std::string where = "algebra.products[" + std::to_string(k) + "]";
    if (!p.is_array() || p.size() != 3 || !p[2].is_array()) fail(where + ": expected [left, right, [[name, scalar], ...]]");
    std::size_t a = lookup(c, p[0], where);
    std::size_t b = lookup(c, p[1], where);
    if (!done.insert({a, b}).second) fail(where + ": product given twice");
    std::vector<Term> terms;
    for (const json& t : p[2]) {
      if (!t.is_array() || t.size() != 2) fail(where + ": terms are [name, scalar] pairs");
      terms.push_back({lookup(c, t[0], where), parse_scalar(f, t[1], where)});
    }
    c.set_product(a, b, std::move(terms));
  }
  return c;
}

json algebra_to_json(const StructureConstants& c) {
  json j;
  if (c.field().is_rationals())
    j["field"] = {{"kind", "Q"}};
  else
    j["field"] = {{"kind", "Fp"}, {"p", c.field().p()}};
  j["dim"] = c.dim();
  j["basis"] = c.basis_names();
  json products = json::array();
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < c.dim(); ++b) {
      if (c.product(a, b).empty()) continue;
      json terms = json::array();
      for (const Term& t : c.product(a, b)) terms.push_back({c.basis_names()[t.index], t.coeff.to_string()});
      products.push_back({c.basis_names()[a], c.basis_names()[b], terms});
    }
  j["products"] = products;
  return j;
}

BimoduleData parse_bimodule(const json& j, const StructureConstants& c) {
  const json& dim = member(j, "dim", "bimodule");
  if (!dim.is_number_unsigned()) fail("bimodule.dim: expected a non-negative integer");
  BimoduleData d;
  d.dim = dim.get<std::size_t>();
  auto section = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end()) return std::vector<SparseMatrix>(c.dim(), SparseMatrix(c.field(), d.dim, d.dim));
    return parse_actions(*it, c, d.dim, std::string("bimodule.") + key);
  };
  d.left = section("left");
  d.right = section("right");
  return d;
}

json bimodule_to_json(const Bimodule& m) {
  json j;
  j["dim"] = m.dim();
  json left = json::object(), right = json::object();
  const auto& names = m.algebra().basis_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    left[names[i]] = matrix_to_json(m.left(i));
    right[names[i]] = matrix_to_json(m.right(i));
  }
  j["left"] = left;
  j["right"] = right;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace leibcoh::cli
