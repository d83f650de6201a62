#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"

namespace leibcoh::cli {

// Algebra file:
//   {"field": {"kind": "Q"} | {"kind": "Fp", "p": 5}, "dim": n, "basis": [names],
//    "products": [[left, right, [[name, "scalar"], ...]], ...]}
// Omitted products are zero.  Scalars are decimal or "a/b" strings.
// Throws ParseError on anything malformed, including unknown names and
// repeated products.  The Leibniz identity is not checked here.
StructureConstants parse_algebra(const nlohmann::json& j);
nlohmann::json algebra_to_json(const StructureConstants& c);

// Bimodule file: {"dim": m, "left": {name: matrix, ...}, "right": {...}} with
// row-major m x m matrices of scalar strings acting on coordinate columns.
// Basis names missing from "left" or "right" act by zero.
struct BimoduleData {
  std::size_t dim = 0;
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;
};
BimoduleData parse_bimodule(const nlohmann::json& j, const StructureConstants& algebra);
nlohmann::json bimodule_to_json(const Bimodule& m);

// Reads and parses a JSON document; ParseError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

}  // namespace leibcoh::cli
