#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "engel/fingroup.hpp"
#include "engel/liealg.hpp"

namespace engel::cat {

// Built-in model registry. Names embed parameters:
//   Lie:    sl2, gl2, b2, heis3, sl3, jacobson:<p>, witt:<p>, and
//           '+'-joined direct sums such as "sl2+b2".
//   Group:  sym:<n>, alt:<n>, dihedral:<n>, cyclic:<n>, quaternion8,
//           sl2:<q>, psl2:<q>, psl3:3, sz:8, '*'-joined direct products
//           such as "sym:3*sym:3", and the semidirect models
//           a5-conj12 ((A5 x| <conjugation by (1 2)>) and
//           a5xa5-swap ((A5 x A5) x| <factor swap>).
lie::LiePtr builtin_lie(const std::string& name);
grp::GroupPtr builtin_group(const std::string& name, std::uint64_t cap = grp::kOrderCap);

// Catalog slices used by the verification suites.
std::vector<std::string> builtin_lie_names();
std::vector<std::string> small_group_names();    // every registered group of order <= 1000
std::vector<std::string> builtin_group_names();  // small slice + the large models

// JSON (de)serialization. `where` prefixes error messages with a source label.
fields::FieldSpec field_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json field_to_json(const fields::FieldSpec& spec);

lie::LiePtr lie_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json lie_to_json(const lie::LieAlgebra& L);

grp::GroupPtr group_from_json(const nlohmann::json& j, const std::string& where,
                              std::uint64_t cap = grp::kOrderCap);
// Supported for permutation, matrix and product representations.
nlohmann::json group_to_json(const grp::FiniteGroup& G);

// File ingest: detects which of the two schemas the file matches.
struct Loaded {
  lie::LiePtr lie;     // exactly one of the two is set
  grp::GroupPtr group;
};
Loaded ingest(const std::string& path, std::uint64_t cap = grp::kOrderCap);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// Directory holding catalog data files (e.g. the Suzuki group generators).
// Overridable with the ENGEL_DATA_DIR environment variable.
std::string data_dir();

}  // namespace engel::cat
