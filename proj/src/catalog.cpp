#include "engel/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <fstream>
#include <numeric>
#include <sstream>

namespace engel::cat {

namespace {

using fields::Field;
using fields::FieldPtr;
using fields::FieldSpec;
using fields::Scalar;
using nlohmann::json;

std::pair<std::string, long> split_param(const std::string& name) {
  auto pos = name.find(':');
  if (pos == std::string::npos) return {name, -1};
  const std::string head = name.substr(0, pos);
  const std::string tail = name.substr(pos + 1);
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
    throw BadParams("bad numeric parameter in model name '" + name + "'");
  return {head, std::stol(tail)};
}

void require_prime(long p, const std::string& name) {
  if (p < 2 || !fields::is_prime(std::uint64_t(p)))
    throw BadParams("model '" + name + "' needs a prime parameter, got " + std::to_string(p));
}

// ---------------------------------------------------------------- Lie models

// Structure-constant assembly with automatic antisymmetric completion.
struct TensorBuilder {
  FieldPtr F;
  std::size_t d;
  std::vector<Scalar> t;
  TensorBuilder(FieldPtr field, std::size_t dim)
      : F(std::move(field)), d(dim), t(dim * dim * dim, F->zero()) {}
  void set(std::size_t i, std::size_t j, std::size_t k, long v) {
    t[(i * d + j) * d + k] = F->from_int(v);
    t[(j * d + i) * d + k] = F->from_int(-v);
  }
};

lie::LiePtr make_sl2() {
  TensorBuilder b(Field::make(FieldSpec::Q()), 3);
  // basis e_+, e_-, h
  b.set(0, 1, 2, 1);   // [e+, e-] = h
  b.set(2, 0, 0, 2);   // [h, e+] = 2 e+
  b.set(2, 1, 1, -2);  // [h, e-] = -2 e-
  return lie::LieAlgebra::make(b.F, 3, b.t, {"e+", "e-", "h"});
}

lie::LiePtr make_gl2() {
  TensorBuilder b(Field::make(FieldSpec::Q()), 4);
  // sl2 plus a central element z (= the identity matrix direction)
  b.set(0, 1, 2, 1);
  b.set(2, 0, 0, 2);
  b.set(2, 1, 1, -2);
  return lie::LieAlgebra::make(b.F, 4, b.t, {"e+", "e-", "h", "z"});
}

lie::LiePtr make_b2() {
  TensorBuilder b(Field::make(FieldSpec::Q()), 2);
  b.set(0, 1, 1, 1);  // [h, e] = e
  return lie::LieAlgebra::make(b.F, 2, b.t, {"h", "e"});
}

lie::LiePtr make_heis3() {
  TensorBuilder b(Field::make(FieldSpec::Q()), 3);
  b.set(0, 1, 2, 1);  // [x, y] = z, z central
  return lie::LieAlgebra::make(b.F, 3, b.t, {"x", "y", "z"});
}

// sl3 from literal 3x3 matrix commutators: basis E12, E13, E23, E21, E31,
// E32, H1 = E11-E22, H2 = E22-E33.
lie::LiePtr make_sl3() {
  using M3 = std::array<std::array<long, 3>, 3>;
  auto unit = [](int r, int c) {
    M3 m{};
    m[std::size_t(r)][std::size_t(c)] = 1;
    return m;
  };
  std::vector<M3> basis(8);
  basis[0] = unit(0, 1);
  basis[1] = unit(0, 2);
  basis[2] = unit(1, 2);
  basis[3] = unit(1, 0);
  basis[4] = unit(2, 0);
  basis[5] = unit(2, 1);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      basis[6][std::size_t(r)][std::size_t(c)] = (r == c) ? (r == 0 ? 1 : (r == 1 ? -1 : 0)) : 0;
      basis[7][std::size_t(r)][std::size_t(c)] = (r == c) ? (r == 1 ? 1 : (r == 2 ? -1 : 0)) : 0;
    }
  auto commutator = [](const M3& a, const M3& b) {
    M3 r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        long s = 0;
        for (int k = 0; k < 3; ++k)
          s += a[std::size_t(i)][std::size_t(k)] * b[std::size_t(k)][std::size_t(j)] -
               b[std::size_t(i)][std::size_t(k)] * a[std::size_t(k)][std::size_t(j)];
        r[std::size_t(i)][std::size_t(j)] = s;
      }
    return r;
  };
  // Coordinates of a traceless matrix in the basis above.
  auto coords = [](const M3& m) {
    std::array<long, 8> c{};
    c[0] = m[0][1];
    c[1] = m[0][2];
    c[2] = m[1][2];
    c[3] = m[1][0];
    c[4] = m[2][0];
    c[5] = m[2][1];
    c[6] = m[0][0];
    c[7] = -m[2][2];
    return c;
  };
  TensorBuilder b(Field::make(FieldSpec::Q()), 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      auto c = coords(commutator(basis[i], basis[j]));
      for (std::size_t k = 0; k < 8; ++k)
        if (c[k] != 0) b.set(i, j, k, c[k]);
    }
  return lie::LieAlgebra::make(b.F, 8, b.t,
                               {"E12", "E13", "E23", "E21", "E31", "E32", "H1", "H2"});
}

// Solvable char-p algebra on e, f, e_1..e_p with [e,f] = e, [e,e_i] = e_{i+1}
// (e_p wrapping to e_1), [f,e_i] = (3-i) e_i and <e_1..e_p> abelian. The
// coefficient 3-i is the unique choice making the Jacobi identity hold while
// keeping [e,f] = e, [e,e_i] = e_{i+1} and the documented bracket values
// [f+e_1, e+e_2] = -e, v_2 = e+e_2, v_3 = e_3.
lie::LiePtr make_jacobson(long p) {
  const std::size_t d = std::size_t(p) + 2;
  TensorBuilder b(Field::make(FieldSpec::GF(unsigned(p))), d);
  b.set(0, 1, 0, 1);  // [e, f] = e
  for (long i = 1; i <= p; ++i) {
    const std::size_t ei = std::size_t(i) + 1;
    const std::size_t next = (i < p) ? ei + 1 : 2;
    b.set(0, ei, next, 1);    // [e, e_i] = e_{i+1}, cyclically
    b.set(1, ei, ei, 3 - i);  // [f, e_i]
  }
  std::vector<std::string> names = {"e", "f"};
  for (long i = 1; i <= p; ++i) names.push_back("e" + std::to_string(i));
  return lie::LieAlgebra::make(b.F, d, b.t, std::move(names));
}

// Witt algebra W(1;1): basis e_{-1}..e_{p-2}, [e_i,e_j] = (j-i) e_{i+j}
// when the target index is in range.
lie::LiePtr make_witt(long p) {
  const std::size_t d = std::size_t(p);
  TensorBuilder b(Field::make(FieldSpec::GF(unsigned(p))), d);
  for (long i = -1; i <= p - 2; ++i)
    for (long j = i + 1; j <= p - 2; ++j)
      if (-1 <= i + j && i + j <= p - 2)
        b.set(std::size_t(i + 1), std::size_t(j + 1), std::size_t(i + j + 1), j - i);
  std::vector<std::string> names;
  for (long i = -1; i <= p - 2; ++i)
    names.push_back(i < 0 ? "e-1" : "e" + std::to_string(i));
  return lie::LieAlgebra::make(b.F, d, b.t, std::move(names));
}

lie::LiePtr builtin_lie_single(const std::string& name) {
  auto [head, p] = split_param(name);
  if (head == "sl2" && p < 0) return make_sl2();
  if (head == "gl2" && p < 0) return make_gl2();
  if (head == "b2" && p < 0) return make_b2();
  if (head == "heis3" && p < 0) return make_heis3();
  if (head == "sl3" && p < 0) return make_sl3();
  if (head == "jacobson") {
    require_prime(p, name);
    return make_jacobson(p);
  }
  if (head == "witt") {
    require_prime(p, name);
    if (p <= 2) throw BadParams("witt needs p > 2 (simplicity fails otherwise)");
    return make_witt(p);
  }
  throw BadParams("unknown builtin Lie model '" + name + "'");
}

// -------------------------------------------------------------- group models

using grp::FiniteGroup;
using grp::GroupPtr;
using grp::Key;

void check_order(const GroupPtr& G, std::uint64_t expected, const std::string& name) {
  if (G->order() != expected)
    throw ValidationError("builtin '" + name + "' has order " + std::to_string(G->order()) +
                          ", expected " + std::to_string(expected));
}

Key cycle_key(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Key k(n);
  std::iota(k.begin(), k.end(), 0u);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) k[c[i]] = c[(i + 1) % c.size()];
  return k;
}

std::uint64_t factorial(long n) {
  std::uint64_t r = 1;
  for (long i = 2; i <= n; ++i) r *= std::uint64_t(i);
  return r;
}

GroupPtr make_sym(long n, std::uint64_t cap) {
  if (n < 2) throw BadParams("sym needs n >= 2");
  auto rep = std::make_shared<grp::PermRep>(std::size_t(n));
  std::vector<Key> gens = {cycle_key(std::size_t(n), {{0, 1}})};
  std::vector<std::uint32_t> full(std::size_t(n), 0u);
  std::iota(full.begin(), full.end(), 0u);
  gens.push_back(cycle_key(std::size_t(n), {full}));
  auto G = FiniteGroup::generate(rep, gens, cap);
  if (n <= 12) check_order(G, factorial(n), "sym:" + std::to_string(n));
  return G;
}

GroupPtr make_alt(long n, std::uint64_t cap) {
  if (n < 3) throw BadParams("alt needs n >= 3");
  auto rep = std::make_shared<grp::PermRep>(std::size_t(n));
  std::vector<Key> gens = {cycle_key(std::size_t(n), {{0, 1, 2}})};
  std::vector<std::uint32_t> c;
  for (std::uint32_t i = (n % 2 == 0) ? 1 : 0; i < std::uint32_t(n); ++i) c.push_back(i);
  if (c.size() >= 2) gens.push_back(cycle_key(std::size_t(n), {c}));
  auto G = FiniteGroup::generate(rep, gens, cap);
  if (n <= 12) check_order(G, factorial(n) / 2, "alt:" + std::to_string(n));
  return G;
}

GroupPtr make_dihedral(long n, std::uint64_t cap) {
  if (n < 3) throw BadParams("dihedral needs n >= 3");
  auto rep = std::make_shared<grp::PermRep>(std::size_t(n));
  std::vector<std::uint32_t> full(std::size_t(n), 0u);
  std::iota(full.begin(), full.end(), 0u);
  Key rot = cycle_key(std::size_t(n), {full});
  Key refl(std::size_t(n), 0u);
  for (long i = 0; i < n; ++i) refl[std::size_t(i)] = std::uint32_t((n - i) % n);
  auto G = FiniteGroup::generate(rep, {rot, refl}, cap);
  check_order(G, std::uint64_t(2 * n), "dihedral:" + std::to_string(n));
  return G;
}

FieldPtr field_of_order(long q) {
  if (fields::is_prime(std::uint64_t(q))) return Field::make(FieldSpec::GF(unsigned(q)));
  // fixed irreducible moduli for the small prime powers in the registry
  static const std::map<long, std::pair<unsigned, std::vector<unsigned>>> mods = {
      {4, {2, {1, 1, 1}}},        // t^2 + t + 1
      {8, {2, {1, 1, 0, 1}}},     // t^3 + t + 1
      {9, {3, {1, 0, 1}}},        // t^2 + 1
      {16, {2, {1, 1, 0, 0, 1}}}, // t^4 + t + 1
      {25, {5, {1, 1, 1}}},       // t^2 + t + 1
      {27, {3, {1, 2, 0, 1}}},    // t^3 + 2t + 1
  };
  auto it = mods.find(q);
  if (it == mods.end())
    throw BadParams("no builtin field of order " + std::to_string(q));
  return Field::make(
      FieldSpec::GFext(it->second.first, unsigned(it->second.second.size() - 1), it->second.second));
}

// SL(2,q) (optionally modulo its center) from the transvection generators
// E12(t^i), E21(t^i) over a basis of the field.
GroupPtr make_sl2q(long q, bool projective, std::uint64_t cap, const std::string& name) {
  if (q < 2) throw BadParams("sl2/psl2 need q >= 2");
  FieldPtr F = field_of_order(q);
  auto rep = std::make_shared<grp::MatRep>(F, 2, projective);
  std::vector<Key> gens;
  std::uint32_t one = F->encode(F->one());
  std::uint32_t t = F->spec().kind == fields::Kind::extension ? F->encode(F->decode(unsigned(F->spec().p)))
                                                              : one;
  unsigned k = F->spec().kind == fields::Kind::extension ? F->spec().k : 1;
  std::uint32_t pw = one;
  for (unsigned i = 0; i < k; ++i) {
    gens.push_back(rep->canon({one, pw, 0, one}));  // upper transvection
    gens.push_back(rep->canon({one, 0, pw, one}));  // lower transvection
    pw = F->cmul(pw, t);
  }
  auto G = FiniteGroup::generate(rep, gens, cap);
  std::uint64_t n = std::uint64_t(q) * (std::uint64_t(q) * q - 1);
  if (projective && q % 2 == 1) n /= 2;
  check_order(G, n, name);
  return G;
}

GroupPtr make_psl33(std::uint64_t cap) {
  FieldPtr F = Field::make(FieldSpec::GF(3));
  auto rep = std::make_shared<grp::MatRep>(F, 3, true);
  Key e12 = {1, 1, 0, 0, 1, 0, 0, 0, 1};
  Key cyc = {0, 0, 1, 1, 0, 0, 0, 1, 0};
  auto G = FiniteGroup::generate(rep, {rep->canon(e12), rep->canon(cyc)}, cap);
  check_order(G, 5616, "psl3:3");
  return G;
}

GroupPtr make_quaternion8(std::uint64_t cap) {
  FieldPtr F = Field::make(FieldSpec::GF(3));
  auto rep = std::make_shared<grp::MatRep>(F, 2, false);
  auto G = FiniteGroup::generate(rep, {Key{0, 2, 1, 0}, Key{1, 1, 1, 2}}, cap);
  check_order(G, 8, "quaternion8");
  // Q8, not D4: a unique involution
  unsigned involutions = 0;
  for (std::uint32_t i = 1; i < G->order(); ++i)
    if (G->element_order(i) == 2) ++involutions;
  if (involutions != 1) throw ValidationError("quaternion8 generators produced a wrong group");
  return G;
}

GroupPtr make_sz8(std::uint64_t cap) {
  auto path = data_dir() + "/sz8.json";
  auto G = group_from_json(load_json_file(path), path, cap);
  check_order(G, 29120, "sz:8");
  return G;
}

GroupPtr builtin_group_single(const std::string& name, std::uint64_t cap) {
  if (name == "quaternion8") return make_quaternion8(cap);
  if (name == "sz:8") return make_sz8(cap);
  if (name == "a5-conj12") {
    GroupPtr a5 = make_alt(5, cap);
    auto sigma = grp::perm_conjugation(*a5, grp::parse_perm(5, "(1 2)"));
    auto G = grp::semidirect_cyclic(a5, sigma);
    check_order(G, 120, name);
    return G;
  }
  if (name == "a5xa5-swap") {
    GroupPtr a5 = make_alt(5, cap);
    GroupPtr prod = grp::direct_product(a5, a5);
    auto G = grp::semidirect_cyclic(prod, grp::swap_automorphism(*prod));
    check_order(G, 7200, name);
    return G;
  }
  auto [head, p] = split_param(name);
  if (head == "sym") return make_sym(p, cap);
  if (head == "alt") return make_alt(p, cap);
  if (head == "dihedral") return make_dihedral(p, cap);
  if (head == "cyclic") {
    if (p < 1) throw BadParams("cyclic needs n >= 1");
    auto G = grp::cyclic_group(unsigned(p));
    check_order(G, std::uint64_t(p), name);
    return G;
  }
  if (head == "sl2") return make_sl2q(p, false, cap, name);
  if (head == "psl2") return make_sl2q(p, true, cap, name);
  if (head == "psl3") {
    if (p != 3) throw BadParams("only psl3:3 is built in");
    return make_psl33(cap);
  }
  throw BadParams("unknown builtin group '" + name + "'");
}

// ------------------------------------------------------------- JSON plumbing

[[noreturn]] void schema_fail(const std::string& where, const std::string& msg) {
  throw SchemaError(where + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    schema_fail(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t need_size(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    schema_fail(where, std::string("'") + key + "' must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace

lie::LiePtr builtin_lie(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '+')) parts.push_back(part);
  if (parts.empty()) throw BadParams("empty Lie model name");
  lie::LiePtr L = builtin_lie_single(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    L = lie::LieAlgebra::direct_sum(L, builtin_lie_single(parts[i]));
  return L;
}

grp::GroupPtr builtin_group(const std::string& name, std::uint64_t cap) {
  if (cap > grp::kOrderCapMax)
    throw BadParams("group order cap exceeds the hard maximum");
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '*')) parts.push_back(part);
  if (parts.empty()) throw BadParams("empty group model name");
  grp::GroupPtr G = builtin_group_single(parts[0], cap);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    grp::GroupPtr H = builtin_group_single(parts[i], cap);
    if (G->order() * H->order() > cap) throw OrderExceedsCap("product order exceeds cap");
    G = grp::direct_product(G, H);
  }
  return G;
}

std::vector<std::string> builtin_lie_names() {
  return {"sl2",        "gl2",        "b2",     "heis3",  "sl3",   "sl2+b2",
          "jacobson:5", "jacobson:7", "witt:5", "witt:7"};
}

std::vector<std::string> small_group_names() {
  return {"cyclic:2",   "cyclic:6",   "cyclic:12",  "sym:3",      "sym:4",
          "sym:5",      "alt:4",      "alt:5",      "dihedral:4", "dihedral:5",
          "dihedral:6", "dihedral:7", "dihedral:8", "quaternion8", "sl2:3",
          "sl2:5",      "psl2:7",     "sym:3*sym:3", "alt:4*cyclic:2"};
}

std::vector<std::string> builtin_group_names() {
  auto names = small_group_names();
  for (const char* n : {"psl2:4", "psl2:5", "psl3:3", "sz:8", "alt:5*alt:5",
                        "a5-conj12", "a5xa5-swap"})
    names.push_back(n);
  return names;
}

fields::FieldSpec field_from_json(const json& j, const std::string& where) {
  const std::string kind = need(j, "kind", where).get<std::string>();
  if (kind == "rationals") return FieldSpec::Q();
  if (kind == "prime") return FieldSpec::GF(need(j, "p", where).get<unsigned>());
  if (kind == "extension") {
    unsigned p = need(j, "p", where).get<unsigned>();
    unsigned k = need(j, "k", where).get<unsigned>();
    const json& m = need(j, "modulus", where);
    if (!m.is_array() || m.size() != k + 1)
      schema_fail(where, "modulus must list k+1 coefficients");
    std::vector<unsigned> mod;
    for (const auto& c : m) mod.push_back(c.get<unsigned>());
    return FieldSpec::GFext(p, k, std::move(mod));
  }
  schema_fail(where, "field kind must be rationals|prime|extension");
}

json field_to_json(const fields::FieldSpec& spec) {
  switch (spec.kind) {
    case fields::Kind::rationals:
      return {{"kind", "rationals"}};
    case fields::Kind::prime:
      return {{"kind", "prime"}, {"p", spec.p}};
    case fields::Kind::extension:
      return {{"kind", "extension"}, {"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
  }
  throw BadParams("corrupt field spec");
}

lie::LiePtr lie_from_json(const json& j, const std::string& where) {
  FieldPtr F = Field::make(field_from_json(need(j, "field", where), where + "/field"));
  const std::size_t d = need_size(j, "dim", where);
  std::vector<std::string> names;
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || b.size() != d) schema_fail(where, "basis must list dim names");
    for (const auto& n : b) names.push_back(n.get<std::string>());
  }
  const json& table = need(j, "table", where);
  if (!table.is_array()) schema_fail(where, "table must be an array");
  std::vector<Scalar> tensor(d * d * d, F->zero());
  std::vector<std::uint8_t> seen(d * d, 0);
  for (std::size_t e = 0; e < table.size(); ++e) {
    const std::string loc = where + "/table[" + std::to_string(e) + "]";
    const json& entry = table[e];
    const std::size_t i = need(entry, "i", loc).get<std::size_t>();
    const std::size_t j2 = need(entry, "j", loc).get<std::size_t>();
    if (i >= d || j2 >= d) schema_fail(loc, "basis index out of range");
    if (i >= j2) schema_fail(loc, "entries must have i < j");
    if (seen[i * d + j2]) schema_fail(loc, "duplicate (i,j) pair");
    seen[i * d + j2] = 1;
    const json& coeffs = need(entry, "c", loc);
    if (!coeffs.is_array()) schema_fail(loc, "'c' must be an array");
    for (const auto& c : coeffs) {
      const std::size_t k = need(c, "k", loc).get<std::size_t>();
      if (k >= d) schema_fail(loc, "coefficient index out of range");
      Scalar v;
      try {
        v = F->parse(need(c, "v", loc).get<std::string>());
      } catch (const Error& err) {
        schema_fail(loc, err.what());
      }
      tensor[(i * d + j2) * d + k] = v;
      tensor[(j2 * d + i) * d + k] = F->neg(v);
    }
  }
  try {
    return lie::LieAlgebra::make(F, d, tensor, std::move(names));
  } catch (const AntisymmetryViolation& err) {
    throw ValidationError(where + ": " + err.what());
  } catch (const JacobiViolation& err) {
    throw ValidationError(where + ": " + err.what());
  }
}

json lie_to_json(const lie::LieAlgebra& L) {
  const auto& F = L.field();
  json table = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      json coeffs = json::array();
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!F->is_zero(L.c(i, j, k)))
          coeffs.push_back({{"k", k}, {"v", F->format(L.c(i, j, k))}});
      if (!coeffs.empty()) table.push_back({{"i", i}, {"j", j}, {"c", coeffs}});
    }
  return {{"field", field_to_json(F->spec())},
          {"dim", L.dim()},
          {"basis", L.names()},
          {"table", table}};
}

grp::GroupPtr group_from_json(const json& j, const std::string& where, std::uint64_t cap) {
  const std::string kind = need(j, "representation", where).get<std::string>();
  grp::GroupPtr G;
  if (kind == "permutation") {
    const std::size_t deg = need_size(j, "degree", where);
    auto rep = std::make_shared<grp::PermRep>(deg);
    std::vector<Key> gens;
    const json& gj = need(j, "generators", where);
    if (!gj.is_array()) schema_fail(where, "generators must be an array");
    for (const auto& g : gj) {
      try {
        gens.push_back(grp::parse_perm(deg, g.get<std::string>()));
      } catch (const Error& err) {
        schema_fail(where, err.what());
      }
    }
    G = FiniteGroup::generate(rep, gens, cap);
  } else if (kind == "matrix") {
    const std::size_t deg = need_size(j, "degree", where);
    FieldPtr F = Field::make(field_from_json(need(j, "field", where), where + "/field"));
    if (!F->finite()) schema_fail(where, "matrix groups need a finite field");
    bool mod_center = j.value("modulo_center", false);
    auto rep = std::make_shared<grp::MatRep>(F, deg, mod_center);
    std::vector<Key> gens;
    const json& gj = need(j, "generators", where);
    if (!gj.is_array()) schema_fail(where, "generators must be an array");
    for (const auto& g : gj) {
      if (!g.is_array() || g.size() != deg) schema_fail(where, "matrix must list degree rows");
      Key m;
      for (const auto& row : g) {
        if (!row.is_array() || row.size() != deg)
          schema_fail(where, "matrix row of wrong length");
        for (const auto& s : row) {
          try {
            m.push_back(F->encode(F->parse(s.get<std::string>())));
          } catch (const Error& err) {
            schema_fail(where, err.what());
          }
        }
      }
      gens.push_back(rep->canon(std::move(m)));
    }
    G = FiniteGroup::generate(rep, gens, cap);
  } else if (kind == "product") {
    const json& f = need(j, "factors", where);
    if (!f.is_array() || f.size() < 2) schema_fail(where, "product needs >= 2 factors");
    G = group_from_json(f[0], where + "/factors[0]", cap);
    for (std::size_t i = 1; i < f.size(); ++i)
      G = grp::direct_product(
          G, group_from_json(f[i], where + "/factors[" + std::to_string(i) + "]", cap));
  } else {
    schema_fail(where, "representation must be permutation|matrix|product");
  }
  if (j.contains("order_check")) {
    std::uint64_t expected = j.at("order_check").get<std::uint64_t>();
    if (G->order() != expected)
      throw ValidationError(where + ": order " + std::to_string(G->order()) +
                            " does not match the declared " + std::to_string(expected));
  }
  return G;
}

json group_to_json(const grp::FiniteGroup& G) {
  const auto* rep = G.rep().get();
  if (const auto* pr = dynamic_cast<const grp::PermRep*>(rep)) {
    json gens = json::array();
    for (auto gi : G.generators()) gens.push_back(grp::format_perm(G.key(gi)));
    return {{"representation", "permutation"}, {"degree", pr->degree()}, {"generators", gens}};
  }
  if (const auto* mr = dynamic_cast<const grp::MatRep*>(rep)) {
    const auto& F = mr->field();
    json gens = json::array();
    for (auto gi : G.generators()) {
      const Key& k = G.key(gi);
      json m = json::array();
      for (std::size_t r = 0; r < mr->degree(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < mr->degree(); ++c)
          row.push_back(F->format(F->decode(k[r * mr->degree() + c])));
        m.push_back(row);
      }
      gens.push_back(m);
    }
    return {{"representation", "matrix"},
            {"degree", mr->degree()},
            {"field", field_to_json(F->spec())},
            {"modulo_center", mr->modulo_center()},
            {"generators", gens}};
  }
  if (const auto* prd = dynamic_cast<const grp::ProdRep*>(rep)) {
    return {{"representation", "product"},
            {"factors", json::array({group_to_json(*prd->left()), group_to_json(*prd->right())})}};
  }
  throw BadParams("only permutation, matrix and product groups can be exported");
}

Loaded ingest(const std::string& path, std::uint64_t cap) {
  json j = load_json_file(path);
  if (j.is_object() && j.contains("representation"))
    return {nullptr, group_from_json(j, path, cap)};
  if (j.is_object() && j.contains("table")) return {lie_from_json(j, path), nullptr};
  throw SchemaError(path + ": file matches neither the Lie nor the group schema");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw SchemaError(path + ": " + err.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string data_dir() {
  if (const char* env = std::getenv("ENGEL_DATA_DIR")) return env;
#ifdef ENGEL_DATA_DIR
  return ENGEL_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace engel::cat
