#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "engel/fields.hpp"
#include "engel/report.hpp"
#include "engel/words.hpp"

namespace engel::grp {

using fields::FieldPtr;

// Canonical encoding of one group element under a representation.
using Key = std::vector<std::uint32_t>;
struct KeyHash {
  std::size_t operator()(const Key& k) const;
};

// Default cap on enumerated group order (config-overridable).
constexpr std::uint64_t kOrderCap = 100'000;
constexpr std::uint64_t kOrderCapMax = 1'000'000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Multiplication/inversion on canonical keys. Implementations canonicalize
// their outputs (e.g. projective matrix scaling).
class GroupRep {
 public:
  virtual ~GroupRep() = default;
  virtual Key id() const = 0;
  virtual Key mul(const Key& a, const Key& b) const = 0;
  virtual Key inv(const Key& a) const = 0;
  virtual std::string describe(const Key& a) const = 0;
  virtual std::string kind() const = 0;
};
using RepPtr = std::shared_ptr<const GroupRep>;

// Permutations of {0..n-1} as image lists; points act on the right, so
// composition reads left to right: (ab)(i) = b(a(i)).
class PermRep final : public GroupRep {
 public:
  explicit PermRep(std::size_t n) : n_(n) {}
  std::size_t degree() const { return n_; }
  Key id() const override;
  Key mul(const Key& a, const Key& b) const override;
  Key inv(const Key& a) const override;
  std::string describe(const Key& a) const override;
  std::string kind() const override { return "permutation"; }

 private:
  std::size_t n_;
};

// k x k invertible matrices over a finite field, entries as field codes in
// row-major order. With modulo_center, representatives are canonicalized by
// scaling so the first nonzero entry (row-major scan) is 1; for subgroups of
// SL this quotients exactly by the center.
class MatRep final : public GroupRep {
 public:
  MatRep(FieldPtr F, std::size_t k, bool modulo_center);
  const FieldPtr& field() const { return F_; }
  std::size_t degree() const { return k_; }
  bool modulo_center() const { return mod_center_; }
  Key canon(Key m) const;
  Key id() const override;
  Key mul(const Key& a, const Key& b) const override;
  Key inv(const Key& a) const override;  // Gauss-Jordan over the field codes
  std::string describe(const Key& a) const override;
  std::string kind() const override { return "matrix"; }

 private:
  FieldPtr F_;
  std::size_t k_;
  bool mod_center_;
};

// Direct product of two enumerated groups; keys are index pairs.
class ProdRep final : public GroupRep {
 public:
  ProdRep(GroupPtr a, GroupPtr b);
  const GroupPtr& left() const { return a_; }
  const GroupPtr& right() const { return b_; }
  Key id() const override;
  Key mul(const Key& a, const Key& b) const override;
  Key inv(const Key& a) const override;
  std::string describe(const Key& a) const override;
  std::string kind() const override { return "product"; }

 private:
  GroupPtr a_, b_;
};

// Semidirect product N x| H: keys are (index in N, index in H) and
// (n1,h1)(n2,h2) = (n1 * act[h1](n2), h1 h2).
class SemidirectRep final : public GroupRep {
 public:
  // act[h] is a permutation of N's element indices, one per element of H;
  // each must be a verified automorphism of N.
  SemidirectRep(GroupPtr n, GroupPtr h, std::vector<std::vector<std::uint32_t>> act);
  const GroupPtr& normal_factor() const { return n_; }
  const GroupPtr& acting_factor() const { return h_; }
  Key id() const override;
  Key mul(const Key& a, const Key& b) const override;
  Key inv(const Key& a) const override;
  std::string describe(const Key& a) const override;
  std::string kind() const override { return "semidirect"; }

 private:
  GroupPtr n_, h_;
  std::vector<std::vector<std::uint32_t>> act_;
};

// Explicit multiplication table on {0..m-1} (quotient groups).
class TableRep final : public GroupRep {
 public:
  explicit TableRep(std::vector<std::vector<std::uint32_t>> table);
  Key id() const override;
  Key mul(const Key& a, const Key& b) const override;
  Key inv(const Key& a) const override;
  std::string describe(const Key& a) const override;
  std::string kind() const override { return "table"; }

 private:
  std::vector<std::vector<std::uint32_t>> t_;
  std::vector<std::uint32_t> inv_;
};

// Fully enumerated finite group. Elements are indexed in breadth-first
// discovery order from the generators; index 0 is the identity. Immutable
// after construction; safe to share across threads.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  static GroupPtr generate(RepPtr rep, std::vector<Key> generators,
                           std::uint64_t cap = kOrderCap);

  std::uint64_t order() const { return elems_.size(); }
  const RepPtr& rep() const { return rep_; }
  const Key& key(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t identity() const { return 0; }
  const std::vector<std::uint32_t>& generators() const { return gens_; }

  std::uint32_t index_of(const Key& k) const;  // throws ValidationError if absent
  std::optional<std::uint32_t> find(const Key& k) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_.empty() ? mul_slow(a, b) : table_[a * elems_.size() + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t power(std::uint32_t a, long e) const;
  std::uint32_t conj(std::uint32_t a, std::uint32_t by) const;  // by^-1 a by
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const;
  unsigned element_order(std::uint32_t a) const;
  std::string describe(std::uint32_t i) const { return rep_->describe(elems_[i]); }

  // Conjugacy data (computed once, cached). Classes are listed by ascending
  // representative index; the representative is the least index in the class.
  const std::vector<std::uint32_t>& class_of() const;    // element -> class ordinal
  const std::vector<std::uint32_t>& class_reps() const;  // ordinal -> least index
  std::vector<std::uint64_t> class_size_multiset() const;  // sorted sizes

 private:
  FiniteGroup() = default;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  void build_classes() const;

  RepPtr rep_;
  std::vector<Key> elems_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint32_t> table_;  // dense when the order is small

  mutable std::once_flag class_once_;
  mutable std::vector<std::uint32_t> class_of_, class_reps_;
};

// Subgroup as a sorted index set plus membership bitmap over the parent.
struct Subgroup {
  std::vector<std::uint32_t> elems;
  std::vector<std::uint8_t> in;
  std::vector<std::uint32_t> gens;
  std::uint64_t order() const { return elems.size(); }
  bool contains(std::uint32_t i) const { return in[i] != 0; }
  bool trivial() const { return elems.size() == 1; }
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);
Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<std::uint32_t>& seeds);
Subgroup normal_closure(const FiniteGroup& G, const std::vector<std::uint32_t>& seeds);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H);
std::vector<Subgroup> derived_series(const FiniteGroup& G, const Subgroup& H);
std::vector<Subgroup> lower_central_series(const FiniteGroup& G, const Subgroup& H);
bool is_solvable(const FiniteGroup& G, const Subgroup& H);
bool is_nilpotent(const FiniteGroup& G, const Subgroup& H);
Subgroup center(const FiniteGroup& G);

// Largest normal solvable (resp. nilpotent) subgroup, via normal closures of
// conjugacy-class representatives; self-checked, including triviality of the
// quotient's own radical.
Subgroup solvable_radical(const FiniteGroup& G, bool self_check = true);
Subgroup fitting_subgroup(const FiniteGroup& G, bool self_check = true);

// Quotient by a normal subgroup, as a table-represented group. coset_of, if
// given, receives the coset ordinal of each parent element.
GroupPtr quotient(const FiniteGroup& G, const Subgroup& N,
                  std::vector<std::uint32_t>* coset_of = nullptr);
// A subgroup re-enumerated as a group in its own right (table-represented).
// to_sub, if given, receives the new index of each subgroup element.
GroupPtr subgroup_as_group(const FiniteGroup& G, const Subgroup& H,
                           std::vector<std::uint32_t>* to_sub = nullptr);

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& G);

struct CrComponent {
  std::vector<std::size_t> minimal_indices;  // into the minimal-normal list
  std::uint64_t simple_order = 0;
  std::vector<std::uint64_t> simple_class_sizes;
};
struct CrResult {
  Subgroup V;
  std::vector<Subgroup> minimals;
  std::vector<CrComponent> components;
};
// CR-radical of a group with trivial solvable radical (checked).
CrResult cr_radical(const FiniteGroup& G);

// Automorphism as a full permutation of element indices; verified as a
// bijective homomorphism on the whole table at construction.
struct Automorphism {
  std::vector<std::uint32_t> img;
  unsigned order = 1;
};
Automorphism make_automorphism(const FiniteGroup& G, std::vector<std::uint32_t> img);
Automorphism identity_automorphism(const FiniteGroup& G);
// Conjugation x -> t x t^-1 by an external permutation t (G must be a
// permutation group normalized by t).
Automorphism perm_conjugation(const FiniteGroup& G, const Key& t);
// (a, b) -> (b, a) on a product of two equal factors.
Automorphism swap_automorphism(const FiniteGroup& G);

// G x| <sigma> with the cyclic group acting by powers of sigma.
GroupPtr semidirect_cyclic(const GroupPtr& G, const Automorphism& sigma);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr cyclic_group(unsigned n);

// Word evaluation under an assignment of symbols to element indices.
std::uint32_t evaluate(const FiniteGroup& G, const words::GroupWord& w,
                       const std::map<words::Symbol, std::uint32_t>& assignment);

// One sequence step as a concrete group computation (mirrors the free-word
// recursion; the step depends only on the running value and x, y).
std::uint32_t seq_seed(const FiniteGroup& G, const words::SequenceSpec& seq, std::uint32_t x,
                       std::uint32_t y);
std::uint32_t seq_step(const FiniteGroup& G, const words::SequenceSpec& seq, std::uint32_t cur,
                       std::uint32_t x, std::uint32_t y);

struct GroupEngelOptions {
  bool parallel = true;
  bool class_reps = true;  // identity checks: x over class representatives
};

struct EngelElementResult {
  bool engel = false;
  unsigned max_n = 0;                       // largest per-pair vanishing index
  std::optional<std::uint32_t> witness_x;   // least x whose orbit never dies
};
// Per-pair orbit/cycle decision: the step map is a deterministic self-map of
// G, so the orbit from u_1 either reaches 1 or enters a cycle avoiding it.
EngelElementResult is_engel_element(const FiniteGroup& G, const words::SequenceSpec& seq,
                                    std::uint32_t y, const GroupEngelOptions& opts = {});

struct EngelSetResult {
  std::vector<std::uint8_t> member;  // per element index
  std::uint64_t count = 0;
  rpt::Report report;
};
EngelSetResult engel_like_set(const FiniteGroup& G, const words::SequenceSpec& seq,
                              const GroupEngelOptions& opts = {});

// Is u_n(x,y) = 1 an identity? Checks every m <= n and reports the least m
// for which the identity holds (details.holds_at); witness pair on failure
// at the requested n.
rpt::Report identity_holds(const FiniteGroup& G, const words::SequenceSpec& seq, int n,
                           const GroupEngelOptions& opts = {});

// Def 4.3 check inside G x| <sigma>; requires an autocorrect sequence and
// asserts that every evaluation step stays in the G-factor.
rpt::Report engel_automorphism_test(const FiniteGroup& G, const Automorphism& sigma,
                                    const words::SequenceSpec& seq,
                                    const GroupEngelOptions& opts = {});

// Cycle-notation parsing/printing for permutations on {1..degree}.
Key parse_perm(std::size_t degree, const std::string& text);
std::string format_perm(const Key& p);

}  // namespace engel::grp
