#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "engel/catalog.hpp"
#include "engel/errors.hpp"
#include "engel/fingroup.hpp"

using namespace engel;
using namespace engel::grp;
using words::SeqId;

namespace {

words::SequenceSpec seq(SeqId id) { return words::sequence(id); }

}  // namespace

TEST_CASE("e-sequence sets match the Fitting subgroup on pinned groups") {
  auto S4 = cat::builtin_group("sym:4");
  auto es = engel_like_set(*S4, seq(SeqId::e_group));
  auto F = fitting_subgroup(*S4);
  REQUIRE(es.count == 4);  // V4
  for (std::uint32_t i = 0; i < S4->order(); ++i)
    REQUIRE(bool(es.member[i]) == F.contains(i));

  auto A5 = cat::builtin_group("alt:5");
  REQUIRE(engel_like_set(*A5, seq(SeqId::e_group)).count == 1);

  // nilpotent groups: every element is Engel for every sequence
  auto Q8 = cat::builtin_group("quaternion8");
  for (SeqId id : {SeqId::e_group, SeqId::s_bww, SeqId::w_group})
    REQUIRE(engel_like_set(*Q8, seq(id)).count == 8);
}

TEST_CASE("pinned set sizes on simple and quasisimple groups") {
  auto S5 = cat::builtin_group("sym:5");
  REQUIRE(engel_like_set(*S5, seq(SeqId::s_bww)).count == 31);
  REQUIRE(engel_like_set(*S5, seq(SeqId::w_group)).count == 11);
  REQUIRE(engel_like_set(*cat::builtin_group("alt:5"), seq(SeqId::w_group)).count == 16);
  REQUIRE(engel_like_set(*cat::builtin_group("sl2:5"), seq(SeqId::w_group)).count == 32);
}

TEST_CASE("per-element orbit decisions") {
  auto S4 = cat::builtin_group("sym:4");
  auto in_v4 = S4->index_of(parse_perm(4, "(1 2)(3 4)"));
  auto transp = S4->index_of(parse_perm(4, "(1 2)"));

  auto r1 = is_engel_element(*S4, seq(SeqId::e_group), in_v4);
  REQUIRE(r1.engel);
  auto r2 = is_engel_element(*S4, seq(SeqId::e_group), transp);
  REQUIRE_FALSE(r2.engel);
  REQUIRE(r2.witness_x.has_value());

  // replay the witness orbit: it must avoid the identity for |G| steps
  auto s = seq(SeqId::e_group);
  std::uint32_t cur = seq_seed(*S4, s, *r2.witness_x, transp);
  for (std::uint64_t n = 0; n < S4->order(); ++n) {
    REQUIRE(cur != S4->identity());
    cur = seq_step(*S4, s, cur, *r2.witness_x, transp);
  }
}

TEST_CASE("once a sequence hits 1 it stays at 1") {
  std::mt19937_64 rng(271828);
  for (const char* name : {"sym:4", "dihedral:6", "sl2:3"}) {
    auto G = cat::builtin_group(name);
    for (SeqId id : {SeqId::e_group, SeqId::s_bww, SeqId::w_group, SeqId::u_bggkpp}) {
      auto sp = seq(id);
      for (int trial = 0; trial < 50; ++trial) {
        auto x = std::uint32_t(rng() % G->order());
        auto y = std::uint32_t(rng() % G->order());
        REQUIRE(seq_step(*G, sp, G->identity(), x, y) == G->identity());
      }
    }
  }
}

TEST_CASE("identity thresholds on solvable groups") {
  struct Pin {
    const char* name;
    int least;
  };
  for (Pin pin : {Pin{"sym:3", 3}, Pin{"dihedral:6", 3}, Pin{"sl2:3", 4}, Pin{"sym:4", 4}}) {
    auto G = cat::builtin_group(pin.name);
    auto rep = identity_holds(*G, seq(SeqId::s_bww), 10);
    CAPTURE(pin.name);
    REQUIRE(rep.verdict == "holds");
    REQUIRE(rep.details["least_m"] == pin.least);
  }

  auto A5 = cat::builtin_group("alt:5");
  auto rep = identity_holds(*A5, seq(SeqId::s_bww), 10);
  REQUIRE(rep.verdict == "fails");
  REQUIRE(rep.witness.contains("x"));
  REQUIRE(rep.witness.contains("y"));
  REQUIRE(rep.details["least_m"].is_null());

  auto T = FiniteGroup::generate(std::make_shared<PermRep>(1), {});
  REQUIRE(identity_holds(*T, seq(SeqId::s_bww), 1).verdict == "holds");
}

TEST_CASE("class-representative strategy agrees with the full scan") {
  for (const char* name : {"sym:4", "alt:5", "dihedral:6", "quaternion8"}) {
    auto G = cat::builtin_group(name);
    for (SeqId id : {SeqId::s_bww, SeqId::e_group}) {
      GroupEngelOptions full;
      full.class_reps = false;
      auto a = identity_holds(*G, seq(id), 6);
      auto b = identity_holds(*G, seq(id), 6, full);
      REQUIRE(a.verdict == b.verdict);
      REQUIRE(a.details["holds_at"] == b.details["holds_at"]);
    }
  }
}

TEST_CASE("solvable radical sits inside the s- and w-sets") {
  for (const char* name : {"sym:4", "sym:3*sym:3", "a5-conj12", "sl2:3"}) {
    auto G = cat::builtin_group(name);
    auto R = solvable_radical(*G);
    for (SeqId id : {SeqId::s_bww, SeqId::w_group}) {
      auto es = engel_like_set(*G, seq(id));
      for (auto i : R.elems) REQUIRE(es.member[i] == 1);
    }
  }
}

TEST_CASE("Engel elements survive quotients") {
  auto S4 = cat::builtin_group("sym:4");
  auto V = fitting_subgroup(*S4);
  std::vector<std::uint32_t> coset_of;
  auto Q = quotient(*S4, V, &coset_of);
  auto esG = engel_like_set(*S4, seq(SeqId::e_group));
  auto esQ = engel_like_set(*Q, seq(SeqId::e_group));
  for (std::uint32_t i = 0; i < S4->order(); ++i)
    if (esG.member[i]) REQUIRE(esQ.member[coset_of[i]] == 1);
}

TEST_CASE("automorphism tests in the extension") {
  auto S4 = cat::builtin_group("sym:4");
  auto idrep = engel_automorphism_test(*S4, identity_automorphism(*S4), seq(SeqId::s_bww));
  REQUIRE(idrep.verdict == "engel");

  auto A5 = cat::builtin_group("alt:5");
  auto sigma = perm_conjugation(*A5, parse_perm(5, "(1 2)"));
  auto rep = engel_automorphism_test(*A5, sigma, seq(SeqId::e_group));
  REQUIRE(rep.verdict == "not-engel");

  REQUIRE_THROWS_AS(
      (void)engel_automorphism_test(*A5, sigma, seq(SeqId::u_bggkpp)),
      SequenceNotAutocorrect);
}
