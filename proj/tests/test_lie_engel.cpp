#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "engel/catalog.hpp"
#include "engel/errors.hpp"
#include "engel/liealg.hpp"

using namespace engel;
using lie::EngelKind;
using lie::EngelVerdict;
using lie::Vec;
using Outcome = lie::EngelVerdict::Outcome;

TEST_CASE("e-kind: ad-nilpotency") {
  auto sl2 = cat::builtin_lie("sl2");
  REQUIRE(lie::engel_test(*sl2, sl2->basis_vec(0), EngelKind::e).outcome == Outcome::engel);
  REQUIRE(lie::engel_test(*sl2, sl2->basis_vec(2), EngelKind::e).outcome == Outcome::not_engel);
  REQUIRE(lie::engel_test(*sl2, sl2->zero_vec(), EngelKind::e).outcome == Outcome::engel);
}

TEST_CASE("v-kind pinned verdicts") {
  auto sl2 = cat::builtin_lie("sl2");
  auto r = lie::engel_test(*sl2, sl2->basis_vec(1), EngelKind::v);  // y = e_-
  REQUIRE(r.outcome == Outcome::not_engel);
  REQUIRE(r.witness.has_value());
  REQUIRE(sl2->format_vec(*r.witness) == "1,0,0");  // x = e_+

  auto J = cat::builtin_lie("jacobson:5");
  Vec y = J->parse_vec("1,0,0,1,0,0,0");  // e + e_2, inside a solvable algebra
  auto rj = lie::engel_test(*J, y, EngelKind::v);
  REQUIRE(rj.outcome == Outcome::not_engel);
  REQUIRE(rj.witness.has_value());
  // witness must be genuine: v_n(x, y) stays nonzero through n = dim + 1
  REQUIRE(lie::lie_eval(*J, words::SeqId::v_lie, 8, *rj.witness, y) != J->zero_vec());

  // members of the radical are v-Engel: everything in b2 and heis3
  auto b2 = cat::builtin_lie("b2");
  REQUIRE(lie::engel_test(*b2, b2->basis_vec(0), EngelKind::v).outcome == Outcome::engel);
  REQUIRE(lie::engel_test(*b2, b2->parse_vec("3,-2"), EngelKind::v).outcome == Outcome::engel);
}

TEST_CASE("w-kind pinned verdicts") {
  auto sl2 = cat::builtin_lie("sl2");
  auto r = lie::engel_test(*sl2, sl2->basis_vec(1), EngelKind::w);
  REQUIRE(r.outcome == Outcome::not_engel);
  REQUIRE(r.witness.has_value());
  REQUIRE(sl2->format_vec(*r.witness) == "1,0,0");

  auto W = cat::builtin_lie("witt:7");
  auto rw = lie::engel_test(*W, W->basis_vec(6), EngelKind::w);  // y = e_5
  REQUIRE(rw.outcome == Outcome::engel);
  REQUIRE(rw.n == 2);  // w_2(x, y) = 0 for every x

  auto b2 = cat::builtin_lie("b2");
  REQUIRE(lie::engel_test(*b2, b2->basis_vec(0), EngelKind::w).outcome == Outcome::engel);
}

TEST_CASE("strict and total kinds") {
  auto b2 = cat::builtin_lie("b2");
  REQUIRE(lie::engel_test(*b2, b2->basis_vec(1), EngelKind::strict).outcome == Outcome::engel);
  REQUIRE(lie::engel_test(*b2, b2->basis_vec(0), EngelKind::strict).outcome ==
          Outcome::not_engel);
  REQUIRE(lie::engel_test(*b2, b2->basis_vec(1), EngelKind::total).outcome == Outcome::engel);
  REQUIRE(lie::engel_test(*b2, b2->basis_vec(0), EngelKind::total).outcome == Outcome::not_engel);

  auto h3 = cat::builtin_lie("heis3");
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(lie::engel_test(*h3, h3->basis_vec(i), EngelKind::strict).outcome == Outcome::engel);
    REQUIRE(lie::engel_test(*h3, h3->basis_vec(i), EngelKind::total).outcome == Outcome::engel);
  }
  auto sl2 = cat::builtin_lie("sl2");
  for (auto kind : {EngelKind::e, EngelKind::v, EngelKind::w, EngelKind::strict, EngelKind::total})
    REQUIRE(lie::engel_test(*sl2, sl2->zero_vec(), kind).outcome == Outcome::engel);
}

TEST_CASE("strict membership matches the nilradical on sampled elements") {
  auto gl2 = cat::builtin_lie("gl2");
  auto N = lie::nilradical(*gl2);
  // basis 3 spans the center = nilradical; basis 2 (h) is not strictly Engel
  REQUIRE(lie::engel_test(*gl2, gl2->basis_vec(3), EngelKind::strict).outcome == Outcome::engel);
  REQUIRE(lie::engel_test(*gl2, gl2->basis_vec(2), EngelKind::strict).outcome ==
          Outcome::not_engel);
  REQUIRE(N.contains(gl2->basis_vec(3)));
  REQUIRE_FALSE(N.contains(gl2->basis_vec(2)));
}

TEST_CASE("identity checks") {
  auto b2 = cat::builtin_lie("b2");
  REQUIRE(lie::identity_check(*b2, words::SeqId::v_lie, 3).verdict == "holds");

  auto h3 = cat::builtin_lie("heis3");
  REQUIRE(lie::identity_check(*h3, words::SeqId::v_lie, 4).verdict == "holds");

  auto sl2 = cat::builtin_lie("sl2");
  for (int n = 2; n <= 4; ++n) {
    auto rep = lie::identity_check(*sl2, words::SeqId::v_lie, n);
    REQUIRE(rep.verdict == "fails");
    REQUIRE(rep.witness["x"] == "1,0,0");
    REQUIRE(rep.witness["y"] == "0,1,0");
  }

  auto J = cat::builtin_lie("jacobson:5");
  REQUIRE(lie::identity_check(*J, words::SeqId::v_lie, 20).verdict == "fails");
}

TEST_CASE("engel sets over finite fields") {
  auto W5 = cat::builtin_lie("witt:5");
  auto sw = lie::engel_set(*W5, EngelKind::w);
  REQUIRE(sw.count > 1);  // simple algebra with nonzero w-Engel elements
  REQUIRE(sw.member[lie::encode_vec(*W5, W5->basis_vec(4))] == 1);  // e_3 = e_{p-2}

  auto J3 = cat::builtin_lie("jacobson:3");
  auto sv = lie::engel_set(*J3, EngelKind::v);
  REQUIRE(sv.count > 1);
  REQUIRE(sv.count < lie::vec_space_size(*J3));  // solvable, yet not all v-Engel
  REQUIRE(sv.member[lie::encode_vec(*J3, J3->parse_vec("1,0,0,1,0"))] == 0);

  auto F5 = fields::make_field(fields::FieldSpec::GF(5));
  auto A1 = lie::LieAlgebra::make(F5, 1, {F5->zero()});
  for (auto kind : {EngelKind::e, EngelKind::v, EngelKind::w, EngelKind::strict, EngelKind::total})
    REQUIRE(lie::engel_set(*A1, kind).count == 5);
}

TEST_CASE("enumeration cap is enforced") {
  auto W7 = cat::builtin_lie("witt:7");
  lie::EngelOptions eo;
  eo.enum_cap = 1000;  // 7^7 vectors needed
  REQUIRE_THROWS_AS((void)lie::engel_set(*W7, EngelKind::w, eo), EnumerationTooLarge);
}

TEST_CASE("direct sum verdicts match component verdicts") {
  auto L = cat::builtin_lie("sl2+b2");
  REQUIRE(L->dim() == 5);
  // e_- of the sl2 component: not v-Engel there, hence not in the sum
  Vec y1 = L->parse_vec("0,1,0,0,0");
  REQUIRE(lie::engel_test(*L, y1, EngelKind::v).outcome == Outcome::not_engel);
  // e of the b2 component: v-Engel and strictly Engel in both views
  Vec y2 = L->parse_vec("0,0,0,0,1");
  REQUIRE(lie::engel_test(*L, y2, EngelKind::v).outcome == Outcome::engel);
  REQUIRE(lie::engel_test(*L, y2, EngelKind::strict).outcome == Outcome::engel);
  // radical of the sum = 0 + b2
  auto R = lie::solvable_radical(*L);
  REQUIRE(R.dim() == 2);
  REQUIRE(R.contains(y2));
  REQUIRE_FALSE(R.contains(y1));
}

TEST_CASE("r-lie three-variable sequence evaluates") {
  auto sl2 = cat::builtin_lie("sl2");
  Vec x = sl2->basis_vec(0), y = sl2->basis_vec(1), z = sl2->basis_vec(2);
  // r_1 = [z,[x,y]] = [h, h] = 0
  REQUIRE(lie::lie_eval(*sl2, words::SeqId::r_lie, 1, x, y, z) == sl2->zero_vec());
  Vec r1 = lie::lie_eval(*sl2, words::SeqId::r_lie, 1, x, y, x);  // [e+, h] = -2e+
  REQUIRE(sl2->format_vec(r1) == "-2,0,0");
}
