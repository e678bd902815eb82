#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "engel/catalog.hpp"
#include "engel/errors.hpp"
#include "engel/fingroup.hpp"

using namespace engel;
using namespace engel::grp;

namespace {

GroupPtr sym(unsigned n) { return cat::builtin_group("sym:" + std::to_string(n)); }
GroupPtr alt(unsigned n) { return cat::builtin_group("alt:" + std::to_string(n)); }

}  // namespace

TEST_CASE("generation from permutation generators") {
  auto rep = std::make_shared<PermRep>(4);
  auto S4 = FiniteGroup::generate(rep, {parse_perm(4, "(1 2)"), parse_perm(4, "(1 2 3 4)")});
  REQUIRE(S4->order() == 24);
  REQUIRE(S4->identity() == 0);
  REQUIRE(S4->key(0) == rep->id());

  auto T = FiniteGroup::generate(std::make_shared<PermRep>(3), {});
  REQUIRE(T->order() == 1);

  REQUIRE(sym(4)->order() == 24);
  REQUIRE(alt(5)->order() == 60);
  REQUIRE(cat::builtin_group("quaternion8")->order() == 8);
  REQUIRE(cat::builtin_group("dihedral:6")->order() == 12);
}

TEST_CASE("group axioms hold on sampled triples") {
  std::mt19937_64 rng(31337);
  for (const char* name : {"sym:4", "quaternion8", "sl2:3", "psl2:7", "a5-conj12"}) {
    auto G = cat::builtin_group(name);
    auto m = std::uint32_t(G->order());
    for (int trial = 0; trial < 2000; ++trial) {
      auto a = std::uint32_t(rng() % m), b = std::uint32_t(rng() % m),
           c = std::uint32_t(rng() % m);
      REQUIRE(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
      REQUIRE(G->mul(a, G->inv(a)) == G->identity());
      REQUIRE(G->mul(G->identity(), a) == a);
    }
  }
}

TEST_CASE("power, conjugation, commutator semantics") {
  auto G = sym(4);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = std::uint32_t(rng() % G->order()), b = std::uint32_t(rng() % G->order());
    REQUIRE(G->conj(a, b) == G->mul(G->mul(G->inv(b), a), b));
    REQUIRE(G->commutator(a, b) ==
            G->mul(G->mul(a, b), G->mul(G->inv(a), G->inv(b))));  // a b a^-1 b^-1
    REQUIRE(G->power(a, 3) == G->mul(a, G->mul(a, a)));
    REQUIRE(G->power(a, -1) == G->inv(a));
    REQUIRE(G->power(a, 0) == G->identity());
  }
  REQUIRE(G->element_order(G->index_of(parse_perm(4, "(1 2 3 4)"))) == 4);
  REQUIRE(G->element_order(G->identity()) == 1);
}

TEST_CASE("cycle notation round-trips") {
  Key p = parse_perm(5, "(1 2)(3 4 5)");
  REQUIRE(p == Key({1, 0, 3, 4, 2}));
  REQUIRE(parse_perm(5, format_perm(p)) == p);
  REQUIRE(parse_perm(4, "()") == Key({0, 1, 2, 3}));
  REQUIRE_THROWS_AS((void)parse_perm(3, "(1 2 7)"), ValueOutOfField);  // point 7 > degree
  REQUIRE_THROWS_AS((void)parse_perm(3, "(1 1)"), SyntaxError);
}

TEST_CASE("normal closures") {
  auto S4 = sym(4);
  auto V = normal_closure(*S4, {S4->index_of(parse_perm(4, "(1 2)(3 4)"))});
  REQUIRE(V.order() == 4);
  REQUIRE(is_normal(*S4, V));

  auto A5 = alt(5);
  auto W = normal_closure(*A5, {A5->index_of(parse_perm(5, "(1 2 3)"))});
  REQUIRE(W.order() == 60);  // simple

  REQUIRE(normal_closure(*S4, {}).order() == 1);
  // the subgroup closure of a transposition is not normal in S4
  auto H = subgroup_closure(*S4, {S4->index_of(parse_perm(4, "(1 2)"))});
  REQUIRE(H.order() == 2);
  REQUIRE_FALSE(is_normal(*S4, H));
}

TEST_CASE("derived and lower central series") {
  auto S4 = sym(4);
  auto ds = derived_series(*S4, full_subgroup(*S4));
  REQUIRE(ds.size() == 4);  // S4 > A4 > V4 > 1
  REQUIRE(ds[1].order() == 12);
  REQUIRE(ds[2].order() == 4);
  REQUIRE(ds[3].order() == 1);
  REQUIRE(is_solvable(*S4, full_subgroup(*S4)));
  REQUIRE_FALSE(is_nilpotent(*S4, full_subgroup(*S4)));

  auto A5 = alt(5);
  REQUIRE_FALSE(is_solvable(*A5, full_subgroup(*A5)));
  REQUIRE(derived_subgroup(*A5, full_subgroup(*A5)).order() == 60);

  auto Q8 = cat::builtin_group("quaternion8");
  REQUIRE(is_nilpotent(*Q8, full_subgroup(*Q8)));
  auto lcs = lower_central_series(*Q8, full_subgroup(*Q8));
  REQUIRE(lcs.back().order() == 1);

  REQUIRE(center(*Q8).order() == 2);
  REQUIRE(center(*sym(3)).order() == 1);
  REQUIRE(center(*cat::builtin_group("cyclic:6")).order() == 6);
}

TEST_CASE("solvable radical and Fitting subgroup") {
  auto S4 = sym(4);
  REQUIRE(solvable_radical(*S4).order() == 24);
  REQUIRE(fitting_subgroup(*S4).order() == 4);  // V4

  auto A5 = alt(5);
  REQUIRE(solvable_radical(*A5).trivial());
  REQUIRE(fitting_subgroup(*A5).trivial());

  auto G = cat::builtin_group("alt:5*sym:4");
  auto R = solvable_radical(*G);
  REQUIRE(R.order() == 24);  // 1 x S4
  REQUIRE(fitting_subgroup(*G).order() == 4);
  REQUIRE(is_normal(*G, R));
}

TEST_CASE("quotients and subgroup re-enumeration") {
  auto S4 = sym(4);
  auto V = fitting_subgroup(*S4);
  std::vector<std::uint32_t> coset_of;
  auto Q = quotient(*S4, V, &coset_of);
  REQUIRE(Q->order() == 6);
  REQUIRE(Q->class_size_multiset() == std::vector<std::uint64_t>({1, 2, 3}));  // = S3
  REQUIRE(coset_of.size() == 24);
  // the projection is a homomorphism
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = std::uint32_t(rng() % 24), b = std::uint32_t(rng() % 24);
    REQUIRE(coset_of[S4->mul(a, b)] == Q->mul(coset_of[a], coset_of[b]));
  }

  auto H = subgroup_as_group(*S4, V);
  REQUIRE(H->order() == 4);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) REQUIRE(H->mul(a, b) == H->mul(b, a));
}

TEST_CASE("minimal normal subgroups") {
  auto S4 = sym(4);
  auto mins = minimal_normal_subgroups(*S4);
  REQUIRE(mins.size() == 1);
  REQUIRE(mins[0].order() == 4);

  auto G = cat::builtin_group("sym:3*sym:3");
  auto m2 = minimal_normal_subgroups(*G);
  REQUIRE(m2.size() == 2);
  REQUIRE(m2[0].order() == 3);
  REQUIRE(m2[1].order() == 3);
}

TEST_CASE("CR-radical") {
  auto A5 = alt(5);
  auto r = cr_radical(*A5);
  REQUIRE(r.V.order() == 60);
  REQUIRE(r.components.size() == 1);
  REQUIRE(r.components[0].simple_order == 60);

  auto G = cat::builtin_group("alt:5*psl2:7");
  auto r2 = cr_radical(*G);
  REQUIRE(r2.V.order() == 60 * 168);
  REQUIRE(r2.components.size() == 2);
  std::vector<std::uint64_t> orders = {r2.components[0].simple_order,
                                       r2.components[1].simple_order};
  std::sort(orders.begin(), orders.end());
  REQUIRE(orders == std::vector<std::uint64_t>({60, 168}));

  // swapped pair of A5 factors: one component made of one minimal normal
  auto W = cat::builtin_group("a5xa5-swap");
  auto r3 = cr_radical(*W);
  REQUIRE(r3.V.order() == 3600);
  REQUIRE(r3.components.size() == 1);
  REQUIRE(r3.components[0].simple_order == 60);

  REQUIRE_THROWS_AS((void)cr_radical(*sym(4)), NotSemisimple);
}

TEST_CASE("automorphisms are verified") {
  auto A5 = alt(5);
  auto sigma = perm_conjugation(*A5, parse_perm(5, "(1 2)"));
  REQUIRE(sigma.order == 2);
  REQUIRE(identity_automorphism(*A5).order == 1);

  auto GG = cat::builtin_group("sym:3*sym:3");
  REQUIRE(swap_automorphism(*GG).order == 2);
  REQUIRE_THROWS_AS((void)swap_automorphism(*cat::builtin_group("alt:4*sym:3")), BadParams);

  // a bijection that is not a homomorphism is rejected
  std::vector<std::uint32_t> img(A5->order());
  for (std::uint32_t i = 0; i < img.size(); ++i) img[i] = i;
  std::swap(img[1], img[2]);
  bool hom = true;
  try {
    (void)make_automorphism(*A5, img);
  } catch (const NotAnAutomorphism&) {
    hom = false;
  }
  REQUIRE_FALSE(hom);

  REQUIRE_THROWS_AS((void)perm_conjugation(*A5, parse_perm(6, "(5 6)")),
                    NotAnAutomorphism);
}

TEST_CASE("semidirect products") {
  auto A5 = alt(5);
  auto ext = semidirect_cyclic(A5, perm_conjugation(*A5, parse_perm(5, "(1 2)")));
  REQUIRE(ext->order() == 120);
  REQUIRE(ext->class_size_multiset() == sym(5)->class_size_multiset());

  auto same = semidirect_cyclic(A5, identity_automorphism(*A5));
  REQUIRE(same->order() == 60);
  REQUIRE(same->class_size_multiset() == A5->class_size_multiset());
}

TEST_CASE("word evaluation and sequence steps") {
  auto S4 = sym(4);
  auto a = S4->index_of(parse_perm(4, "(1 2)"));
  auto b = S4->index_of(parse_perm(4, "(1 3)"));
  using words::Symbol;
  auto e1 = words::commutator(words::word_x(), words::word_y());
  REQUIRE(evaluate(*S4, e1, {{Symbol::x, a}, {Symbol::y, S4->identity()}}) == S4->identity());
  REQUIRE(S4->element_order(evaluate(*S4, e1, {{Symbol::x, a}, {Symbol::y, b}})) == 3);

  auto seq = words::sequence(words::SeqId::s_bww);
  REQUIRE(seq_seed(*S4, seq, a, b) == a);  // s_1 = x
  // one concrete step agrees with evaluating the free word
  std::uint32_t s2 = seq_step(*S4, seq, a, a, b);
  auto w2 = words::generate_group(seq, 2);
  REQUIRE(s2 == evaluate(*S4, w2, {{Symbol::x, a}, {Symbol::y, b}}));

  auto eseq = words::sequence(words::SeqId::e_group);
  std::uint32_t cur = seq_seed(*S4, eseq, a, b);
  for (int n = 2; n <= 5; ++n) {
    cur = seq_step(*S4, eseq, cur, a, b);
    REQUIRE(cur ==
            evaluate(*S4, words::generate_group(eseq, n), {{Symbol::x, a}, {Symbol::y, b}}));
  }
}

TEST_CASE("order cap is enforced") {
  REQUIRE_THROWS_AS((void)cat::builtin_group("sym:8", 1000), OrderExceedsCap);
}

TEST_CASE("matrix models") {
  REQUIRE(cat::builtin_group("sl2:3")->order() == 24);
  REQUIRE(cat::builtin_group("psl2:7")->order() == 168);
  // PSL(2,4) = PSL(2,5) = A5
  REQUIRE(cat::builtin_group("psl2:4")->class_size_multiset() == alt(5)->class_size_multiset());
  REQUIRE(cat::builtin_group("psl2:5")->class_size_multiset() == alt(5)->class_size_multiset());
}
