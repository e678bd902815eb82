#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "engel/errors.hpp"
#include "engel/words.hpp"

using namespace engel;
using namespace engel::words;

TEST_CASE("free reduction") {
  REQUIRE(reduce(parse_word("x y y^-1 x^-1")).empty());
  REQUIRE(reduce(parse_word("x^2 x^-1 y")) == parse_word("x y"));
  // e_1 with y := 1: x * 1 * x^-1 * 1
  GroupWord e1 = commutator(word_x(), word_y());
  REQUIRE(substitute(e1, {{Symbol::x, word_x()}, {Symbol::y, {}}}).empty());
}

TEST_CASE("substitution is a reduced homomorphic image") {
  // u_1(a, 1) = a^-1, showing u_1 is not trivial under y -> 1
  GroupWord u1 = parse_word("x^-2 y^-1 x");
  REQUIRE(substitute(u1, {{Symbol::x, word_x()}, {Symbol::y, {}}}) == parse_word("x^-1"));
  // substituting (xy, yx) into x y^-1 reduces to [x,y]
  GroupWord xyinv = parse_word("x y^-1");
  GroupWord u2 =
      substitute(xyinv, {{Symbol::x, parse_word("x y")}, {Symbol::y, parse_word("y x")}});
  REQUIRE(u2 == commutator(word_x(), word_y()));
}

TEST_CASE("sequence seeds") {
  REQUIRE(generate_group(sequence(SeqId::s_bww), 1) == word_x());
  REQUIRE(generate_group(sequence(SeqId::u_bggkpp), 1) == parse_word("x^-2 y^-1 x"));
  REQUIRE(generate_group(sequence(SeqId::e_group), 1) == commutator(word_x(), word_y()));
  REQUIRE(format_term(generate_lie(sequence(SeqId::v_lie), 2)) == "[x,[x,y]]");
  REQUIRE(format_term(generate_lie(sequence(SeqId::v_lie), 1)) == "x");
  REQUIRE(format_term(generate_lie(sequence(SeqId::r_lie), 1)) == "[z,[x,y]]");
}

TEST_CASE("generate is prefix-stable and matches one recursion step") {
  for (SeqId id : {SeqId::e_group, SeqId::s_bww, SeqId::w_group, SeqId::u_bggkpp}) {
    auto seq = sequence(id);
    int n_max = id == SeqId::u_bggkpp ? 4 : 6;  // u words grow fast
    for (int n = 1; n < n_max; ++n) {
      GroupWord wn = generate_group(seq, n);
      REQUIRE(generate_group(seq, n + 1) == apply_step(seq, wn));
      REQUIRE(generate_group(seq, n) == wn);  // regeneration identical
    }
  }
}

TEST_CASE("exponent sums") {
  REQUIRE(exponent_sum(commutator(word_x(), word_y()), Symbol::y) == 0);
  REQUIRE(exponent_sum(parse_word("x^-2 y^-1 x"), Symbol::y) == -1);
  REQUIRE(exponent_sum(generate_group(sequence(SeqId::s_bww), 2), Symbol::y) == 0);
}

TEST_CASE("conjugation conventions") {
  GroupWord a = word_x();
  REQUIRE(conjugate(a, word_y(), ConjConvention::right) == parse_word("y^-1 x y"));
  REQUIRE(conjugate(a, word_y(), ConjConvention::left) == parse_word("y x y^-1"));
  // the two conventions give different s_2 but both reduce to commutators
  auto s2r = generate_group(sequence(SeqId::s_bww, ConjConvention::right), 2);
  auto s2l = generate_group(sequence(SeqId::s_bww, ConjConvention::left), 2);
  REQUIRE(s2r != s2l);
  REQUIRE(exponent_sum(s2l, Symbol::y) == 0);
}

TEST_CASE("correctness thresholds") {
  auto re = check_correct(sequence(SeqId::e_group), 10);
  REQUIRE(re.verdict == "pass");
  REQUIRE(re.details["n0_x_to_1"] == 1);
  REQUIRE(re.details["n0_y_to_1"] == 1);

  auto rs = check_correct(sequence(SeqId::s_bww), 10);
  REQUIRE(rs.verdict == "pass");
  REQUIRE(rs.details["n0_x_to_1"] == 1);
  REQUIRE(rs.details["n0_y_to_1"] == 2);  // s_1(a,1)=a, s_2(a,1)=[a^-1,a]=1

  auto ru = check_correct(sequence(SeqId::u_bggkpp), 6);
  REQUIRE(ru.verdict == "pass");
  REQUIRE(ru.details["n0_x_to_1"] == 2);
  REQUIRE(ru.details["n0_y_to_1"] == 2);

  // w-group words grow eightfold in length per step; n_max 6 stays under the cap
  auto rw = check_correct(sequence(SeqId::w_group), 6);
  REQUIRE(rw.verdict == "pass");
  REQUIRE(rw.details["n0_x_to_1"] == 1);
  REQUIRE(rw.details["n0_y_to_1"] == 1);
}

TEST_CASE("autocorrectness") {
  REQUIRE(check_autocorrect(sequence(SeqId::e_group), 10).verdict == "pass");
  REQUIRE(check_autocorrect(sequence(SeqId::s_bww), 10).verdict == "pass");
  REQUIRE(check_autocorrect(sequence(SeqId::w_group), 10).verdict == "pass");

  auto ru = check_autocorrect(sequence(SeqId::u_bggkpp), 3);
  REQUIRE(ru.verdict == "fail");
  REQUIRE(ru.witness["n"] == 1);  // y-exponent sum of u_1 is -1
}

TEST_CASE("autocorrect rewrite multiplies back to the word") {
  for (SeqId id : {SeqId::e_group, SeqId::s_bww, SeqId::w_group}) {
    for (int n = 1; n <= 4; ++n) {
      GroupWord w = generate_group(sequence(id), n);
      auto rw = conjugate_rewrite(w);
      REQUIRE(rw.has_value());
      REQUIRE(rewrite_to_word(*rw) == w);
    }
  }
  REQUIRE_FALSE(conjugate_rewrite(parse_word("x^-2 y^-1 x")).has_value());
}

TEST_CASE("word text grammar") {
  REQUIRE(parse_word("[x,y]") == commutator(word_x(), word_y()));
  REQUIRE(parse_word("[[x,y],z]") == commutator(commutator(word_x(), word_y()), word_z()));
  REQUIRE(format_word(parse_word("x^-2 y^-1 x")) == "x^-2 y^-1 x");
  REQUIRE(parse_word(format_word(generate_group(sequence(SeqId::s_bww), 3))) ==
          generate_group(sequence(SeqId::s_bww), 3));
  REQUIRE_THROWS_AS((void)parse_word("x^"), SyntaxError);
  REQUIRE_THROWS_AS((void)parse_word("[x,y"), SyntaxError);
  REQUIRE_THROWS_AS((void)parse_word("q"), SyntaxError);
}

TEST_CASE("word growth guard") {
  // u-bggkpp roughly cubes the word length per step; a tight cap must trip
  REQUIRE_THROWS_AS((void)generate_group(sequence(SeqId::u_bggkpp), 12, 10'000), WordTooLarge);
}
