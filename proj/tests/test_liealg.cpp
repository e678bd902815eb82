#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "engel/catalog.hpp"
#include "engel/errors.hpp"
#include "engel/liealg.hpp"

using namespace engel;
using fields::FieldSpec;
using fields::Scalar;
using lie::LieAlgebra;
using lie::Vec;

namespace {

std::vector<Scalar> zero_tensor(const fields::FieldPtr& F, std::size_t d) {
  return std::vector<Scalar>(d * d * d, F->zero());
}

void set_c(std::vector<Scalar>& t, std::size_t d, std::size_t i, std::size_t j, std::size_t k,
           const Scalar& v, const fields::FieldPtr& F) {
  t[(i * d + j) * d + k] = v;
  t[(j * d + i) * d + k] = F->neg(v);
}

}  // namespace

TEST_CASE("construction validates antisymmetry and Jacobi") {
  auto F = fields::make_field(FieldSpec::Q());
  {
    auto t = zero_tensor(F, 2);
    t[(0 * 2 + 1) * 2 + 0] = F->one();
    t[(1 * 2 + 0) * 2 + 0] = F->one();  // should be -1
    REQUIRE_THROWS_AS((void)LieAlgebra::make(F, 2, t), AntisymmetryViolation);
  }
  {
    // antisymmetric but [[e0,e1],e2] + cyclic = -e2 != 0
    auto t = zero_tensor(F, 3);
    set_c(t, 3, 0, 1, 2, F->one(), F);
    set_c(t, 3, 0, 2, 0, F->one(), F);
    try {
      (void)LieAlgebra::make(F, 3, t);
      REQUIRE(false);
    } catch (const JacobiViolation& e) {
      REQUIRE(std::string(e.what()).find("b1") != std::string::npos);  // triple named
    }
  }
  REQUIRE(cat::builtin_lie("sl2")->dim() == 3);
  REQUIRE(cat::builtin_lie("jacobson:5")->dim() == 7);
  REQUIRE(cat::builtin_lie("witt:7")->dim() == 7);
}

TEST_CASE("bracket pinned values") {
  auto sl2 = cat::builtin_lie("sl2");
  // basis order e+, e-, h
  REQUIRE(sl2->bracket(sl2->basis_vec(0), sl2->basis_vec(1)) == sl2->basis_vec(2));
  REQUIRE(sl2->format_vec(sl2->bracket(sl2->parse_vec("2,1,-3"), sl2->parse_vec("2,1,-3"))) ==
          "0,0,0");

  auto J = cat::builtin_lie("jacobson:5");  // basis e, f, e_1..e_5
  Vec x = J->parse_vec("0,1,1,0,0,0,0");    // f + e_1
  Vec y = J->parse_vec("1,0,0,1,0,0,0");    // e + e_2
  REQUIRE(J->format_vec(J->bracket(x, y)) == "4,0,0,0,0,0,0");  // -e over GF(5)
}

TEST_CASE("series, solvability, nilpotency") {
  auto b2 = cat::builtin_lie("b2");
  auto chain = lie::series(*b2, lie::SeriesKind::derived);
  std::vector<std::size_t> dims;
  for (const auto& s : chain) dims.push_back(s.dim());
  REQUIRE(dims.front() == 2);
  REQUIRE(dims.back() == 0);
  REQUIRE(lie::is_solvable(*b2));
  REQUIRE_FALSE(lie::is_nilpotent_algebra(*b2));

  REQUIRE_FALSE(lie::is_solvable(*cat::builtin_lie("sl2")));
  REQUIRE_FALSE(lie::is_solvable(*cat::builtin_lie("witt:7")));  // perfect
  REQUIRE(lie::is_solvable(*cat::builtin_lie("jacobson:5")));
  REQUIRE(lie::is_nilpotent_algebra(*cat::builtin_lie("heis3")));
}

TEST_CASE("solvable radical (characteristic zero)") {
  auto sl2 = cat::builtin_lie("sl2");
  REQUIRE(lie::solvable_radical(*sl2).dim() == 0);

  auto gl2 = cat::builtin_lie("gl2");
  auto R = lie::solvable_radical(*gl2);
  REQUIRE(R.dim() == 1);
  REQUIRE(R.contains(gl2->basis_vec(3)));  // the central direction

  auto b2 = cat::builtin_lie("b2");
  REQUIRE(lie::solvable_radical(*b2).dim() == 2);

  REQUIRE_THROWS_AS((void)lie::solvable_radical(*cat::builtin_lie("jacobson:5")),
                    UnsupportedCharacteristic);
}

TEST_CASE("nilradical (characteristic zero)") {
  auto b2 = cat::builtin_lie("b2");
  auto N = lie::nilradical(*b2);
  REQUIRE(N.dim() == 1);
  REQUIRE(N.contains(b2->basis_vec(1)));  // <e>: ad e nilpotent, ad h not

  REQUIRE(lie::nilradical(*cat::builtin_lie("heis3")).dim() == 3);
  REQUIRE(lie::nilradical(*cat::builtin_lie("gl2")).dim() == 1);
  REQUIRE(lie::nilradical(*cat::builtin_lie("sl3")).dim() == 0);
}

TEST_CASE("principal ideals") {
  auto sl2 = cat::builtin_lie("sl2");
  REQUIRE(lie::ideal_generated(*sl2, sl2->basis_vec(0)).dim() == 3);
  auto b2 = cat::builtin_lie("b2");
  REQUIRE(lie::ideal_generated(*b2, b2->basis_vec(1)).dim() == 1);
  REQUIRE(lie::ideal_generated(*b2, b2->zero_vec()).dim() == 0);
}

TEST_CASE("quotient by an ideal") {
  auto b2 = cat::builtin_lie("b2");
  auto Q = lie::quotient_algebra(*b2, lie::ideal_generated(*b2, b2->basis_vec(1)));
  REQUIRE(Q->dim() == 1);
  REQUIRE(lie::is_nilpotent_algebra(*Q));
}

TEST_CASE("iterate dimension bound on random pairs") {
  // if (-ad[x,y])^n x = 0 for some n <= 3d, then already at n = d
  std::mt19937_64 rng(2024);
  for (const char* name : {"sl2", "gl2", "b2", "heis3", "sl3"}) {
    auto L = cat::builtin_lie(name);
    std::size_t d = L->dim();
    auto F = L->field();
    for (int trial = 0; trial < 1000; ++trial) {
      Vec x(d, F->zero()), y(d, F->zero());
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = F->from_int(long(rng() % 7) - 3);
        y[i] = F->from_int(long(rng() % 7) - 3);
      }
      Vec t = L->bracket(x, y);
      Vec v = x;
      bool vanished = false;
      for (std::size_t n = 1; n <= 3 * d; ++n) {
        v = L->bracket(v, t);  // -[t,v] = [v,t]
        if (v == L->zero_vec()) {
          vanished = true;
          break;
        }
      }
      if (vanished) {
        Vec w = x;
        for (std::size_t n = 1; n <= d; ++n) w = L->bracket(w, t);
        REQUIRE(w == L->zero_vec());
      }
    }
  }
}

TEST_CASE("grid enumeration order and budget") {
  std::vector<std::vector<long>> pts;
  bool hit = lie::for_grid_points(2, 13, [&](const std::vector<long>& p) {
    pts.push_back(p);
    return false;
  });
  REQUIRE_FALSE(hit);
  REQUIRE(pts.size() == 13);
  std::vector<std::vector<long>> expect = {
      {0, 0},  {1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},  {1, -1},
      {-1, 1}, {-1, -1}, {2, 0},  {-2, 0}, {0, 2},  {0, -2},
  };
  REQUIRE(pts == expect);

  // no duplicates over a longer prefix, and an early-exit is honored
  pts.clear();
  (void)lie::for_grid_points(3, 500, [&](const std::vector<long>& p) {
    pts.push_back(p);
    return false;
  });
  std::set<std::vector<long>> uniq(pts.begin(), pts.end());
  REQUIRE(uniq.size() == pts.size());
  std::size_t calls = 0;
  bool found = lie::for_grid_points(3, 0, [&](const std::vector<long>& p) {
    ++calls;
    return p == std::vector<long>{0, 1, -1};
  });
  REQUIRE(found);
  REQUIRE(calls <= 30);
}

TEST_CASE("vector encode/decode bijection over finite fields") {
  auto J = cat::builtin_lie("jacobson:5");
  REQUIRE(lie::vec_space_size(*J) == 78125);  // 5^7
  for (std::uint64_t code : {0ull, 1ull, 12345ull, 78124ull}) {
    REQUIRE(lie::encode_vec(*J, lie::decode_vec(*J, code)) == code);
  }
}
