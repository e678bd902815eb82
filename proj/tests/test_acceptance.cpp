// End-to-end acceptance run: fourteen numbered checks, one line of output
// each. Exit status is the number of failed checks. Time budgets and exact
// expected values are pinned in the code next to each check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "engel/catalog.hpp"
#include "engel/errors.hpp"
#include "engel/fingroup.hpp"
#include "engel/liealg.hpp"
#include "engel/linalg.hpp"
#include "engel/verify.hpp"
#include "engel/words.hpp"

using namespace engel;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

double run_timed(const char* label, const std::function<bool()>& body) {
  auto t0 = clock_type::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double sec = std::chrono::duration<double>(clock_type::now() - t0).count();
  std::printf("%-52s %s  (%.2fs)%s%s\n", label, ok ? "PASS" : "FAIL", sec,
              err.empty() ? "" : "  error: ", err.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
  return sec;
}

}  // namespace

int main() {
  // 1. closed form on sl2 over Q: v_n(e+, e-) = (-2)^(n-1) e+ for 2 <= n <= 12
  run_timed("01 sl2 v_n closed form", [] {
    auto L = cat::builtin_lie("sl2");
    auto F = L->field();
    auto t0 = clock_type::now();
    fields::Scalar coeff = F->from_int(-2);  // (-2)^(n-1) at n = 2
    for (int n = 2; n <= 12; ++n) {
      lie::Vec expect = L->zero_vec();
      expect[0] = coeff;
      if (lie::lie_eval(*L, words::SeqId::v_lie, n, L->basis_vec(0), L->basis_vec(1)) != expect)
        return false;
      coeff = F->mul(coeff, F->from_int(-2));
    }
    double sec = std::chrono::duration<double>(clock_type::now() - t0).count();
    return sec < 0.1;  // pinned budget
  });

  // 2. closed form for w_n(e+, e-) on sl2. The recursion is
  //    t_{n+1} = -4 t_n^2 on the h-coordinate, so t_n = (-4)^(2^(n-1) - 1);
  //    the doubly-exponential exponent is what rational arithmetic is for.
  run_timed("02 sl2 w_n h-coordinate closed form", [] {
    auto L = cat::builtin_lie("sl2");
    auto F = L->field();
    fields::Scalar t = F->one();  // n = 1: w_1 = h
    for (int n = 1; n <= 8; ++n) {
      lie::Vec w = lie::lie_eval(*L, words::SeqId::w_lie, n, L->basis_vec(0), L->basis_vec(1));
      if (!F->is_zero(w[0]) || !F->is_zero(w[1]) || w[2] != t) return false;
      t = F->mul(F->from_int(-4), F->mul(t, t));
    }
    return true;
  });

  // 3. symbolic identities: v_3 = 0 on b2, v_4 = 0 on heis3, v_n != 0 on sl2
  //    for n <= 4 with (e+, e-) as the nonvanishing point
  run_timed("03 symbolic identity checks (< 5s)", [] {
    auto t0 = clock_type::now();
    auto b2 = cat::builtin_lie("b2");
    auto term3 = lie::symbolic_seq_term(*b2, words::SeqId::v_lie, 3,
                                        lie::symbolic_vector(*b2, 4, 0),
                                        lie::symbolic_vector(*b2, 4, 2));
    if (!lie::poly_vec_zero(term3)) return false;

    auto h3 = cat::builtin_lie("heis3");
    auto term4 = lie::symbolic_seq_term(*h3, words::SeqId::v_lie, 4,
                                        lie::symbolic_vector(*h3, 6, 0),
                                        lie::symbolic_vector(*h3, 6, 3));
    if (!lie::poly_vec_zero(term4)) return false;

    auto sl2 = cat::builtin_lie("sl2");
    auto F = sl2->field();
    std::vector<fields::Scalar> pt = {F->one(),  F->zero(), F->zero(),   // x = e+
                                      F->zero(), F->one(),  F->zero()};  // y = e-
    for (int n = 2; n <= 4; ++n) {
      auto term = lie::symbolic_seq_term(*sl2, words::SeqId::v_lie, n,
                                         lie::symbolic_vector(*sl2, 6, 0),
                                         lie::symbolic_vector(*sl2, 6, 3));
      bool nonzero_at_pt = false;
      for (const auto& c : term)
        if (!F->is_zero(c.eval(pt))) nonzero_at_pt = true;
      if (lie::poly_vec_zero(term) || !nonzero_at_pt) return false;
    }
    double sec = std::chrono::duration<double>(clock_type::now() - t0).count();
    return sec < 5.0;
  });

  // 4. y in solvable radical <=> v-Engel, 100 seeded y per builtin algebra
  double sec4 = 0;
  sec4 = run_timed("04 radical equivalence suite (< 60s)", [] {
    return ver::run_suite("thm-rad").ok();
  });
  if (sec4 >= 60.0) {
    std::printf("%-52s FAIL  (over budget)\n", "04 radical equivalence time budget");
    ++failures;
  }

  // 5. y in nilradical <=> strictly Engel, and <=> totally Engel
  run_timed("05 nilradical equivalence suite", [] {
    return ver::run_suite("thm-cl").ok();
  });

  // 6. characteristic 5: solvable algebra whose v_n never dies on (f+e1, e+e2)
  run_timed("06 jacobson:5 counterexample", [] {
    auto J = cat::builtin_lie("jacobson:5");
    if (!lie::is_solvable(*J)) return false;
    auto x = J->parse_vec("0,1,1,0,0,0,0");  // f + e_1
    auto y = J->parse_vec("1,0,0,1,0,0,0");  // e + e_2
    for (int n = 1; n <= 20; ++n)
      if (lie::lie_eval(*J, words::SeqId::v_lie, n, x, y) == J->zero_vec()) return false;
    // pinned iterates: v_2 = e + e_2, v_3 = e_3
    return J->format_vec(lie::lie_eval(*J, words::SeqId::v_lie, 2, x, y)) == "1,0,0,1,0,0,0" &&
           J->format_vec(lie::lie_eval(*J, words::SeqId::v_lie, 3, x, y)) == "0,0,0,0,1,0,0";
  });

  // 7. characteristic 7: perfect algebra with a nonzero w-Engel element,
  //    verified by scanning every one of the 7^7 = 823543 vectors x
  run_timed("07 witt:7 w-Engel full scan (< 120s)", [] {
    auto t0 = clock_type::now();
    auto W = cat::builtin_lie("witt:7");
    if (lie::series(*W, lie::SeriesKind::derived).size() != 1) return false;  // perfect
    auto r = lie::engel_test(*W, W->basis_vec(6), lie::EngelKind::w);
    double sec = std::chrono::duration<double>(clock_type::now() - t0).count();
    return r.outcome == lie::EngelVerdict::Outcome::engel && r.n == 2 &&
           r.iterations >= 823543 && sec < 120.0;
  });

  // 8. e-sequence set = Fitting subgroup on every builtin group of order <= 1000
  double sec8 = run_timed("08 Engel set = Fitting subgroup suite", [] {
    auto rep = ver::run_suite("baer");
    return rep.ok() && rep.details["items"].size() >= 15;
  });
  if (sec8 >= 60.0) {
    std::printf("%-52s FAIL  (over budget)\n", "08 Fitting suite time budget");
    ++failures;
  }

  // 9. s_n = 1 is no identity (n <= 10) on the five minimal simple groups,
  //    with order self-checks 5616 and 29120 inside the suite
  run_timed("09 minimal simple groups suite (< 600s)", [] {
    auto t0 = clock_type::now();
    auto G = cat::builtin_group("psl3:3");
    auto r = grp::identity_holds(*G, words::sequence(words::SeqId::s_bww), 10);
    double psl33 = std::chrono::duration<double>(clock_type::now() - t0).count();
    if (r.verdict != "fails" || psl33 >= 60.0) return false;
    auto rep = ver::run_suite("minimal-simple");
    double sec = std::chrono::duration<double>(clock_type::now() - t0).count();
    return rep.ok() && sec < 600.0;
  });

  // 10. solvable detection: least n with s_n = 1 as an identity, against
  //     values frozen from an independent brute-force enumeration
  run_timed("10 least identity index on solvable groups", [] {
    const std::pair<const char*, int> pins[] = {
        {"sym:3", 3}, {"dihedral:6", 3}, {"sl2:3", 4}, {"sym:4", 4}};
    for (auto [name, expected] : pins) {
      auto G = cat::builtin_group(name);
      auto r = grp::identity_holds(*G, words::sequence(words::SeqId::s_bww), 10);
      if (r.verdict != "holds" || r.details["least_m"] != expected) return false;
    }
    auto A5 = cat::builtin_group("alt:5");
    auto r = grp::identity_holds(*A5, words::sequence(words::SeqId::s_bww), 10);
    return r.verdict == "fails" && r.details["least_m"].is_null();
  });

  // 11. proved direction: R(G) inside the s- and w-sets on every builtin group
  //     of order <= 1000; the converse is checked too but only reported with
  //     an experimental flag (it genuinely fails, e.g. on sym:5)
  run_timed("11 radical containment + experimental equality", [] {
    auto rep = ver::run_suite("conjecture-radical");
    bool contained_everywhere = rep.verdict == "experimental-pass" ||
                                rep.verdict == "experimental-fail";
    return contained_everywhere && rep.details.contains("equality-everywhere") &&
           rep.details["equality-everywhere"].is_boolean();
  });

  // 12. automorphism checks in the semidirect extension: conjugation by (1 2)
  //     on alt:5 and the factor swap on alt:5 x alt:5 are both non-Engel with
  //     witnesses; every evaluation step stays inside the normal factor
  run_timed("12 non-Engel automorphisms", [] {
    auto rep = ver::run_suite("conjecture-aut");
    if (rep.verdict != "experimental-pass") return false;
    bool swap_witness = false;
    for (const auto& item : rep.details["items"])
      if (item.value("model", "") == "alt:5*alt:5" && !item["witness"].is_null())
        swap_witness = true;
    return swap_witness;
  });

  // 13. sequence hygiene: substitution-based correctness with thresholds in
  //     {1, 2}, and autocorrectness (y-exponent sum + conjugate rewrite)
  run_timed("13 sequence correctness and autocorrectness", [] {
    using words::SeqId;
    struct Pin {
      SeqId id;
      int n_max;  // word length grows fast for u (x4/step) and w (x8/step)
      int n0x, n0y;
    };
    const Pin pins[] = {{SeqId::e_group, 10, 1, 1},
                        {SeqId::s_bww, 10, 1, 2},
                        {SeqId::u_bggkpp, 8, 2, 2},
                        {SeqId::w_group, 6, 1, 1}};
    for (const auto& p : pins) {
      auto r = words::check_correct(words::sequence(p.id), p.n_max);
      if (r.verdict != "pass" || r.details["n0_x_to_1"] != p.n0x ||
          r.details["n0_y_to_1"] != p.n0y)
        return false;
    }
    for (SeqId id : {SeqId::e_group, SeqId::s_bww, SeqId::w_group})
      if (words::check_autocorrect(words::sequence(id), 10).verdict != "pass") return false;
    auto ru = words::check_autocorrect(words::sequence(SeqId::u_bggkpp), 10);
    return ru.verdict == "fail" && ru.witness["n"] == 1;
  });

  // 14. determinism: the structured reports for checks 4, 7 and 9 are
  //     byte-identical with 1 and with 8 worker threads (timing zeroed)
  run_timed("14 thread-count determinism", [] {
    auto snapshot = [] {
      std::string s;
      for (const char* suite : {"thm-rad", "charp-counterexamples", "minimal-simple"})
        s += ver::run_suite(suite).to_json(false).dump() + "\n";
      return s;
    };
#ifdef _OPENMP
    omp_set_num_threads(1);
    std::string one = snapshot();
    omp_set_num_threads(8);
    std::string eight = snapshot();
#else
    std::string one = snapshot();
    std::string eight = snapshot();
#endif
    return one == eight;
  });

  std::printf("acceptance: %d of 14 checks failed\n", failures);
  return failures;
}
