// Benchmark: the bulk scan kernels with the OpenMP path against the serial
// reference path (opts.parallel = false). Both must produce identical
// verdicts; the serial path is the one the tests trust.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "engel/catalog.hpp"
#include "engel/fingroup.hpp"
#include "engel/liealg.hpp"

using namespace engel;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0,
              same ? "verdicts match" : "VERDICT MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    // Engel scan over all 7^7 vectors of the 7-dim simple algebra over GF(7)
    auto L = cat::builtin_lie("witt:7");
    auto y = L->basis_vec(6);  // top graded component; w_2(x, y) = 0 for all x
    lie::EngelOptions eo;
    lie::EngelVerdict rs, rp;
    eo.parallel = false;
    double ts = seconds([&] { rs = lie::engel_test(*L, y, lie::EngelKind::w, eo); });
    eo.parallel = true;
    double tp = seconds([&] { rp = lie::engel_test(*L, y, lie::EngelKind::w, eo); });
    row("witt:7 w-Engel full scan", ts, tp, rs.outcome == rp.outcome && rs.n == rp.n);
  }

  {
    // Identity scan u_n = 0 over a finite-field algebra (streamed pairs)
    auto L = cat::builtin_lie("jacobson:5");
    lie::EngelOptions eo;
    rpt::Report rs, rp;
    eo.parallel = false;
    double ts = seconds([&] { rs = lie::identity_check(*L, words::SeqId::v_lie, 6, eo); });
    eo.parallel = true;
    double tp = seconds([&] { rp = lie::identity_check(*L, words::SeqId::v_lie, 6, eo); });
    row("jacobson:5 v_6 identity scan", ts, tp, rs.verdict == rp.verdict);
  }

  {
    // Engel-like element set of a group of order 144
    auto G = cat::builtin_group("alt:4*cyclic:2*sym:3", 2000);
    grp::GroupEngelOptions go;
    grp::EngelSetResult rs, rp;
    go.parallel = false;
    double ts =
        seconds([&] { rs = grp::engel_like_set(*G, words::sequence(words::SeqId::e_group), go); });
    go.parallel = true;
    double tp =
        seconds([&] { rp = grp::engel_like_set(*G, words::sequence(words::SeqId::e_group), go); });
    row("order-144 group e-Engel set", ts, tp, rs.member == rp.member);
  }

  {
    // Identity scan s_4 = 1 over PSL(2,7), class-reps strategy
    auto G = cat::builtin_group("psl2:7");
    grp::GroupEngelOptions go;
    rpt::Report rs, rp;
    go.parallel = false;
    double ts =
        seconds([&] { rs = grp::identity_holds(*G, words::sequence(words::SeqId::s_bww), 4, go); });
    go.parallel = true;
    double tp =
        seconds([&] { rp = grp::identity_holds(*G, words::sequence(words::SeqId::s_bww), 4, go); });
    row("psl2:7 s_4 identity scan", ts, tp, rs.verdict == rp.verdict);
  }

  return 0;
}
