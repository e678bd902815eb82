#include <algorithm>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "engel/fingroup.hpp"

namespace engel::grp {

namespace {

using clock_t_ = std::chrono::steady_clock;

std::int64_t ms_since(clock_t_::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(clock_t_::now() - t0).count();
}

// Epoch-stamped visited array: one per worker, reset-free orbit tracking.
struct OrbitScratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  explicit OrbitScratch(std::size_t n) : stamp(n, UINT32_MAX) {}
};

// Orbit of the step map from u_1(x,y): reaches the identity (first component,
// with the vanishing index) or enters a cycle avoiding it (second false).
std::pair<bool, unsigned> orbit_dies(const FiniteGroup& G, const words::SequenceSpec& seq,
                                     std::uint32_t x, std::uint32_t y, OrbitScratch& sc) {
  ++sc.epoch;
  std::uint32_t cur = seq_seed(G, seq, x, y);
  unsigned n = 1;
  while (true) {
    if (cur == G.identity()) return {true, n};
    if (sc.stamp[cur] == sc.epoch) return {false, n};
    sc.stamp[cur] = sc.epoch;
    cur = seq_step(G, seq, cur, x, y);
    ++n;
  }
}

}  // namespace

EngelElementResult is_engel_element(const FiniteGroup& G, const words::SequenceSpec& seq,
                                    std::uint32_t y, const GroupEngelOptions& opts) {
  if (!seq.is_group) throw BadParams("group engel test needs a group sequence");
  std::uint32_t n = std::uint32_t(G.order());
  unsigned max_n = 0;
  std::uint32_t wit = UINT32_MAX;
#ifdef _OPENMP
#pragma omp parallel if (opts.parallel)
#endif
  {
    OrbitScratch sc(n);
    unsigned local_max = 0;
    std::uint32_t local_wit = UINT32_MAX;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long long x = 0; x < (long long)n; ++x) {
      auto [dies, steps] = orbit_dies(G, seq, std::uint32_t(x), y, sc);
      if (dies)
        local_max = std::max(local_max, steps);
      else
        local_wit = std::min(local_wit, std::uint32_t(x));
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      max_n = std::max(max_n, local_max);
      wit = std::min(wit, local_wit);
    }
  }
  EngelElementResult r;
  r.engel = wit == UINT32_MAX;
  r.max_n = max_n;
  if (!r.engel) r.witness_x = wit;
  return r;
}

EngelSetResult engel_like_set(const FiniteGroup& G, const words::SequenceSpec& seq,
                              const GroupEngelOptions& opts) {
  auto t0 = clock_t_::now();
  EngelSetResult res;
  res.member.assign(G.order(), 0);
  // membership is a class function: u_n(x, y)^g = u_n(x^g, y^g)
  const auto& co = G.class_of();
  const auto& reps = G.class_reps();
  std::vector<std::uint8_t> class_member(reps.size(), 0);
  for (std::size_t c = 0; c < reps.size(); ++c)
    class_member[c] = is_engel_element(G, seq, reps[c], opts).engel ? 1 : 0;
  for (std::uint32_t i = 0; i < G.order(); ++i) res.member[i] = class_member[co[i]];
  for (auto m : res.member) res.count += m;

  res.report.claim = "group-engel-set";
  res.report.inputs = {{"seq", words::sequence_name(seq.id)}, {"order", G.order()}};
  res.report.config = {{"parallel", opts.parallel}};
  res.report.verdict = "pass";
  res.report.iterations = std::uint64_t(reps.size()) * G.order();
  res.report.details = {{"members", res.count}, {"classes", reps.size()}};
  res.report.millis = ms_since(t0);
  return res;
}

rpt::Report identity_holds(const FiniteGroup& G, const words::SequenceSpec& seq, int n,
                           const GroupEngelOptions& opts) {
  if (!seq.is_group) throw BadParams("group identity check needs a group sequence");
  if (n < 1) throw BadParams("sequence index must be >= 1");
  auto t0 = clock_t_::now();
  rpt::Report rep;
  rep.claim = "group-identity";
  rep.inputs = {{"seq", words::sequence_name(seq.id)}, {"n", n}, {"order", G.order()}};
  rep.config = {{"strategy", opts.class_reps ? "class-reps" : "full"},
                {"parallel", opts.parallel}};

  std::vector<std::uint32_t> xs;
  if (opts.class_reps) {
    xs = G.class_reps();
  } else {
    xs.resize(G.order());
    for (std::uint32_t i = 0; i < G.order(); ++i) xs[i] = i;
  }
  std::vector<std::uint8_t> ok(std::size_t(n) + 1, 1);  // ok[m]: u_m = 1 everywhere so far
  std::uint64_t wit = UINT64_MAX;  // (x position) * order + y, minimized
#ifdef _OPENMP
#pragma omp parallel if (opts.parallel)
#endif
  {
    std::vector<std::uint8_t> local_ok(std::size_t(n) + 1, 1);
    std::uint64_t local_wit = UINT64_MAX;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long long xi = 0; xi < (long long)xs.size(); ++xi) {
      std::uint32_t x = xs[std::size_t(xi)];
      for (std::uint32_t y = 0; y < G.order(); ++y) {
        std::uint32_t cur = seq_seed(G, seq, x, y);
        for (int m = 1; m <= n; ++m) {
          if (cur != G.identity()) {
            local_ok[std::size_t(m)] = 0;
            if (m == n)
              local_wit = std::min(local_wit, std::uint64_t(xi) * G.order() + y);
          }
          if (m < n) cur = seq_step(G, seq, cur, x, y);
        }
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      for (int m = 1; m <= n; ++m) ok[std::size_t(m)] &= local_ok[std::size_t(m)];
      wit = std::min(wit, local_wit);
    }
  }
  rep.iterations = std::uint64_t(xs.size()) * G.order() * std::uint64_t(n);
  nlohmann::json holds_at = nlohmann::json::array();
  std::optional<int> least_m;
  for (int m = 1; m <= n; ++m)
    if (ok[std::size_t(m)]) {
      holds_at.push_back(m);
      if (!least_m) least_m = m;
    }
  rep.details["holds_at"] = holds_at;
  rep.details["least_m"] = least_m ? nlohmann::json(*least_m) : nlohmann::json();
  if (ok[std::size_t(n)]) {
    rep.verdict = "holds";
  } else {
    rep.verdict = "fails";
    std::uint32_t x = xs[std::size_t(wit / G.order())];
    std::uint32_t y = std::uint32_t(wit % G.order());
    rep.witness = {{"x", G.describe(x)}, {"y", G.describe(y)}};
  }
  rep.millis = ms_since(t0);
  return rep;
}

rpt::Report engel_automorphism_test(const FiniteGroup& G, const Automorphism& sigma,
                                    const words::SequenceSpec& seq,
                                    const GroupEngelOptions& opts) {
  auto t0 = clock_t_::now();
  if (!seq.is_group) throw BadParams("automorphism engel test needs a group sequence");
  rpt::Report ac = words::check_autocorrect(seq, 10);
  if (!ac.ok())
    throw SequenceNotAutocorrect("sequence is not autocorrect: " +
                                 words::sequence_name(seq.id));

  GroupPtr Gp = G.shared_from_this();
  GroupPtr S = semidirect_cyclic(Gp, sigma);
  std::uint32_t y = sigma.order == 1 ? S->identity()
                                     : S->index_of(Key{G.identity(), 1});
  rpt::Report rep;
  rep.claim = "engel-automorphism";
  rep.inputs = {{"seq", words::sequence_name(seq.id)},
                {"order", G.order()},
                {"sigma-order", sigma.order},
                {"holomorph-order", S->order()}};
  rep.config = {{"parallel", opts.parallel}};

  std::uint32_t wit = UINT32_MAX;
  bool left_factor = false;  // exceptions must not cross the parallel region
#ifdef _OPENMP
#pragma omp parallel if (opts.parallel)
#endif
  {
    OrbitScratch sc(std::size_t(S->order()));
    std::uint32_t local_wit = UINT32_MAX;
    bool local_left = false;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long long g = 0; g < (long long)G.order(); ++g) {
      std::uint32_t x = S->index_of(Key{std::uint32_t(g), 0});
      // inline orbit with the G-factor assertion on every term
      ++sc.epoch;
      std::uint32_t cur = seq_seed(*S, seq, x, y);
      bool dies;
      while (true) {
        if (S->key(cur)[1] != 0) {
          local_left = true;
          dies = false;
          break;
        }
        if (cur == S->identity()) {
          dies = true;
          break;
        }
        if (sc.stamp[cur] == sc.epoch) {
          dies = false;
          break;
        }
        sc.stamp[cur] = sc.epoch;
        cur = seq_step(*S, seq, cur, x, y);
      }
      if (!dies) local_wit = std::min(local_wit, std::uint32_t(g));
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      wit = std::min(wit, local_wit);
      left_factor |= local_left;
    }
  }
  if (left_factor) throw ValidationError("autocorrect sequence term left the G-factor");
  rep.iterations = G.order();
  if (wit == UINT32_MAX) {
    rep.verdict = "engel";
  } else {
    rep.verdict = "not-engel";
    rep.witness = {{"g", G.describe(wit)}};
  }
  rep.millis = ms_since(t0);
  return rep;
}

}  // namespace engel::grp
