#include "engel/fingroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace engel::grp {

std::size_t KeyHash::operator()(const Key& k) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return std::size_t(h);
}

namespace {
constexpr std::uint64_t kTableLimit = 2048;  // dense multiplication table bound
}

// ---- PermRep --------------------------------------------------------------

Key PermRep::id() const {
  Key k(n_);
  for (std::size_t i = 0; i < n_; ++i) k[i] = std::uint32_t(i);
  return k;
}

Key PermRep::mul(const Key& a, const Key& b) const {
  Key c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = b[a[i]];
  return c;
}

Key PermRep::inv(const Key& a) const {
  Key c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[a[i]] = std::uint32_t(i);
  return c;
}

std::string PermRep::describe(const Key& a) const { return format_perm(a); }

// ---- MatRep ---------------------------------------------------------------

MatRep::MatRep(FieldPtr F, std::size_t k, bool modulo_center)
    : F_(std::move(F)), k_(k), mod_center_(modulo_center) {
  if (!F_->finite()) throw BadParams("matrix groups require a finite field");
}

Key MatRep::canon(Key m) const {
  if (!mod_center_) return m;
  for (auto e : m) {
    if (e == 0) continue;
    if (e != F_->encode(F_->one())) {
      std::uint32_t s = F_->cinv(e);
      for (auto& x : m) x = F_->cmul(x, s);
    }
    break;
  }
  return m;
}

Key MatRep::id() const {
  Key m(k_ * k_, 0);
  std::uint32_t one = F_->encode(F_->one());
  for (std::size_t i = 0; i < k_; ++i) m[i * k_ + i] = one;
  return m;
}

Key MatRep::mul(const Key& a, const Key& b) const {
  Key c(k_ * k_, 0);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t l = 0; l < k_; ++l) {
      std::uint32_t ail = a[i * k_ + l];
      if (!ail) continue;
      for (std::size_t j = 0; j < k_; ++j)
        if (b[l * k_ + j]) c[i * k_ + j] = F_->cadd(c[i * k_ + j], F_->cmul(ail, b[l * k_ + j]));
    }
  return canon(std::move(c));
}

Key MatRep::inv(const Key& a) const {
  // Gauss-Jordan on [a | I]
  std::size_t k = k_;
  std::vector<std::uint32_t> m(k * 2 * k, 0);
  std::uint32_t one = F_->encode(F_->one());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i * 2 * k + j] = a[i * k + j];
    m[i * 2 * k + k + i] = one;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t sel = c;
    while (sel < k && !m[sel * 2 * k + c]) ++sel;
    if (sel == k) throw ValidationError("singular matrix in group element");
    if (sel != c)
      for (std::size_t j = 0; j < 2 * k; ++j) std::swap(m[sel * 2 * k + j], m[c * 2 * k + j]);
    std::uint32_t piv = F_->cinv(m[c * 2 * k + c]);
    for (std::size_t j = 0; j < 2 * k; ++j) m[c * 2 * k + j] = F_->cmul(m[c * 2 * k + j], piv);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || !m[i * 2 * k + c]) continue;
      std::uint32_t f = m[i * 2 * k + c];
      for (std::size_t j = 0; j < 2 * k; ++j)
        m[i * 2 * k + j] = F_->csub(m[i * 2 * k + j], F_->cmul(f, m[c * 2 * k + j]));
    }
  }
  Key r(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r[i * k + j] = m[i * 2 * k + k + j];
  return canon(std::move(r));
}

std::string MatRep::describe(const Key& a) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < k_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < k_; ++j)
      os << (j ? "," : "") << F_->format(F_->decode(a[i * k_ + j]));
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---- ProdRep --------------------------------------------------------------

ProdRep::ProdRep(GroupPtr a, GroupPtr b) : a_(std::move(a)), b_(std::move(b)) {}

Key ProdRep::id() const { return {a_->identity(), b_->identity()}; }
Key ProdRep::mul(const Key& x, const Key& y) const {
  return {a_->mul(x[0], y[0]), b_->mul(x[1], y[1])};
}
Key ProdRep::inv(const Key& x) const { return {a_->inv(x[0]), b_->inv(x[1])}; }
std::string ProdRep::describe(const Key& x) const {
  return "(" + a_->describe(x[0]) + ", " + b_->describe(x[1]) + ")";
}

// ---- SemidirectRep --------------------------------------------------------

SemidirectRep::SemidirectRep(GroupPtr n, GroupPtr h, std::vector<std::vector<std::uint32_t>> act)
    : n_(std::move(n)), h_(std::move(h)), act_(std::move(act)) {
  if (act_.size() != h_->order()) throw ArityMismatch("one action per acting element");
}

Key SemidirectRep::id() const { return {n_->identity(), h_->identity()}; }
Key SemidirectRep::mul(const Key& x, const Key& y) const {
  return {n_->mul(x[0], act_[x[1]][y[0]]), h_->mul(x[1], y[1])};
}
Key SemidirectRep::inv(const Key& x) const {
  std::uint32_t hi = h_->inv(x[1]);
  return {act_[hi][n_->inv(x[0])], hi};
}
std::string SemidirectRep::describe(const Key& x) const {
  return "(" + n_->describe(x[0]) + ", " + h_->describe(x[1]) + ")";
}

// ---- TableRep -------------------------------------------------------------

TableRep::TableRep(std::vector<std::vector<std::uint32_t>> table) : t_(std::move(table)) {
  std::size_t m = t_.size();
  inv_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t_[i].size() != m) throw ArityMismatch("multiplication table must be square");
    bool found = false;
    for (std::size_t j = 0; j < m; ++j)
      if (t_[i][j] == 0 && t_[j][i] == 0) {
        inv_[i] = std::uint32_t(j);
        found = true;
        break;
      }
    if (!found) throw ValidationError("table element without inverse");
  }
}

Key TableRep::id() const { return {0}; }
Key TableRep::mul(const Key& a, const Key& b) const { return {t_[a[0]][b[0]]}; }
Key TableRep::inv(const Key& a) const { return {inv_[a[0]]}; }
std::string TableRep::describe(const Key& a) const { return "c" + std::to_string(a[0]); }

// ---- FiniteGroup ----------------------------------------------------------

GroupPtr FiniteGroup::generate(RepPtr rep, std::vector<Key> generators, std::uint64_t cap) {
  if (cap > kOrderCapMax) throw BadParams("group order cap exceeds hard limit");
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->rep_ = std::move(rep);
  Key e = G->rep_->id();
  G->elems_.push_back(e);
  G->index_.emplace(std::move(e), 0);
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t i = queue.front();
    queue.pop_front();
    for (const Key& g : generators) {
      Key k = G->rep_->mul(G->elems_[i], g);
      auto it = G->index_.find(k);
      if (it != G->index_.end()) continue;
      if (G->elems_.size() >= cap) throw OrderExceedsCap("group closure exceeds order cap");
      std::uint32_t idx = std::uint32_t(G->elems_.size());
      G->elems_.push_back(k);
      G->index_.emplace(std::move(k), idx);
      queue.push_back(idx);
    }
  }
  for (const Key& g : generators) {
    std::uint32_t idx = G->index_.at(g);
    if (std::find(G->gens_.begin(), G->gens_.end(), idx) == G->gens_.end())
      G->gens_.push_back(idx);
  }
  std::uint64_t n = G->elems_.size();
  G->inv_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) G->inv_[i] = G->index_.at(G->rep_->inv(G->elems_[i]));
  if (n <= kTableLimit) {
    G->table_.resize(std::size_t(n * n));
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        G->table_[std::size_t(a * n + b)] =
            G->index_.at(G->rep_->mul(G->elems_[std::size_t(a)], G->elems_[std::size_t(b)]));
  }
  return G;
}

std::uint32_t FiniteGroup::mul_slow(std::uint32_t a, std::uint32_t b) const {
  return index_.at(rep_->mul(elems_[a], elems_[b]));
}

std::uint32_t FiniteGroup::index_of(const Key& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) throw ValidationError("element not in group");
  return it->second;
}

std::optional<std::uint32_t> FiniteGroup::find(const Key& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FiniteGroup::power(std::uint32_t a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint32_t r = identity();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteGroup::conj(std::uint32_t a, std::uint32_t by) const {
  return mul(mul(inv(by), a), by);
}

std::uint32_t FiniteGroup::commutator(std::uint32_t a, std::uint32_t b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

unsigned FiniteGroup::element_order(std::uint32_t a) const {
  unsigned n = 1;
  std::uint32_t c = a;
  while (c != identity()) {
    c = mul(c, a);
    ++n;
  }
  return n;
}

void FiniteGroup::build_classes() const {
  std::size_t n = elems_.size();
  class_of_.assign(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (class_of_[i] != UINT32_MAX) continue;
    std::uint32_t cls = std::uint32_t(class_reps_.size());
    class_reps_.push_back(i);
    std::deque<std::uint32_t> queue{i};
    class_of_[i] = cls;
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (auto g : gens_) {
        std::uint32_t c = conj(x, g);
        if (class_of_[c] == UINT32_MAX) {
          class_of_[c] = cls;
          queue.push_back(c);
        }
      }
    }
  }
}

const std::vector<std::uint32_t>& FiniteGroup::class_of() const {
  std::call_once(class_once_, [this] { build_classes(); });
  return class_of_;
}

const std::vector<std::uint32_t>& FiniteGroup::class_reps() const {
  class_of();
  return class_reps_;
}

std::vector<std::uint64_t> FiniteGroup::class_size_multiset() const {
  const auto& co = class_of();
  std::vector<std::uint64_t> sizes(class_reps_.size(), 0);
  for (auto c : co) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// ---- subgroups ------------------------------------------------------------

namespace {

Subgroup from_elems(const FiniteGroup& G, std::vector<std::uint32_t> elems,
                    std::vector<std::uint8_t> in, std::vector<std::uint32_t> gens) {
  std::sort(elems.begin(), elems.end());
  Subgroup s;
  s.elems = std::move(elems);
  s.in = std::move(in);
  s.gens = std::move(gens);
  return s;
}

// closure of the seeds under multiplication, plus conjugation by the given
// conjugators (empty conjugators = plain subgroup closure)
Subgroup closure_impl(const FiniteGroup& G, std::vector<std::uint32_t> seeds,
                      const std::vector<std::uint32_t>& conjugators) {
  std::vector<std::uint32_t> gens;
  for (auto s : seeds)
    if (s != G.identity() && std::find(gens.begin(), gens.end(), s) == gens.end())
      gens.push_back(s);
  std::vector<std::uint8_t> in(G.order(), 0);
  std::vector<std::uint32_t> elems{G.identity()};
  in[G.identity()] = 1;
  std::deque<std::uint32_t> queue{G.identity()};
  std::size_t gen_cursor = 0;  // generators added later re-scan the members
  auto push = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
      queue.push_back(x);
    }
  };
  while (true) {
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < gens.size(); ++gi) push(G.mul(x, gens[gi]));
    }
    // conjugates of members become new generators until stable
    bool grew = false;
    for (std::size_t ei = 0; ei < elems.size() && !grew; ++ei)
      for (auto c : conjugators) {
        std::uint32_t y = G.conj(elems[ei], c);
        if (!in[y]) {
          gens.push_back(y);
          push(y);
          grew = true;
          break;
        }
      }
    if (!grew) break;
    // re-run members against the enlarged generator list
    for (auto e : elems) queue.push_back(e);
    (void)gen_cursor;
  }
  return from_elems(G, std::move(elems), std::move(in), std::move(gens));
}

}  // namespace

Subgroup trivial_subgroup(const FiniteGroup& G) {
  std::vector<std::uint8_t> in(G.order(), 0);
  in[G.identity()] = 1;
  return from_elems(G, {G.identity()}, std::move(in), {});
}

Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<std::uint32_t> elems(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) elems[i] = i;
  return from_elems(G, std::move(elems), std::vector<std::uint8_t>(G.order(), 1),
                    std::vector<std::uint32_t>(G.generators()));
}

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<std::uint32_t>& seeds) {
  return closure_impl(G, seeds, {});
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<std::uint32_t>& seeds) {
  return closure_impl(G, seeds, G.generators());
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (auto h : H.elems)
    for (auto g : G.generators())
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H) {
  std::vector<std::uint32_t> seeds;
  for (auto a : H.gens)
    for (auto b : H.gens) seeds.push_back(G.commutator(a, b));
  return closure_impl(G, seeds, H.gens);
}

std::vector<Subgroup> derived_series(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Subgroup> chain{H};
  while (true) {
    Subgroup next = derived_subgroup(G, chain.back());
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
    if (chain.back().trivial()) break;
  }
  return chain;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Subgroup> chain{H};
  while (true) {
    std::vector<std::uint32_t> seeds;
    for (auto a : chain.back().gens)
      for (auto b : H.gens) seeds.push_back(G.commutator(a, b));
    Subgroup next = closure_impl(G, seeds, H.gens);
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
    if (chain.back().trivial()) break;
  }
  return chain;
}

bool is_solvable(const FiniteGroup& G, const Subgroup& H) {
  return derived_series(G, H).back().trivial();
}

bool is_nilpotent(const FiniteGroup& G, const Subgroup& H) {
  return lower_central_series(G, H).back().trivial();
}

Subgroup center(const FiniteGroup& G) {
  std::vector<std::uint32_t> elems;
  std::vector<std::uint8_t> in(G.order(), 0);
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    bool central = true;
    for (auto g : G.generators())
      if (G.mul(i, g) != G.mul(g, i)) {
        central = false;
        break;
      }
    if (central) {
      elems.push_back(i);
      in[i] = 1;
    }
  }
  auto gens = elems;
  gens.erase(std::remove(gens.begin(), gens.end(), G.identity()), gens.end());
  return from_elems(G, std::move(elems), std::move(in), std::move(gens));
}

namespace {

// R(G) = {g : normal closure of g solvable}; likewise Fitting with nilpotent.
Subgroup radical_impl(const FiniteGroup& G, bool nilpotent_kind, bool self_check) {
  std::vector<std::uint32_t> good, bad;
  for (auto r : G.class_reps()) {
    if (r == G.identity()) continue;
    Subgroup N = normal_closure(G, {r});
    bool ok = nilpotent_kind ? is_nilpotent(G, N) : is_solvable(G, N);
    (ok ? good : bad).push_back(r);
  }
  Subgroup R = normal_closure(G, good);
  if (self_check) {
    if (!is_normal(G, R)) throw ValidationError("radical self-check: not normal");
    bool ok = nilpotent_kind ? is_nilpotent(G, R) : is_solvable(G, R);
    if (!ok) throw ValidationError("radical self-check: wrong structure");
    for (auto r : bad)
      if (R.contains(r)) throw ValidationError("radical self-check: contains a bad class");
    if (!nilpotent_kind) {
      // G/R(G) has trivial radical; no analogue for the Fitting subgroup
      // (F(G/F(G)) is nontrivial already for Sym(3))
      GroupPtr Q = quotient(G, R);
      if (!solvable_radical(*Q, false).trivial())
        throw ValidationError("radical self-check: quotient radical nontrivial");
    }
  }
  return R;
}

}  // namespace

Subgroup solvable_radical(const FiniteGroup& G, bool self_check) {
  return radical_impl(G, false, self_check);
}

Subgroup fitting_subgroup(const FiniteGroup& G, bool self_check) {
  return radical_impl(G, true, self_check);
}

GroupPtr quotient(const FiniteGroup& G, const Subgroup& N,
                  std::vector<std::uint32_t>* coset_of_out) {
  if (!is_normal(G, N)) throw ValidationError("quotient requires a normal subgroup");
  std::size_t n = G.order();
  std::vector<std::uint32_t> coset(n, UINT32_MAX), reps;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (coset[i] != UINT32_MAX) continue;
    std::uint32_t ord = std::uint32_t(reps.size());
    reps.push_back(i);
    for (auto h : N.elems) coset[G.mul(i, h)] = ord;
  }
  std::size_t m = reps.size();
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = coset[G.mul(reps[a], reps[b])];
  std::vector<Key> gens;
  for (auto g : G.generators()) gens.push_back({coset[g]});
  GroupPtr Q = FiniteGroup::generate(std::make_shared<TableRep>(std::move(table)), gens,
                                     std::max<std::uint64_t>(m, 1) + 1);
  if (Q->order() != m) throw ValidationError("quotient enumeration mismatch");
  if (coset_of_out) {
    coset_of_out->resize(n);
    for (std::size_t i = 0; i < n; ++i) (*coset_of_out)[i] = Q->index_of({coset[i]});
  }
  return Q;
}

GroupPtr subgroup_as_group(const FiniteGroup& G, const Subgroup& H,
                           std::vector<std::uint32_t>* to_sub) {
  std::size_t m = H.elems.size();
  std::vector<std::uint32_t> pos(G.order(), UINT32_MAX);
  for (std::size_t i = 0; i < m; ++i) pos[H.elems[i]] = std::uint32_t(i);
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::uint32_t p = pos[G.mul(H.elems[a], H.elems[b])];
      if (p == UINT32_MAX) throw ValidationError("subgroup handle not closed");
      table[a][b] = p;
    }
  // re-root the table at the identity's position so ordinal 0 is the identity
  std::uint32_t idp = pos[G.identity()];
  if (idp != 0) {
    // H.elems is sorted and the identity has index 0 in G, so idp == 0 always
    throw ValidationError("subgroup handle missing identity at front");
  }
  std::vector<Key> gens;
  for (auto g : H.gens.empty() ? H.elems : H.gens)
    if (pos[g] != UINT32_MAX) gens.push_back({pos[g]});
  GroupPtr S = FiniteGroup::generate(std::make_shared<TableRep>(std::move(table)), gens,
                                     std::max<std::uint64_t>(m, 1) + 1);
  if (S->order() != m) throw ValidationError("subgroup enumeration mismatch");
  if (to_sub) {
    to_sub->assign(G.order(), UINT32_MAX);
    for (std::size_t i = 0; i < m; ++i) (*to_sub)[H.elems[i]] = S->index_of({std::uint32_t(i)});
  }
  return S;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& G) {
  // every minimal normal subgroup is the normal closure of any of its
  // nontrivial elements, hence of some class representative
  std::vector<Subgroup> cands;
  for (auto r : G.class_reps()) {
    if (r == G.identity()) continue;
    Subgroup N = normal_closure(G, {r});
    if (std::none_of(cands.begin(), cands.end(), [&](const Subgroup& c) { return c == N; }))
      cands.push_back(std::move(N));
  }
  std::vector<Subgroup> mins;
  for (const auto& c : cands) {
    bool minimal = true;
    for (const auto& o : cands) {
      if (&o == &c || o.order() >= c.order()) continue;
      if (std::all_of(o.elems.begin(), o.elems.end(),
                      [&](std::uint32_t e) { return c.contains(e); })) {
        minimal = false;
        break;
      }
    }
    if (minimal) mins.push_back(c);
  }
  return mins;
}

CrResult cr_radical(const FiniteGroup& G) {
  if (!solvable_radical(G, false).trivial())
    throw NotSemisimple("CR-radical requires a trivial solvable radical");
  CrResult res;
  res.minimals = minimal_normal_subgroups(G);
  std::vector<std::uint32_t> seeds;
  for (const auto& m : res.minimals)
    seeds.insert(seeds.end(), m.gens.begin(), m.gens.end());
  res.V = normal_closure(G, seeds);
  // group the minimal normals by the invariants of their simple factor
  for (std::size_t i = 0; i < res.minimals.size(); ++i) {
    GroupPtr M = subgroup_as_group(G, res.minimals[i]);
    auto inner = minimal_normal_subgroups(*M);
    if (inner.empty()) throw ValidationError("minimal normal subgroup without simple factor");
    GroupPtr S = subgroup_as_group(*M, inner.front());
    std::uint64_t so = S->order();
    auto multiset = S->class_size_multiset();
    auto it = std::find_if(res.components.begin(), res.components.end(), [&](const CrComponent& c) {
      return c.simple_order == so && c.simple_class_sizes == multiset;
    });
    if (it == res.components.end()) {
      res.components.push_back({{i}, so, multiset});
    } else {
      it->minimal_indices.push_back(i);
    }
  }
  return res;
}

// ---- automorphisms and products ------------------------------------------

Automorphism make_automorphism(const FiniteGroup& G, std::vector<std::uint32_t> img) {
  std::size_t n = G.order();
  if (img.size() != n) throw NotAnAutomorphism("image table has wrong size");
  std::vector<std::uint8_t> seen(n, 0);
  for (auto v : img) {
    if (v >= n || seen[v]) throw NotAnAutomorphism("image table is not a bijection");
    seen[v] = 1;
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (img[G.mul(a, b)] != G.mul(img[a], img[b]))
        throw NotAnAutomorphism("image table is not a homomorphism");
  Automorphism s;
  s.img = std::move(img);
  // order of the permutation as an automorphism
  std::vector<std::uint32_t> cur = s.img;
  s.order = 1;
  auto is_id = [&](const std::vector<std::uint32_t>& p) {
    for (std::uint32_t i = 0; i < n; ++i)
      if (p[i] != i) return false;
    return true;
  };
  while (!is_id(cur)) {
    std::vector<std::uint32_t> nxt(n);
    for (std::uint32_t i = 0; i < n; ++i) nxt[i] = s.img[cur[i]];
    cur = std::move(nxt);
    ++s.order;
  }
  return s;
}

Automorphism identity_automorphism(const FiniteGroup& G) {
  std::vector<std::uint32_t> img(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) img[i] = i;
  return make_automorphism(G, std::move(img));
}

Automorphism perm_conjugation(const FiniteGroup& G, const Key& t) {
  const auto* pr = dynamic_cast<const PermRep*>(G.rep().get());
  if (!pr) throw BadParams("conjugation automorphism needs a permutation group");
  if (t.size() != pr->degree())
    throw NotAnAutomorphism("conjugator degree does not match the group");
  Key ti = pr->inv(t);
  std::vector<std::uint32_t> img(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    Key k = pr->mul(pr->mul(t, G.key(i)), ti);
    auto idx = G.find(k);
    if (!idx) throw NotAnAutomorphism("conjugator does not normalize the group");
    img[i] = *idx;
  }
  return make_automorphism(G, std::move(img));
}

Automorphism swap_automorphism(const FiniteGroup& G) {
  const auto* pr = dynamic_cast<const ProdRep*>(G.rep().get());
  if (!pr || pr->left()->order() != pr->right()->order())
    throw BadParams("swap automorphism needs a product of two equal factors");
  std::vector<std::uint32_t> img(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    const Key& k = G.key(i);
    auto idx = G.find({k[1], k[0]});
    if (!idx) throw BadParams("swap automorphism needs a product of two equal factors");
    img[i] = *idx;
  }
  return make_automorphism(G, std::move(img));
}

GroupPtr cyclic_group(unsigned n) {
  if (n == 0) throw BadParams("cyclic group order must be positive");
  auto rep = std::make_shared<PermRep>(n);
  std::vector<Key> gens;
  if (n > 1) {
    Key rot(n);
    for (unsigned i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    gens.push_back(std::move(rot));
  }
  return FiniteGroup::generate(rep, gens, std::uint64_t(n) + 1);
}

GroupPtr semidirect_cyclic(const GroupPtr& G, const Automorphism& sigma) {
  unsigned r = sigma.order;
  GroupPtr H = cyclic_group(r);
  // in BFS order the cyclic group's index j is the j-th power of the rotation
  std::vector<std::vector<std::uint32_t>> act(r);
  std::vector<std::uint32_t> cur(G->order());
  for (std::uint32_t i = 0; i < G->order(); ++i) cur[i] = i;
  for (unsigned j = 0; j < r; ++j) {
    act[j] = cur;
    std::vector<std::uint32_t> nxt(G->order());
    for (std::uint32_t i = 0; i < G->order(); ++i) nxt[i] = sigma.img[cur[i]];
    cur = std::move(nxt);
  }
  auto rep = std::make_shared<SemidirectRep>(G, H, std::move(act));
  std::vector<Key> gens;
  for (auto g : G->generators()) gens.push_back({g, H->identity()});
  if (r > 1) gens.push_back({G->identity(), 1});
  return FiniteGroup::generate(rep, gens, G->order() * std::uint64_t(r) + 1);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  auto rep = std::make_shared<ProdRep>(a, b);
  std::vector<Key> gens;
  for (auto g : a->generators()) gens.push_back({g, b->identity()});
  for (auto g : b->generators()) gens.push_back({a->identity(), g});
  return FiniteGroup::generate(rep, gens, a->order() * b->order() + 1);
}

// ---- words and sequences --------------------------------------------------

std::uint32_t evaluate(const FiniteGroup& G, const words::GroupWord& w,
                       const std::map<words::Symbol, std::uint32_t>& assignment) {
  std::uint32_t r = G.identity();
  for (const auto& [sym, exp] : w.letters) {
    auto it = assignment.find(sym);
    if (it == assignment.end()) throw ArityMismatch("assignment does not cover a symbol");
    r = G.mul(r, G.power(it->second, exp));
  }
  return r;
}

std::uint32_t seq_seed(const FiniteGroup& G, const words::SequenceSpec& seq, std::uint32_t x,
                       std::uint32_t y) {
  using words::SeqId;
  switch (seq.id) {
    case SeqId::e_group:
    case SeqId::w_group:
      return G.commutator(x, y);
    case SeqId::s_bww:
      return x;
    case SeqId::u_bggkpp:
      // x^-2 y^-1 x
      return G.mul(G.mul(G.mul(G.inv(x), G.inv(x)), G.inv(y)), x);
    default:
      throw BadParams("not a group sequence: " + words::sequence_name(seq.id));
  }
}

std::uint32_t seq_step(const FiniteGroup& G, const words::SequenceSpec& seq, std::uint32_t cur,
                       std::uint32_t x, std::uint32_t y) {
  using words::SeqId;
  switch (seq.id) {
    case SeqId::e_group:
      return G.commutator(cur, y);
    case SeqId::w_group:
      return G.commutator(G.commutator(cur, x), G.commutator(cur, y));
    case SeqId::s_bww: {
      std::uint32_t ci = G.inv(cur);
      std::uint32_t left = seq.conj == words::ConjConvention::right
                               ? G.conj(ci, y)                     // y^-1 c^-1 y
                               : G.mul(G.mul(y, ci), G.inv(y));    // y c^-1 y^-1
      return G.commutator(left, cur);
    }
    case SeqId::u_bggkpp: {
      std::uint32_t a = G.mul(G.mul(x, cur), G.inv(x));
      std::uint32_t b = G.mul(G.mul(y, cur), G.inv(y));
      return G.commutator(a, b);
    }
    default:
      throw BadParams("not a group sequence: " + words::sequence_name(seq.id));
  }
}

// ---- permutation text -----------------------------------------------------

Key parse_perm(std::size_t degree, const std::string& text) {
  Key p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = std::uint32_t(i);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size() || text == "e" || text == "()" || text == "id") return p;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw SyntaxError("expected '(' in cycle notation");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw SyntaxError("expected a point in cycle notation");
      unsigned long v = std::stoul(text.substr(start, pos - start));
      if (v < 1 || v > degree) throw ValueOutOfField("point out of range in cycle notation");
      cycle.push_back(std::uint32_t(v - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      for (std::size_t j = i + 1; j < cycle.size(); ++j)
        if (cycle[i] == cycle[j]) throw SyntaxError("point repeated within a cycle");
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      if (p[cycle[i]] != cycle[i]) throw SyntaxError("point repeated across cycles");
      p[cycle[i]] = cycle[i + 1];
    }
    if (cycle.size() > 1) {
      if (p[cycle.back()] != cycle.back()) throw SyntaxError("point repeated across cycles");
      p[cycle.back()] = cycle.front();
    }
  }
  return p;
}

std::string format_perm(const Key& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      first = false;
      s += std::to_string(j + 1);
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace engel::grp
