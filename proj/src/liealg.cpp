#include "engel/liealg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace engel::lie {

namespace {

std::string triple_name(const std::vector<std::string>& names, std::size_t i, std::size_t j,
                        std::size_t k) {
  auto nm = [&](std::size_t a) {
    return a < names.size() ? names[a] : "b" + std::to_string(a + 1);
  };
  return "(" + nm(i) + ", " + nm(j) + ", " + nm(k) + ")";
}

}  // namespace

LiePtr LieAlgebra::make(FieldPtr field, std::size_t dim, const std::vector<Scalar>& tensor,
                        std::vector<std::string> names) {
  if (tensor.size() != dim * dim * dim)
    throw ArityMismatch("structure tensor must have dim^3 entries");
  auto L = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  L->F_ = std::move(field);
  L->d_ = dim;
  L->tensor_ = tensor;
  if (names.empty())
    for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i + 1));
  if (names.size() != dim) throw ArityMismatch("basis name count must equal dim");
  L->names_ = std::move(names);

  const auto& F = L->F_;
  // antisymmetry: c[i][j][k] = -c[j][i][k] (covers c[i][i][k] = 0)
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (!F->eq(L->c(i, j, k), F->neg(L->c(j, i, k))))
          throw AntisymmetryViolation("antisymmetry fails at " +
                                      triple_name(L->names_, i, j, k));

  // cache ad matrices of the basis: ad_[i].at(k, j) = c[i][j][k]
  L->ad_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Mat m(F, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = L->c(i, j, k);
    L->ad_.push_back(std::move(m));
  }

  // Jacobi on basis triples i < j < k
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vec s = L->bracket(L->bracket(L->basis_vec(i), L->basis_vec(j)), L->basis_vec(k));
        s = linalg::vec_add(F, s,
                            L->bracket(L->bracket(L->basis_vec(j), L->basis_vec(k)),
                                       L->basis_vec(i)));
        s = linalg::vec_add(F, s,
                            L->bracket(L->bracket(L->basis_vec(k), L->basis_vec(i)),
                                       L->basis_vec(j)));
        if (!linalg::vec_is_zero(F, s))
          throw JacobiViolation("Jacobi identity fails at " + triple_name(L->names_, i, j, k));
      }
  return L;
}

Vec LieAlgebra::basis_vec(std::size_t i) const {
  Vec v = zero_vec();
  v[i] = F_->one();
  return v;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != d_ || v.size() != d_) throw ArityMismatch("vector dimension");
  Vec r = zero_vec();
  for (std::size_t i = 0; i < d_; ++i) {
    if (F_->is_zero(u[i])) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (F_->is_zero(v[j])) continue;
      Scalar uv = F_->mul(u[i], v[j]);
      for (std::size_t k = 0; k < d_; ++k) {
        const Scalar& cc = c(i, j, k);
        if (F_->is_zero(cc)) continue;
        r[k] = F_->add(r[k], F_->mul(uv, cc));
      }
    }
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& t) const {
  Mat m(F_, d_, d_);
  for (std::size_t i = 0; i < d_; ++i) {
    if (F_->is_zero(t[i])) continue;
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t k = 0; k < d_; ++k) {
        const Scalar& cc = c(i, j, k);
        if (F_->is_zero(cc)) continue;
        m.at(k, j) = F_->add(m.at(k, j), F_->mul(t[i], cc));
      }
  }
  return m;
}

Vec LieAlgebra::parse_vec(const std::string& text) const {
  Vec v;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    // trim
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw SyntaxError("empty coordinate in vector");
    v.push_back(F_->parse(item.substr(b, e - b + 1)));
  }
  if (v.size() != d_) throw ArityMismatch("vector has wrong number of coordinates");
  return v;
}

std::string LieAlgebra::format_vec(const Vec& v) const {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += F_->format(v[i]);
  }
  return s;
}

LiePtr LieAlgebra::direct_sum(const LiePtr& a, const LiePtr& b) {
  if (a->field()->spec() != b->field()->spec())
    throw ArityMismatch("direct sum requires a common field");
  const auto& F = a->field();
  std::size_t d = a->dim() + b->dim();
  std::vector<Scalar> t(d * d * d, F->zero());
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    t[(i * d + j) * d + k] = c;
  };
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j)
      for (std::size_t k = 0; k < a->dim(); ++k) put(i, j, k, a->c(i, j, k));
  std::size_t off = a->dim();
  for (std::size_t i = 0; i < b->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j)
      for (std::size_t k = 0; k < b->dim(); ++k) put(off + i, off + j, off + k, b->c(i, j, k));
  std::vector<std::string> names;
  for (const auto& n : a->names()) names.push_back(n + "'");
  for (const auto& n : b->names()) names.push_back(n + "''");
  return make(F, d, t, std::move(names));
}

namespace {

// span of [U, V] for subspaces given by their basis rows
Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  Subspace s(L.field(), L.dim());
  for (const auto& u : U.basis())
    for (const auto& v : V.basis()) s.add(L.bracket(u, v));
  return s;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!s.contains(L.bracket(u, v))) return false;
  return true;
}

}  // namespace

std::vector<Subspace> series(const LieAlgebra& L, SeriesKind kind,
                             const std::optional<Subspace>& within) {
  Subspace start = within ? *within : Subspace::full(L.field(), L.dim());
  if (within && !is_subalgebra(L, start))
    throw NotASubalgebra("series requires a subalgebra");
  std::vector<Subspace> chain{start};
  while (true) {
    const Subspace& cur = chain.back();
    Subspace next = kind == SeriesKind::derived ? bracket_span(L, cur, cur)
                                                : bracket_span(L, cur, start);
    if (next == cur) break;
    chain.push_back(std::move(next));
    if (chain.back().is_zero()) break;
  }
  return chain;
}

bool is_solvable(const LieAlgebra& L) { return series(L, SeriesKind::derived).back().is_zero(); }

bool is_nilpotent_algebra(const LieAlgebra& L) {
  return series(L, SeriesKind::lower_central).back().is_zero();
}

unsigned derived_length(const LieAlgebra& L, const Subspace& s) {
  Subspace cur = s;
  unsigned n = 0;
  while (!cur.is_zero()) {
    Subspace next = bracket_span(L, cur, cur);
    if (next == cur) throw ValidationError("derived series stabilizes above zero");
    cur = std::move(next);
    ++n;
  }
  return n;
}

Subspace solvable_radical(const LieAlgebra& L) {
  const auto& F = L.field();
  if (F->characteristic() != 0)
    throw UnsupportedCharacteristic("radical computation requires characteristic 0");
  std::size_t d = L.dim();
  Subspace derived = bracket_span(L, Subspace::full(F, d), Subspace::full(F, d));
  // x in R  <=>  kappa(x, [L,L]) = 0, where kappa(u,v) = tr(ad u . ad v)
  Mat K(F, derived.dim(), d);
  for (std::size_t j = 0; j < derived.dim(); ++j) {
    Mat adb = L.ad(derived.basis()[j]);
    for (std::size_t i = 0; i < d; ++i)
      K.at(j, i) = linalg::trace(linalg::mat_mul(L.ad_basis(i), adb));
  }
  Subspace R = linalg::kernel(K);

  // self-checks: ideal, solvable, semisimple quotient
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& r : R.basis())
      if (!R.contains(L.bracket(L.basis_vec(i), r)))
        throw ValidationError("radical self-check: not an ideal");
  if (!series(L, SeriesKind::derived, R).back().is_zero())
    throw ValidationError("radical self-check: not solvable");
  if (R.dim() < d) {
    LiePtr Q = quotient_algebra(L, R);
    std::size_t m = Q->dim();
    Mat KQ(F, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        KQ.at(i, j) = linalg::trace(linalg::mat_mul(Q->ad_basis(i), Q->ad_basis(j)));
    if (!linalg::kernel(KQ).is_zero())
      throw ValidationError("radical self-check: quotient Killing form degenerate");
  }
  return R;
}

LiePtr quotient_algebra(const LieAlgebra& L, const Subspace& ideal) {
  const auto& F = L.field();
  std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& r : ideal.basis())
      if (!ideal.contains(L.bracket(L.basis_vec(i), r)))
        throw ValidationError("quotient requires an ideal");
  // complement coordinates = non-pivot columns; residues are supported there
  std::vector<std::size_t> comp;
  {
    std::vector<bool> is_piv(d, false);
    for (auto p : ideal.pivots()) is_piv[p] = true;
    for (std::size_t i = 0; i < d; ++i)
      if (!is_piv[i]) comp.push_back(i);
  }
  std::size_t m = comp.size();
  std::vector<Scalar> t(m * m * m, F->zero());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec br = ideal.residue(L.bracket(L.basis_vec(comp[a]), L.basis_vec(comp[b])));
      for (std::size_t cdx = 0; cdx < m; ++cdx) t[(a * m + b) * m + cdx] = br[comp[cdx]];
    }
  std::vector<std::string> names;
  for (auto i : comp) names.push_back(L.names()[i] + "~");
  return LieAlgebra::make(F, m, t, std::move(names));
}

Subspace nilradical(const LieAlgebra& L) {
  const auto& F = L.field();
  if (F->characteristic() != 0)
    throw UnsupportedCharacteristic("nilradical computation requires characteristic 0");
  std::size_t d = L.dim();
  Subspace R = solvable_radical(L);
  // [L, R] is always contained in the nilradical
  Subspace N = bracket_span(L, Subspace::full(F, d), R);
  auto extend_from_complement = [&]() {
    // residues of the R-basis modulo N span a complement of N in R
    bool grew = false;
    for (const auto& r : R.basis()) {
      Vec c = N.residue(r);
      if (linalg::vec_is_zero(F, c)) continue;
      if (linalg::is_nilpotent(L.ad(c))) grew |= N.add(c);
    }
    return grew;
  };
  while (extend_from_complement()) {
  }
  // budgeted search for an ad-nilpotent element missed by the basis pass;
  // grows N and restarts if one turns up
  bool again = true;
  while (again) {
    again = false;
    std::vector<Vec> comp;
    for (const auto& r : R.basis()) {
      Vec c = N.residue(r);
      if (!linalg::vec_is_zero(F, c)) comp.push_back(std::move(c));
    }
    if (comp.empty()) break;
    for_grid_points(comp.size(), 2048, [&](const std::vector<long>& pt) {
      Vec x(d, F->zero());
      bool nz = false;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (pt[i] == 0) continue;
        nz = true;
        x = linalg::vec_add(F, x, linalg::vec_scaled(F, comp[i], F->from_int(pt[i])));
      }
      if (!nz) return false;
      if (linalg::is_nilpotent(L.ad(x))) {
        N.add(x);
        while (extend_from_complement()) {
        }
        again = true;
        return true;
      }
      return false;
    });
  }
  // self-checks: nilpotent ideal of ad-nilpotent elements inside R
  if (!R.contains(N)) throw ValidationError("nilradical self-check: escapes the radical");
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& nvec : N.basis())
      if (!N.contains(L.bracket(L.basis_vec(i), nvec)))
        throw ValidationError("nilradical self-check: not an ideal");
  for (const auto& nvec : N.basis())
    if (!linalg::is_nilpotent(L.ad(nvec)))
      throw ValidationError("nilradical self-check: basis element not ad-nilpotent");
  if (!N.is_zero() && !series(L, SeriesKind::lower_central, N).back().is_zero())
    throw ValidationError("nilradical self-check: not nilpotent");
  return N;
}

Subspace ideal_generated(const LieAlgebra& L, const Vec& y) {
  Subspace I(L.field(), L.dim());
  if (!I.add(y)) return I;  // y = 0
  std::vector<Vec> queue{y};
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < L.dim(); ++i) {
      Vec b = L.bracket(L.basis_vec(i), v);
      if (I.add(b)) queue.push_back(std::move(b));
    }
  }
  return I;
}

EngelKind engel_kind_by_name(const std::string& name) {
  if (name == "e") return EngelKind::e;
  if (name == "v") return EngelKind::v;
  if (name == "w") return EngelKind::w;
  if (name == "strict") return EngelKind::strict;
  if (name == "total") return EngelKind::total;
  throw BadParams("unknown engel kind: " + name);
}

std::string engel_kind_name(EngelKind k) {
  switch (k) {
    case EngelKind::e: return "e";
    case EngelKind::v: return "v";
    case EngelKind::w: return "w";
    case EngelKind::strict: return "strict";
    case EngelKind::total: return "total";
  }
  return "?";
}

Vec lie_eval(const LieAlgebra& L, words::SeqId seq, int n, const Vec& x, const Vec& y,
             const std::optional<Vec>& z) {
  if (n < 1) throw BadParams("sequence index must be >= 1");
  using words::SeqId;
  switch (seq) {
    case SeqId::e_lie: {
      Vec cur = L.bracket(x, y);
      for (int i = 2; i <= n; ++i) cur = L.bracket(cur, y);
      return cur;
    }
    case SeqId::v_lie: {
      Vec t = L.bracket(x, y);
      Vec cur = x;
      for (int i = 2; i <= n; ++i) cur = L.bracket(cur, t);
      return cur;
    }
    case SeqId::w_lie: {
      Vec cur = L.bracket(x, y);
      for (int i = 2; i <= n; ++i) cur = L.bracket(L.bracket(cur, x), L.bracket(cur, y));
      return cur;
    }
    case SeqId::r_lie: {
      if (!z) throw ArityMismatch("three-variable sequence needs z");
      Vec t = L.bracket(x, y);
      Vec cur = L.bracket(*z, t);
      for (int i = 2; i <= n; ++i) cur = L.bracket(cur, t);
      return cur;
    }
    default:
      throw BadParams("not a Lie sequence: " + words::sequence_name(seq));
  }
}

PolyVec poly_bracket(const LieAlgebra& L, const PolyVec& u, const PolyVec& v) {
  std::size_t d = L.dim();
  std::size_t nv = u.at(0).nvars();
  PolyVec r(d, poly::MultiPoly::zero(u[0].field(), nv));
  for (std::size_t i = 0; i < d; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      poly::MultiPoly p = u[i] * v[j];
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& cc = L.c(i, j, k);
        if (L.field()->is_zero(cc)) continue;
        r[k] = r[k] + p.scaled(cc);
      }
    }
  }
  return r;
}

bool poly_vec_zero(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(), [](const poly::MultiPoly& p) { return p.is_zero(); });
}

PolyVec symbolic_vector(const LieAlgebra& L, std::size_t nvars, std::size_t offset) {
  PolyVec v;
  for (std::size_t i = 0; i < L.dim(); ++i)
    v.push_back(poly::MultiPoly::variable(L.field(), nvars, offset + i));
  return v;
}

PolyVec embed_vector(const LieAlgebra& L, std::size_t nvars, const Vec& v) {
  PolyVec r;
  for (std::size_t i = 0; i < L.dim(); ++i)
    r.push_back(poly::MultiPoly::constant(L.field(), nvars, v[i]));
  return r;
}

PolyVec symbolic_seq_term(const LieAlgebra& L, words::SeqId seq, int n, const PolyVec& x,
                          const PolyVec& y) {
  if (n < 1) throw BadParams("sequence index must be >= 1");
  using words::SeqId;
  switch (seq) {
    case SeqId::e_lie: {
      PolyVec cur = poly_bracket(L, x, y);
      for (int i = 2; i <= n; ++i) cur = poly_bracket(L, cur, y);
      return cur;
    }
    case SeqId::v_lie: {
      PolyVec t = poly_bracket(L, x, y);
      PolyVec cur = x;
      for (int i = 2; i <= n; ++i) cur = poly_bracket(L, cur, t);
      return cur;
    }
    case SeqId::w_lie: {
      PolyVec cur = poly_bracket(L, x, y);
      for (int i = 2; i <= n; ++i)
        cur = poly_bracket(L, poly_bracket(L, cur, x), poly_bracket(L, cur, y));
      return cur;
    }
    default:
      throw BadParams("not a two-variable Lie sequence: " + words::sequence_name(seq));
  }
}

std::uint64_t vec_space_size(const LieAlgebra& L) {
  if (!L.field()->finite()) throw EnumerationTooLarge("infinite field");
  std::uint64_t q = L.field()->size();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (n > std::uint64_t(-1) / q) throw EnumerationTooLarge("vector space too large");
    n *= q;
  }
  return n;
}

Vec decode_vec(const LieAlgebra& L, std::uint64_t code) {
  std::uint64_t q = L.field()->size();
  Vec v(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    v[i] = L.field()->decode(std::uint32_t(code % q));
    code /= q;
  }
  return v;
}

std::uint64_t encode_vec(const LieAlgebra& L, const Vec& v) {
  std::uint64_t q = L.field()->size();
  std::uint64_t code = 0;
  for (std::size_t i = L.dim(); i-- > 0;) code = code * q + L.field()->encode(v[i]);
  return code;
}

bool for_grid_points(std::size_t d, std::size_t budget,
                     const std::function<bool(const std::vector<long>&)>& fn) {
  std::size_t used = 0;
  std::vector<long> pt(d, 0);
  auto spend = [&](const std::vector<long>& p) {
    ++used;
    return fn(p);
  };
  if (spend(pt)) return true;
  if (d == 0) return false;
  // rank -> value zigzag: 0,1,... maps to 1,-1,2,-2,...
  auto value_of = [](long z) { return (z / 2 + 1) * (z % 2 ? -1 : 1); };
  for (long r = 1;; ++r) {
    // shell of L-infinity norm exactly r, ordered by support size, then by
    // support positions, then per coordinate through the zigzag 1,-1,2,-2,...
    // so sparse witnesses (basis vectors and their small combinations) are
    // found first and the reported witness is scheduling-independent
    for (std::size_t s = 1; s <= d; ++s) {
      std::vector<std::size_t> sup(s);
      for (std::size_t i = 0; i < s; ++i) sup[i] = i;
      while (true) {
        std::vector<long> rank(s, 0);
        while (true) {
          long maxabs = 0;
          for (std::size_t i = 0; i < s; ++i)
            maxabs = std::max(maxabs, std::abs(value_of(rank[i])));
          if (maxabs == r) {
            std::fill(pt.begin(), pt.end(), 0L);
            for (std::size_t i = 0; i < s; ++i) pt[sup[i]] = value_of(rank[i]);
            if (budget && used >= budget) return false;
            if (spend(pt)) return true;
          }
          std::size_t i = s;
          while (i > 0) {
            if (rank[i - 1] < 2 * r - 1) {
              ++rank[i - 1];
              break;
            }
            rank[i - 1] = 0;
            --i;
          }
          if (i == 0) break;
        }
        // next s-combination of positions in lex order
        std::size_t i = s;
        while (i > 0 && sup[i - 1] == d - s + (i - 1)) --i;
        if (i == 0) break;
        ++sup[i - 1];
        for (std::size_t j = i; j < s; ++j) sup[j] = sup[j - 1] + 1;
      }
    }
  }
}

}  // namespace engel::lie
