#include "engel/linalg.hpp"

#include <algorithm>

namespace engel::linalg {

Mat::Mat(FieldPtr f, std::size_t r, std::size_t c)
    : F(std::move(f)), rows(r), cols(c), a(r * c, F->zero()) {}

Mat Mat::identity(FieldPtr f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.F->one();
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!F->is_zero(x)) return false;
  return true;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw ArityMismatch("matrix dimensions");
  Mat C(A.F, A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const Scalar& aik = A.at(i, k);
      if (A.F->is_zero(aik)) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = A.F->add(C.at(i, j), A.F->mul(aik, B.at(k, j)));
    }
  return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw ArityMismatch("matrix dimensions");
  Mat C(A.F, A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->add(A.a[i], B.a[i]);
  return C;
}

Mat mat_pow(const Mat& A, unsigned e) {
  Mat r = Mat::identity(A.F, A.rows);
  Mat b = A;
  while (e) {
    if (e & 1) r = mat_mul(r, b);
    b = mat_mul(b, b);
    e >>= 1;
  }
  return r;
}

Vec mat_vec(const Mat& A, const Vec& v) {
  if (A.cols != v.size()) throw ArityMismatch("matrix-vector dimensions");
  Vec r(A.rows, A.F->zero());
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) {
      if (A.F->is_zero(A.at(i, j))) continue;
      r[i] = A.F->add(r[i], A.F->mul(A.at(i, j), v[j]));
    }
  return r;
}

Scalar trace(const Mat& A) {
  Scalar t = A.F->zero();
  for (std::size_t i = 0; i < A.rows; ++i) t = A.F->add(t, A.at(i, i));
  return t;
}

bool is_nilpotent(const Mat& A) { return mat_pow(A, unsigned(A.rows)).is_zero(); }

bool vec_is_zero(const FieldPtr& F, const Vec& v) {
  for (const auto& x : v)
    if (!F->is_zero(x)) return false;
  return true;
}

Vec vec_add(const FieldPtr& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F->add(a[i], b[i]);
  return r;
}

Vec vec_scaled(const FieldPtr& F, const Vec& a, const Scalar& c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F->mul(a[i], c);
  return r;
}

Subspace::Subspace(FieldPtr F, std::size_t ambient) : F_(std::move(F)), ambient_(ambient) {}

Subspace Subspace::span(const FieldPtr& F, std::size_t ambient,
                        const std::vector<Vec>& vectors) {
  Subspace s(F, ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Subspace Subspace::full(const FieldPtr& F, std::size_t ambient) {
  Subspace s(F, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, F->zero());
    e[i] = F->one();
    s.add(e);
  }
  return s;
}

Vec Subspace::residue(const Vec& v) const {
  Vec r = v;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const Scalar& c = r[pivots_[b]];
    if (F_->is_zero(c)) continue;
    // basis rows are normalized with pivot 1
    for (std::size_t j = 0; j < ambient_; ++j)
      r[j] = F_->sub(r[j], F_->mul(c, basis_[b][j]));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw ArityMismatch("vector dimension");
  return vec_is_zero(F_, residue(v));
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& row : o.basis_)
    if (!contains(row)) return false;
  return true;
}

bool Subspace::add(const Vec& v) {
  if (v.size() != ambient_) throw ArityMismatch("vector dimension");
  Vec r = residue(v);
  std::size_t p = 0;
  while (p < ambient_ && F_->is_zero(r[p])) ++p;
  if (p == ambient_) return false;
  Scalar c = F_->inv(r[p]);
  for (std::size_t j = 0; j < ambient_; ++j) r[j] = F_->mul(r[j], c);
  // back-substitute the new pivot into the existing rows
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const Scalar& k = basis_[b][p];
    if (F_->is_zero(k)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      basis_[b][j] = F_->sub(basis_[b][j], F_->mul(k, r[j]));
  }
  // keep rows sorted by pivot column
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  basis_.insert(basis_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  Subspace s = *this;
  for (const auto& row : o.basis_) s.add(row);
  return s;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace kernel(const Mat& A) {
  const FieldPtr& F = A.F;
  // row reduce a copy
  std::vector<Vec> rows(A.rows, Vec(A.cols));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) rows[i][j] = A.at(i, j);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && F->is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Scalar inv = F->inv(rows[r][c]);
    for (std::size_t j = 0; j < A.cols; ++j) rows[r][j] = F->mul(rows[r][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || F->is_zero(rows[i][c])) continue;
      Scalar k = rows[i][c];
      for (std::size_t j = 0; j < A.cols; ++j)
        rows[i][j] = F->sub(rows[i][j], F->mul(k, rows[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  Subspace ker(F, A.cols);
  for (std::size_t c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(A.cols, F->zero());
    v[c] = F->one();
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = F->neg(rows[i][c]);
    ker.add(v);
  }
  return ker;
}

}  // namespace engel::linalg
