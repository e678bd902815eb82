#pragma once

#include <vector>

#include "engel/fields.hpp"

namespace engel::linalg {

using fields::FieldPtr;
using fields::Scalar;

using Vec = std::vector<Scalar>;

// Dense exact matrix, row major.
struct Mat {
  FieldPtr F;
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(FieldPtr f, std::size_t r, std::size_t c);
  static Mat identity(FieldPtr f, std::size_t n);
  Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool is_zero() const;
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_pow(const Mat& A, unsigned e);
Vec mat_vec(const Mat& A, const Vec& v);
Scalar trace(const Mat& A);
// True iff A^n = 0 for some n <= dim (checked via A^dim).
bool is_nilpotent(const Mat& A);

bool vec_is_zero(const FieldPtr& F, const Vec& v);
Vec vec_add(const FieldPtr& F, const Vec& a, const Vec& b);
Vec vec_scaled(const FieldPtr& F, const Vec& a, const Scalar& c);

// Row space in reduced echelon form; canonical, so equality of subspaces is
// equality of the basis rows.
class Subspace {
 public:
  Subspace(FieldPtr F, std::size_t ambient);
  static Subspace span(const FieldPtr& F, std::size_t ambient,
                       const std::vector<Vec>& vectors);
  static Subspace full(const FieldPtr& F, std::size_t ambient);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Adds v to the row space; returns true if the dimension grew.
  bool add(const Vec& v);
  Subspace sum(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool is_zero() const { return basis_.empty(); }
  // Reduces v against the basis; the residue vanishes on all pivot columns,
  // so its nonzero support lies in the complement coordinates.
  Vec residue(const Vec& v) const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  FieldPtr F_;
  std::size_t ambient_;
  std::vector<Vec> basis_;        // rref rows
  std::vector<std::size_t> pivots_;
};

// Right kernel {x : A x = 0} as a Subspace of F^cols.
Subspace kernel(const Mat& A);

}  // namespace engel::linalg
