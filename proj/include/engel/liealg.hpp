#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "engel/fields.hpp"
#include "engel/linalg.hpp"
#include "engel/poly.hpp"
#include "engel/report.hpp"
#include "engel/words.hpp"

namespace engel::lie {

using fields::Field;
using fields::FieldPtr;
using fields::Scalar;
using linalg::Mat;
using linalg::Subspace;
using linalg::Vec;

class LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;

// Finite dimensional Lie algebra given by structure constants. Antisymmetry
// and the Jacobi identity are verified on all basis triples at construction.
class LieAlgebra {
 public:
  // tensor: dense d*d*d, entry (i*d + j)*d + k = coefficient of basis k in
  // [b_i, b_j].
  static LiePtr make(FieldPtr field, std::size_t dim, const std::vector<Scalar>& tensor,
                     std::vector<std::string> names = {});

  const FieldPtr& field() const { return F_; }
  std::size_t dim() const { return d_; }
  const std::vector<std::string>& names() const { return names_; }

  // structure constant c[i][j][k]
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * d_ + j) * d_ + k];
  }
  const Mat& ad_basis(std::size_t i) const { return ad_[i]; }
  Mat ad(const Vec& t) const;  // (ad t) x = [t, x]

  Vec bracket(const Vec& u, const Vec& v) const;
  Vec zero_vec() const { return Vec(d_, F_->zero()); }
  Vec basis_vec(std::size_t i) const;
  Vec parse_vec(const std::string& text) const;  // comma-separated scalars
  std::string format_vec(const Vec& v) const;

  // Direct sum, with names suffixed per summand.
  static LiePtr direct_sum(const LiePtr& a, const LiePtr& b);

 private:
  LieAlgebra() = default;
  FieldPtr F_;
  std::size_t d_ = 0;
  std::vector<Scalar> tensor_;
  std::vector<std::string> names_;
  std::vector<Mat> ad_;
};

enum class SeriesKind { derived, lower_central };

// Strictly decreasing chain starting at L (or `within`) until stabilization.
std::vector<Subspace> series(const LieAlgebra& L, SeriesKind kind,
                             const std::optional<Subspace>& within = std::nullopt);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent_algebra(const LieAlgebra& L);
// Number of steps of the derived series of `s` until 0; throws if not solvable.
unsigned derived_length(const LieAlgebra& L, const Subspace& s);

// Characteristic-zero radical via the Killing-perpendicular of [L,L];
// self-checked (ideal, solvable, semisimple quotient).
Subspace solvable_radical(const LieAlgebra& L);
// Characteristic-zero nilradical {x in R : ad x nilpotent}; self-checked.
Subspace nilradical(const LieAlgebra& L);
Subspace ideal_generated(const LieAlgebra& L, const Vec& y);

// Quotient L/I by an ideal, with the induced bracket (used for self-checks).
LiePtr quotient_algebra(const LieAlgebra& L, const Subspace& ideal);

enum class EngelKind { e, v, w, strict, total };
EngelKind engel_kind_by_name(const std::string& name);
std::string engel_kind_name(EngelKind k);

struct EngelOptions {
  int max_n = 50;                       // w-kind negative-direction bound
  std::uint64_t enum_cap = 10'000'000;  // finite-field enumeration cap
  std::size_t grid_budget = 4096;       // cheap witness pre-scan budget
  bool parallel = true;
};

struct EngelVerdict {
  EngelKind kind;
  enum class Outcome { engel, not_engel, undetermined } outcome;
  int n = 0;  // least witnessing n for `engel`; max iterations for undetermined
  std::optional<Vec> witness;
  std::string certificate;
  std::uint64_t iterations = 0;
};

EngelVerdict engel_test(const LieAlgebra& L, const Vec& y, EngelKind kind,
                        const EngelOptions& opts = {});

// Numeric evaluation of a Lie sequence term on concrete vectors.
Vec lie_eval(const LieAlgebra& L, words::SeqId seq, int n, const Vec& x, const Vec& y,
             const std::optional<Vec>& z = std::nullopt);

// Polynomial-coordinate vectors, for the symbolic routes.
using PolyVec = std::vector<poly::MultiPoly>;
PolyVec poly_bracket(const LieAlgebra& L, const PolyVec& u, const PolyVec& v);
bool poly_vec_zero(const PolyVec& v);
// Coordinates of a fully symbolic x (variables 0..d-1 of an nvars-variable ring).
PolyVec symbolic_vector(const LieAlgebra& L, std::size_t nvars, std::size_t offset);
PolyVec embed_vector(const LieAlgebra& L, std::size_t nvars, const Vec& v);
// Symbolic sequence iterate; x/y entries may mix variables and constants.
PolyVec symbolic_seq_term(const LieAlgebra& L, words::SeqId seq, int n, const PolyVec& x,
                          const PolyVec& y);

// Is u_n(x,y) == 0 an identity in L (seq in {v-lie, w-lie})? Symbolic over
// char 0; streamed exhaustive scan over finite fields (early witness exit;
// refuses to certify `holds` beyond the enumeration cap).
rpt::Report identity_check(const LieAlgebra& L, words::SeqId seq, int n,
                           const EngelOptions& opts = {});

struct EngelSetResult {
  std::vector<std::uint8_t> member;  // indexed by vector code
  std::uint64_t count = 0;
  rpt::Report report;
};
// Exact Engel-element set over a finite field (enumeration cap applies).
EngelSetResult engel_set(const LieAlgebra& L, EngelKind kind, const EngelOptions& opts = {});

// Vector <-> code bijection over finite fields: code = sum_i enc(v_i) q^i.
std::uint64_t vec_space_size(const LieAlgebra& L);
Vec decode_vec(const LieAlgebra& L, std::uint64_t code);
std::uint64_t encode_vec(const LieAlgebra& L, const Vec& v);

// Deterministic integer grid (ordered by L-infinity radius, then support
// size, then support positions, then zigzag values 1,-1,2,-2,...).
// Calls fn for each point until it returns true; `budget` of 0 = unbounded.
bool for_grid_points(std::size_t d, std::size_t budget,
                     const std::function<bool(const std::vector<long>&)>& fn);

}  // namespace engel::lie
