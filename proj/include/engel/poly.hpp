#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "engel/fields.hpp"

namespace engel::poly {

using fields::FieldPtr;
using fields::Scalar;

using Monomial = std::vector<std::uint32_t>;  // exponent vector

// Graded lexicographic order: total degree first, then lex.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Default cap on stored monomials; guards symbolic blowups (w-lie doubles its
// degree every step).
constexpr std::size_t kMonomialCap = 5'000'000;

// Sparse multivariate polynomial over an exact field. No zero coefficients
// are stored; the term map is kept in graded-lex order.
class MultiPoly {
 public:
  MultiPoly(FieldPtr field, std::size_t nvars);
  static MultiPoly zero(FieldPtr field, std::size_t nvars) { return MultiPoly(field, nvars); }
  static MultiPoly constant(FieldPtr field, std::size_t nvars, const Scalar& c);
  static MultiPoly variable(FieldPtr field, std::size_t nvars, std::size_t index);

  const FieldPtr& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  bool is_zero() const { return terms_.empty(); }

  // Structural equality is semantic equality: no zero coefficients are
  // stored and the term order is canonical.
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly negated() const;

  Scalar eval(const std::vector<Scalar>& point) const;
  std::string format(const std::vector<std::string>& names = {}) const;

  const std::map<Monomial, Scalar, GradedLex>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Scalar& c);

 private:
  void check_same(const MultiPoly& o) const;
  FieldPtr field_;
  std::size_t nvars_;
  std::map<Monomial, Scalar, GradedLex> terms_;
};

inline bool is_identically_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace engel::poly
