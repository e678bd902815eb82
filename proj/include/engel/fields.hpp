#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "engel/errors.hpp"

namespace engel::fields {

enum class Kind { rationals, prime, extension };

// Description of a field: Q, GF(p), or GF(p^k) = GF(p)[t]/(modulus).
// The modulus is little-endian with k+1 coefficients and must be monic and
// irreducible; both are checked at construction of the Field.
struct FieldSpec {
  Kind kind = Kind::rationals;
  unsigned p = 0;
  unsigned k = 1;
  std::vector<unsigned> modulus;  // extension only

  static FieldSpec Q() { return {Kind::rationals, 0, 1, {}}; }
  static FieldSpec GF(unsigned p) { return {Kind::prime, p, 1, {}}; }
  static FieldSpec GFext(unsigned p, unsigned k, std::vector<unsigned> mod) {
    return {Kind::extension, p, k, std::move(mod)};
  }
  bool operator==(const FieldSpec&) const = default;
};

// Exact field element. Payload by kind:
//   rationals  -> mpq_class (canonical: positive denominator, reduced)
//   prime      -> residue in [0,p)
//   extension  -> k coefficients in [0,p), little-endian
struct Scalar {
  std::variant<mpq_class, std::uint32_t, std::vector<std::uint32_t>> v;
  bool operator==(const Scalar&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable field handle. Safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  Kind kind() const { return spec_.kind; }
  unsigned characteristic() const { return spec_.kind == Kind::rationals ? 0 : spec_.p; }
  // Number of elements; 0 means infinite.
  std::uint64_t size() const { return size_; }
  bool finite() const { return size_ != 0; }

  const Scalar& zero() const { return zero_; }
  const Scalar& one() const { return one_; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws DivisionByZero on 0
  bool is_zero(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  Scalar from_int(long n) const;
  Scalar parse(const std::string& text) const;
  std::string format(const Scalar& a) const;

  // Enumeration support for finite fields: a bijection [0, size) <-> elements.
  // For prime fields the code is the residue; for extensions, sum c_i p^i.
  std::uint32_t encode(const Scalar& a) const;
  Scalar decode(std::uint32_t code) const;

  // Arithmetic directly on codes (finite fields only); the hot path for
  // exhaustive scans. Prime fields compute modularly, small extension fields
  // (size <= 256) use tables, larger ones fall back to polynomial arithmetic.
  std::uint32_t cadd(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t csub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t cmul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t cneg(std::uint32_t a) const;
  std::uint32_t cinv(std::uint32_t a) const;

 private:
  explicit Field(const FieldSpec& spec);

  std::vector<std::uint32_t> ext_mul(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) const;
  std::vector<std::uint32_t> ext_inv(const std::vector<std::uint32_t>& a) const;

  FieldSpec spec_;
  std::uint64_t size_ = 0;
  Scalar zero_, one_;
  std::vector<std::uint32_t> mul_tab_, inv_tab_;  // small extension fields
};

// Free-function convenience wrapper around Field::make.
inline FieldPtr make_field(const FieldSpec& spec) { return Field::make(spec); }

bool is_prime(std::uint64_t n);

}  // namespace engel::fields
