#include "engel/fields.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace engel::fields {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m over GF(p); m monic of degree >= 1.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t sub = lead * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

bool poly_divides(const Poly& div, Poly a, std::uint64_t p) {
  // div monic
  trim(a);
  const std::size_t dd = div.size() - 1;
  while (a.size() > dd) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - lead * div[i] % p) % p);
    trim(a);
  }
  return a.empty();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field::Field(const FieldSpec& spec) : spec_(spec) {
  switch (spec_.kind) {
    case Kind::rationals:
      size_ = 0;
      zero_.v = mpq_class(0);
      one_.v = mpq_class(1);
      break;
    case Kind::prime: {
      if (!is_prime(spec_.p)) throw NonPrimeModulus("p = " + std::to_string(spec_.p));
      if (spec_.p > 65536) throw BadParams("prime field larger than 2^16");
      size_ = spec_.p;
      zero_.v = std::uint32_t(0);
      one_.v = std::uint32_t(1);
      break;
    }
    case Kind::extension: {
      if (!is_prime(spec_.p)) throw NonPrimeModulus("p = " + std::to_string(spec_.p));
      if (spec_.k < 1) throw BadParams("extension degree must be >= 1");
      std::uint64_t q = 1;
      for (unsigned i = 0; i < spec_.k; ++i) {
        q *= spec_.p;
        if (q > 65536) throw BadParams("field larger than 2^16");
      }
      size_ = q;
      if (spec_.modulus.size() != spec_.k + 1 || spec_.modulus.back() % spec_.p != 1)
        throw BadParams("modulus must be monic of degree k");
      for (unsigned c : spec_.modulus)
        if (c >= spec_.p) throw BadParams("modulus coefficient out of range");
      // Irreducibility by exhaustive trial division; fine for p^k <= 2^16.
      const std::uint64_t p = spec_.p;
      for (unsigned deg = 1; 2 * deg <= spec_.k; ++deg) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          Poly div(deg + 1, 0);
          std::uint64_t t = idx;
          for (unsigned i = 0; i < deg; ++i) {
            div[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
          }
          div[deg] = 1;
          Poly mod(spec_.modulus.begin(), spec_.modulus.end());
          if (poly_divides(div, mod, p))
            throw ReducibleModulusPolynomial("modulus has a monic factor of degree " +
                                             std::to_string(deg));
        }
      }
      zero_.v = std::vector<std::uint32_t>(spec_.k, 0);
      Poly one(spec_.k, 0);
      one[0] = 1;
      one_.v = one;
      if (size_ <= 256) {
        mul_tab_.assign(size_ * size_, 0);
        for (std::uint32_t a = 0; a < size_; ++a)
          for (std::uint32_t b = 0; b < size_; ++b) {
            Poly pa(spec_.k), pb(spec_.k);
            std::uint32_t ta = a, tb = b;
            for (unsigned i = 0; i < spec_.k; ++i) {
              pa[i] = ta % spec_.p;
              ta /= spec_.p;
              pb[i] = tb % spec_.p;
              tb /= spec_.p;
            }
            Poly m(spec_.modulus.begin(), spec_.modulus.end());
            Poly c = poly_mul_mod(pa, pb, m, spec_.p);
            std::uint32_t code = 0, mul = 1;
            for (unsigned i = 0; i < spec_.k; ++i) {
              code += (i < c.size() ? c[i] : 0) * mul;
              mul *= spec_.p;
            }
            mul_tab_[std::size_t(a) * size_ + b] = code;
          }
        inv_tab_.assign(size_, 0);
        for (std::uint32_t a = 1; a < size_; ++a) {
          // a^(q-2)
          std::uint32_t r = 1, b = a;
          std::uint64_t e = size_ - 2;
          while (e) {
            if (e & 1) r = mul_tab_[std::size_t(r) * size_ + b];
            b = mul_tab_[std::size_t(b) * size_ + b];
            e >>= 1;
          }
          inv_tab_[a] = r;
        }
      }
      break;
    }
  }
}

FieldPtr Field::make(const FieldSpec& spec) {
  return FieldPtr(new Field(spec));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (spec_.kind) {
    case Kind::rationals:
      return {mpq_class(std::get<mpq_class>(a.v) + std::get<mpq_class>(b.v))};
    case Kind::prime:
      return {std::uint32_t((std::uint64_t(std::get<std::uint32_t>(a.v)) +
                             std::get<std::uint32_t>(b.v)) %
                            spec_.p)};
    case Kind::extension: {
      const auto& x = std::get<std::vector<std::uint32_t>>(a.v);
      const auto& y = std::get<std::vector<std::uint32_t>>(b.v);
      std::vector<std::uint32_t> r(spec_.k);
      for (unsigned i = 0; i < spec_.k; ++i) r[i] = (x[i] + y[i]) % spec_.p;
      return {r};
    }
  }
  throw Error("Internal", "bad kind");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
  switch (spec_.kind) {
    case Kind::rationals:
      return {mpq_class(-std::get<mpq_class>(a.v))};
    case Kind::prime: {
      std::uint32_t x = std::get<std::uint32_t>(a.v);
      return {x == 0 ? x : spec_.p - x};
    }
    case Kind::extension: {
      auto r = std::get<std::vector<std::uint32_t>>(a.v);
      for (auto& c : r) c = c == 0 ? 0 : spec_.p - c;
      return {r};
    }
  }
  throw Error("Internal", "bad kind");
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (spec_.kind) {
    case Kind::rationals:
      return {mpq_class(std::get<mpq_class>(a.v) * std::get<mpq_class>(b.v))};
    case Kind::prime:
      return {std::uint32_t(std::uint64_t(std::get<std::uint32_t>(a.v)) *
                            std::get<std::uint32_t>(b.v) % spec_.p)};
    case Kind::extension:
      return {ext_mul(std::get<std::vector<std::uint32_t>>(a.v),
                      std::get<std::vector<std::uint32_t>>(b.v))};
  }
  throw Error("Internal", "bad kind");
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DivisionByZero("invert(0)");
  switch (spec_.kind) {
    case Kind::rationals:
      return {mpq_class(1 / std::get<mpq_class>(a.v))};
    case Kind::prime:
      return {std::uint32_t(mod_pow(std::get<std::uint32_t>(a.v), spec_.p - 2, spec_.p))};
    case Kind::extension:
      return {ext_inv(std::get<std::vector<std::uint32_t>>(a.v))};
  }
  throw Error("Internal", "bad kind");
}

bool Field::is_zero(const Scalar& a) const {
  switch (spec_.kind) {
    case Kind::rationals:
      return std::get<mpq_class>(a.v) == 0;
    case Kind::prime:
      return std::get<std::uint32_t>(a.v) == 0;
    case Kind::extension: {
      for (auto c : std::get<std::vector<std::uint32_t>>(a.v))
        if (c) return false;
      return true;
    }
  }
  throw Error("Internal", "bad kind");
}

Scalar Field::from_int(long n) const {
  switch (spec_.kind) {
    case Kind::rationals:
      return {mpq_class(n)};
    case Kind::prime: {
      long r = n % long(spec_.p);
      if (r < 0) r += spec_.p;
      return {std::uint32_t(r)};
    }
    case Kind::extension: {
      long r = n % long(spec_.p);
      if (r < 0) r += spec_.p;
      std::vector<std::uint32_t> c(spec_.k, 0);
      c[0] = std::uint32_t(r);
      return {c};
    }
  }
  throw Error("Internal", "bad kind");
}

std::vector<std::uint32_t> Field::ext_mul(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) const {
  if (!mul_tab_.empty()) return std::get<std::vector<std::uint32_t>>(decode(cmul(encode({a}), encode({b}))).v);
  Poly m(spec_.modulus.begin(), spec_.modulus.end());
  Poly c = poly_mul_mod(a, b, m, spec_.p);
  c.resize(spec_.k, 0);
  return c;
}

std::vector<std::uint32_t> Field::ext_inv(const std::vector<std::uint32_t>& a) const {
  // a^(q-2) by square-and-multiply.
  std::vector<std::uint32_t> r(spec_.k, 0);
  r[0] = 1;
  std::vector<std::uint32_t> b = a;
  std::uint64_t e = size_ - 2;
  while (e) {
    if (e & 1) r = ext_mul(r, b);
    b = ext_mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::encode(const Scalar& a) const {
  switch (spec_.kind) {
    case Kind::prime:
      return std::get<std::uint32_t>(a.v);
    case Kind::extension: {
      const auto& c = std::get<std::vector<std::uint32_t>>(a.v);
      std::uint32_t code = 0, mul = 1;
      for (unsigned i = 0; i < spec_.k; ++i) {
        code += c[i] * mul;
        mul *= spec_.p;
      }
      return code;
    }
    default:
      throw Error("Internal", "encode on infinite field");
  }
}

Scalar Field::decode(std::uint32_t code) const {
  switch (spec_.kind) {
    case Kind::prime:
      return {code};
    case Kind::extension: {
      std::vector<std::uint32_t> c(spec_.k);
      for (unsigned i = 0; i < spec_.k; ++i) {
        c[i] = code % spec_.p;
        code /= spec_.p;
      }
      return {c};
    }
    default:
      throw Error("Internal", "decode on infinite field");
  }
}

std::uint32_t Field::cadd(std::uint32_t a, std::uint32_t b) const {
  if (spec_.kind == Kind::prime) return (a + b) % spec_.p;
  // coefficientwise mod p in base-p digits
  std::uint32_t r = 0, mul = 1;
  for (unsigned i = 0; i < spec_.k; ++i) {
    r += ((a % spec_.p + b % spec_.p) % spec_.p) * mul;
    a /= spec_.p;
    b /= spec_.p;
    mul *= spec_.p;
  }
  return r;
}

std::uint32_t Field::csub(std::uint32_t a, std::uint32_t b) const { return cadd(a, cneg(b)); }

std::uint32_t Field::cneg(std::uint32_t a) const {
  if (spec_.kind == Kind::prime) return a == 0 ? 0 : spec_.p - a;
  std::uint32_t r = 0, mul = 1;
  for (unsigned i = 0; i < spec_.k; ++i) {
    std::uint32_t d = a % spec_.p;
    r += (d == 0 ? 0 : spec_.p - d) * mul;
    a /= spec_.p;
    mul *= spec_.p;
  }
  return r;
}

std::uint32_t Field::cmul(std::uint32_t a, std::uint32_t b) const {
  if (spec_.kind == Kind::prime) return std::uint32_t(std::uint64_t(a) * b % spec_.p);
  if (!mul_tab_.empty()) return mul_tab_[std::size_t(a) * size_ + b];
  Poly pa(spec_.k), pb(spec_.k);
  for (unsigned i = 0; i < spec_.k; ++i) {
    pa[i] = a % spec_.p;
    a /= spec_.p;
    pb[i] = b % spec_.p;
    b /= spec_.p;
  }
  Poly m(spec_.modulus.begin(), spec_.modulus.end());
  Poly c = poly_mul_mod(pa, pb, m, spec_.p);
  std::uint32_t code = 0, mul = 1;
  for (unsigned i = 0; i < spec_.k; ++i) {
    code += (i < c.size() ? c[i] : 0) * mul;
    mul *= spec_.p;
  }
  return code;
}

std::uint32_t Field::cinv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero("invert(0)");
  if (spec_.kind == Kind::prime) return std::uint32_t(mod_pow(a, spec_.p - 2, spec_.p));
  if (!inv_tab_.empty()) return inv_tab_[a];
  return encode(inv(decode(a)));
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Field::parse(const std::string& raw) const {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw SyntaxError("empty scalar text");
  switch (spec_.kind) {
    case Kind::rationals: {
      std::string body = text;
      bool negat = false;
      if (body[0] == '+' || body[0] == '-') {
        negat = body[0] == '-';
        body = body.substr(1);
      }
      auto slash = body.find('/');
      std::string num = slash == std::string::npos ? body : body.substr(0, slash);
      std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
      if (!all_digits(num) || !all_digits(den)) throw SyntaxError("bad rational: " + raw);
      mpz_class n(num), d(den);
      if (d == 0) throw SyntaxError("zero denominator: " + raw);
      mpq_class q(n, d);
      q.canonicalize();
      if (negat) q = -q;
      return {q};
    }
    case Kind::prime: {
      std::string body = text;
      bool negat = false;
      if (body[0] == '+' || body[0] == '-') {
        negat = body[0] == '-';
        body = body.substr(1);
      }
      if (!all_digits(body)) throw SyntaxError("bad prime-field scalar: " + raw);
      mpz_class n(body);
      mpz_class r = n % spec_.p;
      std::uint32_t u = std::uint32_t(r.get_ui());
      if (negat && u != 0) u = spec_.p - u;
      return {u};
    }
    case Kind::extension: {
      if (text.front() != '[' || text.back() != ']')
        throw SyntaxError("extension scalar must be [c0,...]: " + raw);
      std::vector<std::uint32_t> c;
      std::string body = text.substr(1, text.size() - 2);
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!all_digits(item)) throw SyntaxError("bad coefficient: " + raw);
        c.push_back(std::uint32_t(mpz_class(mpz_class(item) % spec_.p).get_ui()));
      }
      if (c.size() > spec_.k) throw ValueOutOfField("too many coefficients: " + raw);
      c.resize(spec_.k, 0);
      return {c};
    }
  }
  throw Error("Internal", "bad kind");
}

std::string Field::format(const Scalar& a) const {
  switch (spec_.kind) {
    case Kind::rationals: {
      const auto& q = std::get<mpq_class>(a.v);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case Kind::prime:
      return std::to_string(std::get<std::uint32_t>(a.v));
    case Kind::extension: {
      const auto& c = std::get<std::vector<std::uint32_t>>(a.v);
      std::string s = "[";
      for (unsigned i = 0; i < spec_.k; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
      }
      return s + "]";
    }
  }
  throw Error("Internal", "bad kind");
}

}  // namespace engel::fields
