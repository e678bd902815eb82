#include "engel/poly.hpp"

#include <numeric>
#include <sstream>

namespace engel::poly {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t(0));
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t(0));
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(FieldPtr field, std::size_t nvars)
    : field_(std::move(field)), nvars_(nvars) {}

MultiPoly MultiPoly::constant(FieldPtr field, std::size_t nvars, const Scalar& c) {
  MultiPoly p(field, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(FieldPtr field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ArityMismatch("variable index out of range");
  MultiPoly p(std::move(field), nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, p.field_->one());
  return p;
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || field_->spec() != o.field_->spec())
    throw ArityMismatch("polynomials over different rings");
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (field_->is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    if (terms_.size() > kMonomialCap)
      throw SymbolicBlowup("polynomial exceeds monomial cap");
  } else {
    Scalar s = field_->add(it->second, c);
    if (field_->is_zero(s))
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t dm = std::accumulate(m.begin(), m.end(), std::uint32_t(0));
    if (dm > d) d = dm;
  }
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_same(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, field_->neg(c));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same(o);
  MultiPoly r(field_, nvars_);
  Monomial m(nvars_, 0);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, field_->mul(ca, cb));
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(field_, nvars_);
  if (field_->is_zero(c)) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, field_->mul(a, c));
  return r;
}

MultiPoly MultiPoly::negated() const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, field_->neg(a));
  return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw ArityMismatch("evaluation point has wrong arity");
  Scalar acc = field_->zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t = field_->mul(t, point[i]);
    acc = field_->add(acc, t);
  }
  return acc;
}

std::string MultiPoly::format(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest degree first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << field_->format(it->second);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

}  // namespace engel::poly
