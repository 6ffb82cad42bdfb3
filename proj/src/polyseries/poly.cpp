#include "isogenix/poly.hpp"

#include <algorithm>

namespace isogenix {

Polynomial::Polynomial(FieldRef field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldRef field, Coeffs raw) : field_(std::move(field)), c_(std::move(raw)) {
  detail::trim(c_);
}

Polynomial::Polynomial(FieldRef field, std::span<const FieldElement> coeffs) : field_(std::move(field)) {
  c_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require_same_field(*field_, *c.field());
    c_.push_back(c.value());
  }
  detail::trim(c_);
}

Polynomial Polynomial::from_longs(FieldRef field, std::initializer_list<long> coeffs) {
  Coeffs raw;
  raw.reserve(coeffs.size());
  for (long v : coeffs) raw.push_back(field->from_long(v));
  return Polynomial(std::move(field), std::move(raw));
}

Polynomial Polynomial::from_strings(FieldRef field, const std::vector<std::string>& coeffs) {
  Coeffs raw;
  raw.reserve(coeffs.size());
  for (const auto& s : coeffs) raw.push_back(field->parse(s));
  return Polynomial(std::move(field), std::move(raw));
}

Polynomial Polynomial::monomial(FieldRef field, std::size_t degree) {
  Coeffs raw(degree + 1);
  raw[degree] = 1;
  return Polynomial(std::move(field), std::move(raw));
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return FieldElement(field_, i < c_.size() ? c_[i] : mpz_class(0));
}

FieldElement Polynomial::leading() const {
  if (c_.empty()) return FieldElement(field_, 0L);
  return FieldElement(field_, c_.back());
}

std::vector<FieldElement> Polynomial::coefficients() const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.emplace_back(field_, c);
  return out;
}

std::vector<std::string> Polynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.get_str());
  return out;
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  require_same_field(*field_, *x.field());
  return FieldElement(field_, detail::eval(*field_, c_, x.value()));
}

Polynomial Polynomial::derivative() const { return Polynomial(field_, detail::derivative(*field_, c_)); }

Polynomial Polynomial::monic() const {
  if (c_.empty()) throw Error(Errc::DivisionByZero, "zero polynomial has no monic associate");
  if (c_.back() == 1) return *this;
  mpz_class inv = field_->inverse(c_.back());
  Coeffs r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) field_->mul(r[i], c_[i], inv);
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  require_same_field(*field_, *c.field());
  Coeffs r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) field_->mul(r[i], c_[i], c.value());
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::reversed(std::size_t n) const {
  if (degree() > static_cast<long>(n)) throw Error(Errc::InvalidArgument, "reversal length below degree");
  Coeffs r(n + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return Polynomial(field_, std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(*a.field_, *b.field_);
  const FieldContext& F = *a.field_;
  Coeffs r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.c_.size() && i < b.c_.size()) {
      F.add(r[i], a.c_[i], b.c_[i]);
    } else {
      r[i] = i < a.c_.size() ? a.c_[i] : b.c_[i];
    }
  }
  return Polynomial(a.field_, std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(*a.field_, *b.field_);
  const FieldContext& F = *a.field_;
  Coeffs r(std::max(a.c_.size(), b.c_.size()));
  const mpz_class zero;
  for (std::size_t i = 0; i < r.size(); ++i) {
    F.sub(r[i], i < a.c_.size() ? a.c_[i] : zero, i < b.c_.size() ? b.c_[i] : zero);
  }
  return Polynomial(a.field_, std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, MulStrategy strategy) {
  require_same_field(*a.field(), *b.field());
  return Polynomial(a.field(), detail::mul(*a.field(), a.raw(), b.raw(), strategy));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(*a.field(), *b.field());
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  Coeffs q, r;
  detail::divmod(*a.field(), a.raw(), b.raw(), q, r);
  return {Polynomial(a.field(), std::move(q)), Polynomial(a.field(), std::move(r))};
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::InexactDivision, "nonzero remainder of degree " + std::to_string(r.degree()));
  return q;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  require_same_field(*a.field(), *b.field());
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Polynomial poly_from_roots(const FieldRef& field, std::span<const FieldElement> roots) {
  Coeffs raw;
  raw.reserve(roots.size());
  for (const auto& r : roots) {
    require_same_field(*field, *r.field());
    raw.push_back(r.value());
  }
  return Polynomial(field, detail::from_roots(*field, raw));
}

RationalFunction::RationalFunction(Coprime, Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_field(*num_.field(), *den_.field());
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
  if (!den_.is_monic()) {
    FieldElement inv = den_.leading().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : RationalFunction(Coprime{}, std::move(numerator), std::move(denominator)) {
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_exact_div(num_, g);
    den_ = poly_exact_div(den_, g);
    *this = RationalFunction(Coprime{}, std::move(num_), std::move(den_));
  }
}

RationalFunction RationalFunction::from_coprime(Polynomial numerator, Polynomial denominator) {
  return RationalFunction(Coprime{}, std::move(numerator), std::move(denominator));
}

}  // namespace isogenix
