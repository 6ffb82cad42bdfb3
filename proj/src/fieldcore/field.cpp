#include "isogenix/field.hpp"

#include <string>

namespace isogenix {

namespace {

// 50 rounds: composite acceptance probability below 4^-50 = 2^-100.
constexpr int kPrimalityReps = 50;

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(Errc::ParseError, "empty integer literal");
  std::size_t digits_from = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (digits_from == s.size()) throw Error(Errc::ParseError, "sign without digits");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(Errc::ParseError, "not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s = s.substr(1);
  return mpz_class(s, 10);
}

}  // namespace

FieldContext::FieldContext(Token, mpz_class p) : p_(std::move(p)), bits_(mpz_sizeinbase(p_.get_mpz_t(), 2)) {}

FieldRef FieldContext::make(const mpz_class& p) {
  if (p < 4) {
    throw Error(Errc::TooSmall, "characteristic must be a prime >= 5, got " + p.get_str());
  }
  if (mpz_probab_prime_p(p.get_mpz_t(), kPrimalityReps) == 0) {
    throw Error(Errc::NotPrime, p.get_str() + " is composite");
  }
  return std::make_shared<const FieldContext>(Token{}, p);
}

FieldRef FieldContext::make(std::string_view decimal) { return make(parse_integer(decimal)); }

mpz_class FieldContext::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
  return r;
}

void FieldContext::reduce_in_place(mpz_class& v) const {
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
}

mpz_class FieldContext::from_long(long v) const { return reduce(mpz_class(v)); }

mpz_class FieldContext::parse(std::string_view decimal) const { return reduce(parse_integer(decimal)); }

void FieldContext::add(mpz_class& r, const mpz_class& a, const mpz_class& b) const {
  mpz_add(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (mpz_cmp(r.get_mpz_t(), p_.get_mpz_t()) >= 0) mpz_sub(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
}

void FieldContext::sub(mpz_class& r, const mpz_class& a, const mpz_class& b) const {
  mpz_sub(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (mpz_sgn(r.get_mpz_t()) < 0) mpz_add(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
}

void FieldContext::neg(mpz_class& r, const mpz_class& a) const {
  if (mpz_sgn(a.get_mpz_t()) == 0) {
    r = 0;
  } else {
    mpz_sub(r.get_mpz_t(), p_.get_mpz_t(), a.get_mpz_t());
  }
}

void FieldContext::mul(mpz_class& r, const mpz_class& a, const mpz_class& b) const {
  mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_tdiv_r(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
}

void FieldContext::mul_ui(mpz_class& r, const mpz_class& a, unsigned long k) const {
  mpz_mul_ui(r.get_mpz_t(), a.get_mpz_t(), k);
  mpz_tdiv_r(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
}

mpz_class FieldContext::mul(const mpz_class& a, const mpz_class& b) const {
  mpz_class r;
  mul(r, a, b);
  return r;
}

mpz_class FieldContext::inverse(const mpz_class& a) const {
  mpz_class r;
  if (mpz_sgn(a.get_mpz_t()) == 0 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0) {
    throw Error(Errc::DivisionByZero, "inverse of zero in F_" + p_.get_str());
  }
  return r;
}

mpz_class FieldContext::pow(const mpz_class& a, const mpz_class& e) const {
  mpz_class r;
  if (e < 0) {
    mpz_class inv = inverse(a);
    mpz_class ne = -e;
    mpz_powm(r.get_mpz_t(), inv.get_mpz_t(), ne.get_mpz_t(), p_.get_mpz_t());
  } else {
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
  }
  return r;
}

mpz_class FieldContext::inv_small(unsigned long k) const {
  mpz_class kk(k);
  mpz_fdiv_r(kk.get_mpz_t(), kk.get_mpz_t(), p_.get_mpz_t());
  if (sgn(kk) == 0) throw Error(Errc::NotAUnit, std::to_string(k) + " is not a unit in F_" + p_.get_str());
  mpz_class r;
  mpz_invert(r.get_mpz_t(), kk.get_mpz_t(), p_.get_mpz_t());
  return r;
}

std::vector<mpz_class> FieldContext::small_inverses(std::size_t m) const {
  if (m >= 1 && mpz_cmp_ui(p_.get_mpz_t(), m) <= 0) {
    throw Error(Errc::NotAUnit, "integers up to " + std::to_string(m) + " are not all units in F_" + p_.get_str());
  }
  std::vector<mpz_class> inv(m + 1);
  if (m >= 1) inv[1] = 1;
  // inv(i) = -(p div i) * inv(p mod i), valid because p mod i < i.
  mpz_class q;
  for (std::size_t i = 2; i <= m; ++i) {
    unsigned long rem = mpz_fdiv_q_ui(q.get_mpz_t(), p_.get_mpz_t(), i);
    mul(inv[i], q, inv[rem]);
    neg(inv[i], inv[i]);
  }
  return inv;
}

void FieldContext::require_units_upto(unsigned long m, std::string_view what) const {
  if (m >= 1 && mpz_cmp_ui(p_.get_mpz_t(), m) <= 0) {
    throw Error(Errc::CharacteristicTooSmall, std::string(what) + " needs 1.." + std::to_string(m) +
                                                  " to be units, but p = " + p_.get_str());
  }
}

bool FieldContext::is_square(const mpz_class& a) const {
  return mpz_sgn(a.get_mpz_t()) == 0 || mpz_legendre(a.get_mpz_t(), p_.get_mpz_t()) == 1;
}

std::optional<std::pair<mpz_class, mpz_class>> FieldContext::sqrt(const mpz_class& a) const {
  if (mpz_sgn(a.get_mpz_t()) == 0) return std::make_pair(mpz_class(0), mpz_class(0));
  if (!is_square(a)) return std::nullopt;

  mpz_class root;
  if (mpz_fdiv_ui(p_.get_mpz_t(), 4) == 3) {
    mpz_class e = (p_ + 1) / 4;
    root = pow(a, e);
  } else {
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    mpz_class q = p_ - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p_.get_mpz_t()) != -1) ++z;
    mpz_class c = pow(z, q);
    mpz_class t = pow(a, q);
    mpz_class e = (q + 1) / 2;
    root = pow(a, e);
    unsigned long m = s;
    while (t != 1) {
      unsigned long i = 0;
      mpz_class t2 = t;
      while (t2 != 1) {
        mul(t2, t2, t2);
        ++i;
      }
      mpz_class b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) mul(b, b, b);
      m = i;
      mul(c, b, b);
      mul(t, t, c);
      mul(root, root, b);
    }
  }
  mpz_class other;
  neg(other, root);
  if (other < root) std::swap(root, other);
  return std::make_pair(root, other);
}

// -- FieldElement -----------------------------------------------------------

FieldElement::FieldElement(FieldRef field, mpz_class value) : field_(std::move(field)) {
  value_ = field_->reduce(value);
}

FieldElement::FieldElement(FieldRef field, long value) : field_(std::move(field)) {
  value_ = field_->from_long(value);
}

FieldElement::FieldElement(FieldRef field, std::string_view decimal) : field_(std::move(field)) {
  value_ = field_->parse(decimal);
}

void require_same_field(const FieldContext& a, const FieldContext& b) {
  if (!a.same_as(b)) {
    throw Error(Errc::ContextMismatch, "operands live in F_" + a.to_string() + " and F_" + b.to_string());
  }
}

void FieldElement::check_same(const FieldElement& o) const { require_same_field(*field_, *o.field_); }

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inverse(value_)); }

FieldElement FieldElement::pow(const mpz_class& e) const { return FieldElement(field_, field_->pow(value_, e)); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  field_->add(value_, value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  field_->sub(value_, value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  field_->mul(value_, value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  field_->mul(value_, value_, field_->inverse(o.value_));
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  field_->neg(r.value_, value_);
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

// -- free functions -----------------------------------------------------------

FieldRef make_field(const mpz_class& p) { return FieldContext::make(p); }
FieldRef make_field(std::string_view decimal) { return FieldContext::make(decimal); }

FieldElement arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw Error(Errc::InvalidArgument, "unknown field operation");
}

FieldElement inv_small(unsigned long k, const FieldRef& field) { return FieldElement(field, field->inv_small(k)); }

std::optional<std::pair<FieldElement, FieldElement>> field_sqrt(const FieldElement& a) {
  auto roots = a.field()->sqrt(a.value());
  if (!roots) return std::nullopt;
  return std::make_pair(FieldElement(a.field(), roots->first), FieldElement(a.field(), roots->second));
}

void batch_inverse_raw(const FieldContext& field, std::vector<mpz_class>& values) {
  const std::size_t n = values.size();
  if (n == 0) return;
  std::vector<mpz_class> prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(values[i]) == 0) throw Error(Errc::DivisionByZero, "zero entry at index " + std::to_string(i), i);
    if (i == 0) {
      prefix[0] = values[0];
    } else {
      field.mul(prefix[i], prefix[i - 1], values[i]);
    }
  }
  mpz_class acc = field.inverse(prefix[n - 1]);
  mpz_class tmp;
  for (std::size_t i = n; i-- > 0;) {
    if (i == 0) {
      values[0] = acc;
    } else {
      field.mul(tmp, acc, prefix[i - 1]);
      field.mul(acc, acc, values[i]);
      values[i] = tmp;
    }
  }
}

std::vector<FieldElement> batch_inverse(std::span<const FieldElement> values) {
  if (values.empty()) return {};
  const FieldRef& field = values.front().field();
  std::vector<mpz_class> raw;
  raw.reserve(values.size());
  for (const auto& v : values) {
    require_same_field(*field, *v.field());
    raw.push_back(v.value());
  }
  batch_inverse_raw(*field, raw);
  std::vector<FieldElement> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(field, std::move(r));
  return out;
}

}  // namespace isogenix
