#include "isogenix/series.hpp"

#include <algorithm>

#include "isogenix/detail/calculus.hpp"

namespace isogenix {

namespace {

void need_precision(const Series& f, std::size_t n, const char* what) {
  if (f.precision() < n) {
    throw Error(Errc::InsufficientPrecision, std::string(what) + " needs " + std::to_string(n) +
                                                 " terms, input carries " + std::to_string(f.precision()));
  }
}

std::string str(std::size_t n) { return std::to_string(n); }

}  // namespace

// -- Series -------------------------------------------------------------------

Series::Series(FieldRef field, Coeffs raw, long valuation)
    : field_(std::move(field)), c_(std::move(raw)), v_(valuation) {
  if (c_.empty()) throw Error(Errc::InvalidArgument, "a series carries at least one term");
}

Series::Series(FieldRef field, std::span<const FieldElement> coeffs, long valuation)
    : field_(std::move(field)), v_(valuation) {
  if (coeffs.empty()) throw Error(Errc::InvalidArgument, "a series carries at least one term");
  c_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require_same_field(*field_, *c.field());
    c_.push_back(c.value());
  }
}

Series Series::zero(FieldRef field, std::size_t n, long valuation) {
  return Series(std::move(field), Coeffs(std::max<std::size_t>(n, 1)), valuation);
}

Series Series::one(FieldRef field, std::size_t n) {
  Coeffs c(std::max<std::size_t>(n, 1));
  c[0] = 1;
  return Series(std::move(field), std::move(c));
}

Series Series::from_longs(FieldRef field, std::initializer_list<long> coeffs, long valuation) {
  Coeffs raw;
  for (long v : coeffs) raw.push_back(field->from_long(v));
  return Series(std::move(field), std::move(raw), valuation);
}

Series Series::from_poly(const Polynomial& p, std::size_t n) {
  Coeffs c(std::max<std::size_t>(n, 1));
  for (std::size_t i = 0; i < n && i < p.size(); ++i) c[i] = p.raw()[i];
  return Series(p.field(), std::move(c));
}

FieldElement Series::coeff(std::size_t i) const { return FieldElement(field_, c_.at(i)); }

FieldElement Series::at(long k) const {
  if (k >= end()) {
    throw Error(Errc::InsufficientPrecision, "coefficient of z^" + std::to_string(k) + " is past the known range");
  }
  if (k < v_) return FieldElement(field_, 0L);
  return FieldElement(field_, c_[static_cast<std::size_t>(k - v_)]);
}

std::vector<FieldElement> Series::coefficients() const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.emplace_back(field_, c);
  return out;
}

Series Series::truncated(std::size_t n) const {
  need_precision(*this, n, "truncation");
  return Series(field_, Coeffs(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::max<std::size_t>(n, 1))),
                v_);
}

Series Series::shifted(long k) const { return Series(field_, c_, v_ + k); }

Coeffs Series::dense(std::size_t n, const char* what) const {
  if (end() < static_cast<long>(n)) {
    throw Error(Errc::InsufficientPrecision,
                std::string(what) + " needs the series mod z^" + str(n) + ", known only mod z^" + std::to_string(end()));
  }
  Coeffs out(n);
  for (long k = v_; k < end(); ++k) {
    const mpz_class& c = c_[static_cast<std::size_t>(k - v_)];
    if (k < 0) {
      if (sgn(c) != 0) throw Error(Errc::InvalidArgument, std::string(what) + " expects an ordinary power series");
    } else if (k < static_cast<long>(n)) {
      out[static_cast<std::size_t>(k)] = c;
    }
  }
  return out;
}

Polynomial Series::to_polynomial() const { return Polynomial(field_, dense(static_cast<std::size_t>(std::max(0L, end())), "to_polynomial")); }

Series operator+(const Series& a, const Series& b) {
  require_same_field(*a.field_, *b.field_);
  const long v = std::min(a.v_, b.v_);
  const long e = std::min(a.end(), b.end());
  if (e <= v) throw Error(Errc::InsufficientPrecision, "sum has no known terms");
  Coeffs r(static_cast<std::size_t>(e - v));
  for (long k = v; k < e; ++k) {
    mpz_class& out = r[static_cast<std::size_t>(k - v)];
    if (k >= a.v_) a.field_->add(out, out, a.c_[static_cast<std::size_t>(k - a.v_)]);
    if (k >= b.v_) a.field_->add(out, out, b.c_[static_cast<std::size_t>(k - b.v_)]);
  }
  return Series(a.field_, std::move(r), v);
}

Series operator-(const Series& a, const Series& b) {
  Coeffs nb(b.c_.size());
  for (std::size_t i = 0; i < nb.size(); ++i) b.field_->neg(nb[i], b.c_[i]);
  return a + Series(b.field_, std::move(nb), b.v_);
}

Series operator*(const Series& a, const Series& b) {
  require_same_field(*a.field_, *b.field_);
  const std::size_t n = std::min(a.precision(), b.precision());
  return Series(a.field_, detail::mullow(*a.field_, a.c_, b.c_, n), a.v_ + b.v_);
}

bool operator==(const Series& a, const Series& b) {
  return a.field_->same_as(*b.field_) && a.v_ == b.v_ && a.c_ == b.c_;
}

// -- Newton operations -----------------------------------------------------------

Series series_reciprocal(const Series& f, std::size_t n) {
  need_precision(f, n, "reciprocal");
  if (sgn(f.raw()[0]) == 0) throw Error(Errc::ZeroConstantTerm, "reciprocal of a series with zero leading term");
  if (n == 0) n = 1;
  return Series(f.field(), detail::inverse(*f.field(), f.raw(), n), -f.valuation());
}

Series series_log(const Series& g, std::size_t n) {
  const FieldContext& F = *g.field();
  Coeffs c = g.dense(std::max<std::size_t>(n, 1), "log");
  if (c[0] != 1) throw Error(Errc::ConstantTermNotOne, "log needs g(0) = 1");
  F.require_units_upto(n > 0 ? n - 1 : 0, "log");
  if (n == 0) n = 1;
  auto inv = F.small_inverses(n - 1);
  return Series(g.field(), detail::log(F, c, n, inv));
}

Series series_exp(const Series& f, std::size_t n) {
  const FieldContext& F = *f.field();
  Coeffs c = f.dense(std::max<std::size_t>(n, 1), "exp");
  if (sgn(c[0]) != 0) throw Error(Errc::NonzeroConstantTerm, "exp needs f(0) = 0");
  F.require_units_upto(n > 0 ? n - 1 : 0, "exp");
  if (n == 0) n = 1;
  auto inv = F.small_inverses(n - 1);
  return Series(f.field(), detail::exp(F, c, n, inv));
}

Series derivative(const Series& f) {
  const FieldContext& F = *f.field();
  const long v = f.valuation();
  if (v == 0) {
    if (f.precision() == 1) throw Error(Errc::InsufficientPrecision, "derivative of a series known mod z");
    return Series(f.field(), detail::derivative(F, f.raw()));
  }
  Coeffs d(f.precision());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const long e = v + static_cast<long>(i);
    F.mul(d[i], f.raw()[i], F.from_long(e));
  }
  return Series(f.field(), std::move(d), v - 1);
}

Series antiderivative(const Series& f) {
  const FieldContext& F = *f.field();
  if (f.valuation() < 0) throw Error(Errc::InvalidArgument, "antiderivative of a Laurent series");
  const std::size_t top = static_cast<std::size_t>(f.end());
  F.require_units_upto(top, "antiderivative");
  auto inv = F.small_inverses(top);
  Coeffs c = f.dense(top, "antiderivative");
  return Series(f.field(), detail::integral(F, c, inv));
}

Series solve_linear_ode(const Series& a, const Series& b, const Series& c, const FieldElement& alpha, std::size_t n) {
  const FieldRef& field = a.field();
  require_same_field(*field, *b.field());
  require_same_field(*field, *c.field());
  require_same_field(*field, *alpha.field());
  const FieldContext& F = *field;
  if (n <= 1) return Series(field, Coeffs{alpha.value()});
  Coeffs ar = a.dense(n - 1, "linear ODE coefficient a");
  Coeffs br = b.dense(n - 1, "linear ODE coefficient b");
  Coeffs cr = c.dense(n - 1, "linear ODE right-hand side");
  if (sgn(ar[0]) == 0) throw Error(Errc::SingularAtOrigin, "a(0) = 0");
  F.require_units_upto(n - 1, "linear ODE");
  auto inv = F.small_inverses(n - 1);
  return Series(field, detail::solve_linear_ode(F, ar, br, cr, alpha.value(), n, inv));
}

Series solve_nonlinear_ode_sq(std::span<const Series> G, const FieldElement& alpha, const FieldElement& beta,
                              std::size_t n) {
  const FieldRef& field = alpha.field();
  require_same_field(*field, *beta.field());
  const FieldContext& F = *field;
  const std::size_t w = n > 1 ? n - 1 : 1;
  std::vector<Coeffs> raw;
  raw.reserve(G.size());
  for (const auto& g : G) {
    require_same_field(*field, *g.field());
    raw.push_back(g.dense(w, "nonlinear ODE coefficient"));
  }
  // G(0, alpha) by Horner on the constant terms.
  mpz_class g0 = 0;
  for (std::size_t j = raw.size(); j-- > 0;) {
    F.mul(g0, g0, alpha.value());
    F.add(g0, g0, raw[j][0]);
  }
  mpz_class b2;
  F.mul(b2, beta.value(), beta.value());
  if (b2 != g0) throw Error(Errc::InconsistentInitialConditions, "beta^2 != G(0, alpha)");
  if (beta.is_zero()) throw Error(Errc::ZeroInitialDerivative, "beta = 0 makes the linearized equation singular");
  if (n <= 1) return Series(field, Coeffs{alpha.value()});
  F.require_units_upto(n - 1, "nonlinear ODE");
  auto inv = F.small_inverses(n - 1);
  return Series(field, detail::solve_nonlinear_ode_sq(F, raw, alpha.value(), beta.value(), n, inv));
}

Series compose(const Series& f, const Series& g, std::size_t n) {
  require_same_field(*f.field(), *g.field());
  if (n == 0) n = 1;
  Coeffs fr = f.dense(n, "compose (outer)");
  Coeffs gr = g.dense(n, "compose (inner)");
  if (sgn(gr[0]) != 0) throw Error(Errc::NonzeroConstantTermInner, "inner series must vanish at 0");
  return Series(f.field(), detail::compose(*f.field(), fr, gr, n));
}

RationalFunction pade_reconstruct(const Series& f, std::size_t max_num_deg, std::size_t max_den_deg) {
  const std::size_t N = max_num_deg + max_den_deg + 1;
  Coeffs c = f.dense(N, "pade_reconstruct");
  if (f.valuation() >= 0 && static_cast<std::size_t>(f.end()) > N) c = f.dense(static_cast<std::size_t>(f.end()), "pade_reconstruct");
  auto [P, Q] = detail::pade(*f.field(), c, max_num_deg, max_den_deg);
  return RationalFunction::from_coprime(Polynomial(f.field(), std::move(P)), Polynomial(f.field(), std::move(Q)));
}

// -- power sums ---------------------------------------------------------------------

Polynomial power_sums_to_poly(const FieldRef& field, std::span<const FieldElement> power_sums) {
  const FieldContext& F = *field;
  const std::size_t n = power_sums.size();
  F.require_units_upto(n, "power_sums_to_poly");
  Coeffs ps;
  ps.reserve(n);
  for (const auto& x : power_sums) {
    require_same_field(F, *x.field());
    ps.push_back(x.value());
  }
  auto inv = F.small_inverses(n);
  return Polynomial(field, detail::power_sums_to_poly(F, ps, inv));
}

Polynomial power_sums_to_poly(std::span<const FieldElement> power_sums) {
  if (power_sums.empty()) throw Error(Errc::InvalidArgument, "empty power-sum list carries no field");
  return power_sums_to_poly(power_sums.front().field(), power_sums);
}

std::vector<FieldElement> poly_to_power_sums(const Polynomial& f, std::size_t n) {
  if (!f.is_monic()) throw Error(Errc::NotMonic, "power sums need a monic polynomial");
  f.field()->require_units_upto(n, "poly_to_power_sums");
  Coeffs ps = detail::poly_to_power_sums(*f.field(), f.raw(), n);
  std::vector<FieldElement> out;
  out.reserve(n);
  for (auto& x : ps) out.emplace_back(f.field(), std::move(x));
  return out;
}

}  // namespace isogenix
