#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isogenix/error.hpp"

namespace isogenix {

class FieldContext;
using FieldRef = std::shared_ptr<const FieldContext>;

/// The prime field F_p for a runtime-chosen multiprecision prime p >= 5.
///
/// Residues are plain `mpz_class` values kept in canonical form [0, p). The
/// raw-residue methods below are the arithmetic every higher layer is built
/// on; they assume canonical inputs and always return canonical outputs.
/// A context never changes after construction, so it can be shared freely
/// between threads.
class FieldContext {
 public:
  /// Validates p (probabilistic primality, error below 2^-100) and builds the context.
  static FieldRef make(const mpz_class& p);
  static FieldRef make(std::string_view decimal);

  const mpz_class& modulus() const noexcept { return p_; }
  std::size_t bits() const noexcept { return bits_; }
  std::string to_string() const { return p_.get_str(); }

  /// Contexts are interchangeable iff their moduli agree.
  bool same_as(const FieldContext& other) const noexcept {
    return this == &other || p_ == other.p_;
  }

  // -- raw residues -------------------------------------------------------
  mpz_class reduce(const mpz_class& v) const;
  void reduce_in_place(mpz_class& v) const;
  mpz_class from_long(long v) const;
  mpz_class parse(std::string_view decimal) const;

  void add(mpz_class& r, const mpz_class& a, const mpz_class& b) const;
  void sub(mpz_class& r, const mpz_class& a, const mpz_class& b) const;
  void neg(mpz_class& r, const mpz_class& a) const;
  void mul(mpz_class& r, const mpz_class& a, const mpz_class& b) const;
  void mul_ui(mpz_class& r, const mpz_class& a, unsigned long k) const;
  mpz_class mul(const mpz_class& a, const mpz_class& b) const;
  mpz_class inverse(const mpz_class& a) const;
  mpz_class pow(const mpz_class& a, const mpz_class& e) const;

  /// Inverse of the small integer k; the one gate for every "2,...,m are
  /// units" requirement. Throws NotAUnit when p divides k.
  mpz_class inv_small(unsigned long k) const;
  /// Inverses of 1..m (index 0 holds 0). Throws NotAUnit when m >= p.
  std::vector<mpz_class> small_inverses(std::size_t m) const;
  /// Fails with CharacteristicTooSmall unless 1..m are all units, i.e. p > m.
  void require_units_upto(unsigned long m, std::string_view what) const;

  bool is_square(const mpz_class& a) const;
  /// Square roots {r, p-r} with r <= p-r; nullopt for non-residues.
  std::optional<std::pair<mpz_class, mpz_class>> sqrt(const mpz_class& a) const;

 private:
  struct Token {};

 public:
  FieldContext(Token, mpz_class p);

 private:
  mpz_class p_;
  std::size_t bits_;
};

/// Context-carrying element of F_p. This is the value type of the public API;
/// bulk arithmetic inside polynomials and series works on raw residues.
class FieldElement {
 public:
  FieldElement(FieldRef field, mpz_class value);
  FieldElement(FieldRef field, long value);
  FieldElement(FieldRef field, int value) : FieldElement(std::move(field), static_cast<long>(value)) {}
  FieldElement(FieldRef field, std::string_view decimal);

  const FieldRef& field() const noexcept { return field_; }
  const mpz_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  std::string to_string() const { return value_.get_str(); }

  FieldElement inverse() const;
  FieldElement pow(const mpz_class& e) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  void check_same(const FieldElement& o) const;

  FieldRef field_;
  mpz_class value_;
};

FieldRef make_field(const mpz_class& p);
FieldRef make_field(std::string_view decimal);

enum class FieldOp { Add, Sub, Mul, Div };
FieldElement arith(const FieldElement& a, const FieldElement& b, FieldOp op);

FieldElement inv_small(unsigned long k, const FieldRef& field);

/// {r, p-r} with r <= p-r, {0, 0} for zero, nullopt for a non-residue.
std::optional<std::pair<FieldElement, FieldElement>> field_sqrt(const FieldElement& a);

/// Montgomery's simultaneous inversion: one field inversion plus O(n)
/// multiplications. A zero entry raises DivisionByZero carrying its index.
std::vector<FieldElement> batch_inverse(std::span<const FieldElement> values);
void batch_inverse_raw(const FieldContext& field, std::vector<mpz_class>& values);

/// Throws ContextMismatch when the two contexts have different moduli.
void require_same_field(const FieldContext& a, const FieldContext& b);

}  // namespace isogenix
