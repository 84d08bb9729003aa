#pragma once

// Coefficient fields: the rationals Q and univariate rational functions Q(x)
// with d/dx as the derivation.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace dnull {

using Integer = mpz_class;
using Rational = mpq_class;

enum class FieldKind { Q, Qx };

std::string to_string(FieldKind kind);

/// Dense univariate polynomial over Q in the base variable x, lowest degree
/// first. Trailing zeros are never stored; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly x();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const Rational& s) const;
  UPoly derivative() const;
  UPoly monic() const;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd (zero iff both are zero).
  static UPoly gcd(UPoly a, UPoly b);

  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Reduced fraction num/den with monic denominator and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : den_(UPoly::constant(1)) {}
  RatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc derivative() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  UPoly num_;
  UPoly den_;
};

/// An element of Q or Q(x). Elements that happen to lie in Q are always held
/// as a plain rational, so arithmetic over Q never touches the function path.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Coeff(Rational v) : q_(std::move(v)) { q_.canonicalize(); }
  explicit Coeff(const RatFunc& f);
  /// The base variable x of Q(x).
  static Coeff x();

  bool is_zero() const { return !rf_ && sgn(q_) == 0; }
  bool is_one() const { return !rf_ && q_ == 1; }
  bool is_rational() const { return !rf_; }
  const Rational& rational() const { return q_; }
  RatFunc as_ratfunc() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  Coeff inverse() const;
  /// d/dx; zero on Q.
  Coeff derivative() const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Parseable text: rationals as `p` or `p/q`, functions as `(num)/(den)`.
  std::string to_string() const;

 private:
  static Coeff from_ratfunc(RatFunc f);
  Rational q_;
  std::shared_ptr<const RatFunc> rf_;
};

/// Deterministic total order on coefficients (no algebraic meaning).
int compare(const Coeff& a, const Coeff& b);

}  // namespace dnull
