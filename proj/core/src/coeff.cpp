#include "dnull/coeff.hpp"

#include <sstream>

#include "dnull/errors.hpp"

namespace dnull {

std::string to_string(FieldKind kind) { return kind == FieldKind::Q ? "Q" : "Q(x)"; }

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& c : r) c = -c;
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& c : r) c *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead());
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw UsageError("UPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo;
  const int db = b.degree();
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    Rational f = rem[k] * inv_lead;
    quo[k - db] = f;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.c_[i];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw UsageError("RatFunc: zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly::constant(1);
    return;
  }
  UPoly g = UPoly::gcd(num, den);
  UPoly q, r;
  UPoly::divmod(num, g, num_, r);
  UPoly::divmod(den, g, q, r);
  const Rational l = q.lead();
  num_ = num_.scaled(1 / l);
  den_ = q.scaled(1 / l);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw UsageError("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

// ---------------------------------------------------------------------------
// Coeff

Coeff::Coeff(const RatFunc& f) { *this = from_ratfunc(f); }

Coeff Coeff::from_ratfunc(RatFunc f) {
  Coeff c;
  if (f.is_rational()) {
    c.q_ = f.num().is_zero() ? Rational(0) : f.num().coeffs()[0] / f.den().coeffs()[0];
    c.q_.canonicalize();
  } else {
    c.rf_ = std::make_shared<const RatFunc>(std::move(f));
  }
  return c;
}

Coeff Coeff::x() { return from_ratfunc(RatFunc(UPoly::x(), UPoly::constant(1))); }

RatFunc Coeff::as_ratfunc() const {
  if (rf_) return *rf_;
  return RatFunc(UPoly::constant(q_), UPoly::constant(1));
}

Coeff Coeff::operator+(const Coeff& o) const {
  if (!rf_ && !o.rf_) return Coeff(Rational(q_ + o.q_));
  return from_ratfunc(as_ratfunc() + o.as_ratfunc());
}

Coeff Coeff::operator-(const Coeff& o) const {
  if (!rf_ && !o.rf_) return Coeff(Rational(q_ - o.q_));
  return from_ratfunc(as_ratfunc() - o.as_ratfunc());
}

Coeff Coeff::operator*(const Coeff& o) const {
  if (!rf_ && !o.rf_) return Coeff(Rational(q_ * o.q_));
  return from_ratfunc(as_ratfunc() * o.as_ratfunc());
}

Coeff Coeff::operator/(const Coeff& o) const {
  if (o.is_zero()) throw UsageError("Coeff: division by zero");
  if (!rf_ && !o.rf_) return Coeff(Rational(q_ / o.q_));
  return from_ratfunc(as_ratfunc() / o.as_ratfunc());
}

Coeff Coeff::operator-() const {
  if (!rf_) return Coeff(Rational(-q_));
  return from_ratfunc(-*rf_);
}

Coeff Coeff::inverse() const { return Coeff(1) / *this; }

Coeff Coeff::derivative() const {
  if (!rf_) return Coeff();
  return from_ratfunc(rf_->derivative());
}

bool Coeff::operator==(const Coeff& o) const {
  if (static_cast<bool>(rf_) != static_cast<bool>(o.rf_)) return false;
  if (!rf_) return q_ == o.q_;
  return *rf_ == *o.rf_;
}

std::string Coeff::to_string() const {
  if (!rf_) return q_.get_str();
  if (rf_->den() == UPoly::constant(1)) return "(" + rf_->num().to_string() + ")";
  return "(" + rf_->num().to_string() + ")/(" + rf_->den().to_string() + ")";
}

namespace {
int compare_upoly(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    int c = cmp(a.coeffs()[k], b.coeffs()[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}
}  // namespace

int compare(const Coeff& a, const Coeff& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? -1 : 1;
  RatFunc fa = a.as_ratfunc(), fb = b.as_ratfunc();
  int c = compare_upoly(fa.num(), fb.num());
  if (c != 0) return c;
  return compare_upoly(fa.den(), fb.den());
}

}  // namespace dnull
