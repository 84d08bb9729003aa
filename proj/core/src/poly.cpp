#include "dnull/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "dnull/errors.hpp"

namespace dnull {

std::shared_ptr<PolyRing> PolyRing::create(FieldKind field, OrderKind order) {
  return std::shared_ptr<PolyRing>(new PolyRing(field, order));
}

VarId PolyRing::add_variable(std::string name, VarRole role) {
  std::lock_guard lock(mu_);
  vars_.push_back(VarInfo{std::move(name), role});
  return static_cast<VarId>(vars_.size() - 1);
}

std::size_t PolyRing::num_vars() const {
  std::lock_guard lock(mu_);
  return vars_.size();
}

VarInfo PolyRing::info(VarId v) const {
  std::lock_guard lock(mu_);
  if (v >= vars_.size()) throw UsageError("PolyRing: unknown variable id " + std::to_string(v));
  return vars_[v];
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!e_.empty() && e_.back().first == v)
      e_.back().second += e;
    else
      e_.emplace_back(v, e);
    deg_ += e;
  }
}

Monomial Monomial::var(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.e_.emplace_back(v, exp);
    m.deg_ = exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), v,
                             [](const Entry& a, VarId x) { return a.first < x; });
  return (it != e_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
      ++i;
      ++j;
    }
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  std::size_t j = 0;
  for (const auto& [v, e] : e_) {
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw UsageError("Monomial: inexact division");
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, e] : e_) {
    std::uint32_t d = 0;
    if (j < o.e_.size() && o.e_[j].first == v) d = o.e_[j++].second;
    if (e > d) r.e_.emplace_back(v, e - d);
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.emplace_back(e_[i].first, std::max(e_[i].second, o.e_[j].second));
      ++i;
      ++j;
    }
  }
  for (const auto& [v, e] : r.e_) r.deg_ += e;
  return r;
}

Monomial Monomial::with_exponent(VarId v, std::uint32_t exp) const {
  std::vector<Entry> out;
  out.reserve(e_.size() + 1);
  bool placed = false;
  for (const auto& en : e_) {
    if (!placed && en.first >= v) {
      if (exp > 0) out.emplace_back(v, exp);
      placed = true;
      if (en.first == v) continue;
    }
    out.push_back(en);
  }
  if (!placed && exp > 0) out.emplace_back(v, exp);
  return Monomial(std::move(out));
}

int compare(const Monomial& a, const Monomial& b, OrderKind order) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  if (order == OrderKind::grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // Scan from the least significant variable: a smaller exponent there wins.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(ea.size()) - 1;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(eb.size()) - 1;
    while (i >= 0 || j >= 0) {
      const std::int64_t va = i >= 0 ? ea[i].first : -1;
      const std::int64_t vb = j >= 0 ? eb[j].first : -1;
      if (va == vb) {
        if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second ? 1 : -1;
        --i;
        --j;
      } else {
        return va > vb ? -1 : 1;
      }
    }
    return 0;
  }
  std::size_t i = 0, j = 0;
  constexpr std::uint64_t kEnd = std::numeric_limits<std::uint64_t>::max();
  while (i < ea.size() || j < eb.size()) {
    const std::uint64_t va = i < ea.size() ? ea[i].first : kEnd;
    const std::uint64_t vb = j < eb.size() ? eb[j].first : kEnd;
    if (va == vb) {
      if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
      ++i;
      ++j;
    } else {
      return va < vb ? 1 : -1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

const RingPtr& common_ring(const Poly& a, const Poly& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring())
    throw UsageError("polynomials belong to different rings");
  return a.ring() ? a.ring() : b.ring();
}

OrderKind order_of(const RingPtr& r) { return r ? r->order() : OrderKind::grevlex; }

}  // namespace

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const OrderKind ord = order_of(ring_);
  std::sort(terms.begin(), terms.end(), [ord](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ord) > 0;
  });
  for (auto& t : terms) {
    if (!t_.empty() && t_.back().mono == t.mono) {
      t_.back().coeff += t.coeff;
      if (t_.back().coeff.is_zero()) t_.pop_back();
    } else if (!t.coeff.is_zero()) {
      t_.push_back(std::move(t));
    }
  }
}

Poly Poly::constant(RingPtr ring, const Coeff& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.t_.push_back(Term{c, Monomial()});
  return p;
}

Poly Poly::variable(RingPtr ring, VarId v, std::uint32_t exp) {
  Poly p(std::move(ring));
  p.t_.push_back(Term{Coeff(1), Monomial::var(v, exp)});
  return p;
}

Coeff Poly::constant_coeff() const {
  if (!t_.empty() && t_.back().mono.is_one()) return t_.back().coeff;
  return Coeff();
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vs;
  for (const auto& t : t_)
    for (const auto& [v, e] : t.mono.entries()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Poly Poly::coeff_of(VarId v, std::uint32_t k) const {
  std::vector<Term> out;
  for (const auto& t : t_)
    if (t.mono.exponent(v) == k) out.push_back(Term{t.coeff, t.mono.with_exponent(v, 0)});
  return Poly(ring_, std::move(out));
}

Poly Poly::partial(VarId v) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    const std::uint32_t e = t.mono.exponent(v);
    if (e == 0) continue;
    out.push_back(Term{t.coeff * Coeff(static_cast<long>(e)), t.mono.with_exponent(v, e - 1)});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::monic() const {
  if (t_.empty()) return *this;
  return scaled(t_.front().coeff.inverse());
}

Poly Poly::operator+(const Poly& o) const {
  const RingPtr& r = common_ring(*this, o);
  const OrderKind ord = order_of(r);
  Poly out(r);
  out.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    int c;
    if (i == t_.size())
      c = -1;
    else if (j == o.t_.size())
      c = 1;
    else
      c = compare(t_[i].mono, o.t_[j].mono, ord);
    if (c > 0) {
      out.t_.push_back(t_[i++]);
    } else if (c < 0) {
      out.t_.push_back(o.t_[j++]);
    } else {
      Coeff s = t_[i].coeff + o.t_[j].coeff;
      if (!s.is_zero()) out.t_.push_back(Term{std::move(s), t_[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.t_) t.coeff = -t.coeff;
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  const RingPtr& r = common_ring(*this, o);
  if (t_.empty() || o.t_.empty()) return Poly(r);
  std::vector<Term> prod;
  prod.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) prod.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
  return Poly(r, std::move(prod));
}

Poly Poly::scaled(const Coeff& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly out(*this);
  for (auto& t : out.t_) t.coeff = t.coeff * c;
  return out;
}

Poly Poly::mul_term(const Coeff& c, const Monomial& m) const {
  if (c.is_zero()) return Poly(ring_);
  Poly out(ring_);
  out.t_.reserve(t_.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const auto& t : t_) out.t_.push_back(Term{t.coeff * c, t.mono * m});
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(ring_, Coeff(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) out.push_back(Term{f(t.coeff), t.mono});
  return Poly(ring_, std::move(out));
}

Poly Poly::map_vars(const RingPtr& target, const std::function<VarId(VarId)>& f) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) {
    std::vector<Monomial::Entry> en;
    en.reserve(t.mono.entries().size());
    for (const auto& [v, e] : t.mono.entries()) en.emplace_back(f(v), e);
    out.push_back(Term{t.coeff, Monomial(std::move(en))});
  }
  return Poly(target, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].mono != o.t_[i].mono || t_[i].coeff != o.t_[i].coeff) return false;
  return true;
}

std::string Poly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    Coeff c = t.coeff;
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = c.is_one();
    if (t.mono.is_one()) {
      os << c.to_string();
      continue;
    }
    if (!unit) os << c.to_string() << "*";
    bool first_var = true;
    for (const auto& [v, e] : t.mono.entries()) {
      if (!first_var) os << "*";
      first_var = false;
      os << (ring_ ? ring_->info(v).name : "v" + std::to_string(v));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

int compare(const Poly& a, const Poly& b) {
  const OrderKind ord = order_of(a.ring() ? a.ring() : b.ring());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = compare(ta[i].mono, tb[i].mono, ord);
    if (c != 0) return c;
    c = compare(ta[i].coeff, tb[i].coeff);
    if (c != 0) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

PseudoDivision pseudo_divide(const Poly& g, const Poly& b, VarId v) {
  const std::uint32_t db = b.degree_in(v);
  if (db == 0) throw UsageError("pseudo_divide: divisor does not involve the main variable");
  const RingPtr& ring = common_ring(g, b);
  const Poly init = b.coeff_of(v, db);
  PseudoDivision out{Poly(ring), g, 0};
  std::uint32_t dr = out.remainder.degree_in(v);
  while (!out.remainder.is_zero() && dr >= db) {
    const Poly lc = out.remainder.coeff_of(v, dr);
    const Poly t = lc * Poly::variable(ring, v, dr - db);
    out.remainder = init * out.remainder - t * b;
    out.quotient = init * out.quotient + t;
    ++out.exponent;
    dr = out.remainder.degree_in(v);
  }
  return out;
}

}  // namespace dnull
