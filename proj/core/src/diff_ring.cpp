#include "dnull/diff_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dnull/errors.hpp"

namespace dnull {

// ---------------------------------------------------------------------------
// DerOp / Derivative

DerOp DerOp::unit(std::size_t m, std::size_t i) {
  if (i >= m) throw UsageError("DerOp::unit: derivation index out of range");
  DerOp d = identity(m);
  d.k[i] = 1;
  return d;
}

std::uint32_t DerOp::order() const { return std::accumulate(k.begin(), k.end(), 0u); }

DerOp DerOp::operator+(const DerOp& o) const {
  if (k.size() != o.k.size()) throw UsageError("DerOp: arity mismatch");
  DerOp r = *this;
  for (std::size_t i = 0; i < k.size(); ++i) r.k[i] += o.k[i];
  return r;
}

bool DerOp::divides(const DerOp& o) const {
  if (k.size() != o.k.size()) throw UsageError("DerOp: arity mismatch");
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] > o.k[i]) return false;
  return true;
}

DerOp DerOp::complement_in(const DerOp& o) const {
  if (!divides(o)) throw UsageError("DerOp::complement_in: not a divisor");
  DerOp r = o;
  for (std::size_t i = 0; i < k.size(); ++i) r.k[i] -= k[i];
  return r;
}

DerOp DerOp::lcm(const DerOp& o) const {
  if (k.size() != o.k.size()) throw UsageError("DerOp: arity mismatch");
  DerOp r = *this;
  for (std::size_t i = 0; i < k.size(); ++i) r.k[i] = std::max(k[i], o.k[i]);
  return r;
}

namespace {
int cmp3(auto a, auto b) { return a < b ? -1 : (a > b ? 1 : 0); }

int lex_cmp(const DerOp& a, const DerOp& b) {
  for (std::size_t i = 0; i < a.k.size() && i < b.k.size(); ++i)
    if (a.k[i] != b.k[i]) return cmp3(a.k[i], b.k[i]);
  return cmp3(a.k.size(), b.k.size());
}
}  // namespace

int ranking_compare(const Derivative& u, const Derivative& v, const Ranking& r) {
  if (r.kind == RankingKind::orderly) {
    if (int c = cmp3(u.order(), v.order())) return c;
    if (int c = cmp3(u.indet, v.indet)) return c;
    return lex_cmp(u.op, v.op);
  }
  if (int c = cmp3(u.indet, v.indet)) return c;
  if (int c = cmp3(u.order(), v.order())) return c;
  return lex_cmp(u.op, v.op);
}

// ---------------------------------------------------------------------------
// DiffRing

DiffRing::DiffRing(std::size_t m, std::vector<std::string> indets, FieldKind field, Ranking ranking)
    : m_(m), names_(std::move(indets)), ranking_(ranking),
      poly_ring_(PolyRing::create(field, OrderKind::grevlex)) {}

DiffRingPtr DiffRing::create(std::size_t m, std::vector<std::string> indets, FieldKind field,
                             Ranking ranking) {
  if (m < 1) throw UsageError("DiffRing: at least one derivation is required");
  if (indets.empty()) throw UsageError("DiffRing: at least one indeterminate is required");
  if (field == FieldKind::Qx && m != 1)
    throw UsageError("DiffRing: Q(x) coefficients require exactly one derivation");
  return DiffRingPtr(new DiffRing(m, std::move(indets), field, ranking));
}

VarId DiffRing::var(const Derivative& d) {
  if (d.indet >= names_.size()) throw UsageError("DiffRing: indeterminate index out of range");
  if (d.op.size() != m_) throw UsageError("DiffRing: multi-index arity mismatch");
  std::lock_guard lock(mu_);
  auto it = index_.find(d);
  if (it != index_.end()) return it->second;
  VarId v = poly_ring_->add_variable(name_of(d), VarRole::derivative);
  index_.emplace(d, v);
  by_var_.push_back(d);
  return v;
}

Derivative DiffRing::derivative_of(VarId v) const {
  std::lock_guard lock(mu_);
  if (v >= by_var_.size()) throw UsageError("DiffRing: unknown variable");
  return by_var_[v];
}

std::string DiffRing::name_of(const Derivative& d) const {
  std::string s = names_.at(d.indet);
  if (d.op.order() == 0) return s;
  s += "[";
  for (std::size_t i = 0; i < d.op.k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.op.k[i]);
  }
  return s + "]";
}

int DiffRing::indet_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<VarId> DiffRing::gb_priority(const std::vector<VarId>& vars) const {
  std::vector<std::pair<Derivative, VarId>> ds;
  for (VarId v : vars) ds.emplace_back(derivative_of(v), v);
  std::sort(ds.begin(), ds.end(), [](const auto& a, const auto& b) {
    if (a.first.order() != b.first.order()) return a.first.order() > b.first.order();
    if (a.first.indet != b.first.indet) return a.first.indet < b.first.indet;
    return lex_cmp(a.first.op, b.first.op) < 0;
  });
  std::vector<VarId> out;
  for (auto& [d, v] : ds) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// DiffPoly

DiffPoly::DiffPoly(DiffRingPtr ring, Poly body) : ring_(std::move(ring)), body_(std::move(body)) {
  if (!ring_) throw UsageError("DiffPoly: null ring");
  if (body_.ring() && body_.ring() != ring_->poly_ring())
    throw UsageError("DiffPoly: body belongs to a different ring");
  if (!body_.ring()) body_ = Poly(ring_->poly_ring());
}

DiffPoly DiffPoly::constant(const DiffRingPtr& ring, const Coeff& c) {
  return DiffPoly(ring, Poly::constant(ring->poly_ring(), c));
}

DiffPoly DiffPoly::derivative(const DiffRingPtr& ring, const Derivative& d, std::uint32_t exp) {
  return DiffPoly(ring, Poly::variable(ring->poly_ring(), ring->var(d), exp));
}

DiffPoly DiffPoly::y(const DiffRingPtr& ring, std::uint32_t indet, std::vector<std::uint32_t> ks) {
  if (ks.empty()) ks.assign(ring->m(), 0);
  return derivative(ring, Derivative{indet, DerOp(std::move(ks))});
}

std::vector<Derivative> DiffPoly::derivatives() const {
  std::vector<Derivative> out;
  for (VarId v : body_.variables()) out.push_back(ring_->derivative_of(v));
  return out;
}

namespace {
const DiffRingPtr& same_ring(const DiffPoly& a, const DiffPoly& b) {
  if (!a.ring()) return b.ring();
  if (b.ring() && a.ring() != b.ring()) throw UsageError("DiffPoly: operands from different rings");
  return a.ring();
}
}  // namespace

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
  return DiffPoly(same_ring(*this, o), body_ + o.body_);
}
DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
  return DiffPoly(same_ring(*this, o), body_ - o.body_);
}
DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
  return DiffPoly(same_ring(*this, o), body_ * o.body_);
}
DiffPoly DiffPoly::operator-() const { return DiffPoly(ring_, -body_); }
DiffPoly DiffPoly::scaled(const Coeff& c) const { return DiffPoly(ring_, body_.scaled(c)); }
DiffPoly DiffPoly::pow(unsigned e) const { return DiffPoly(ring_, body_.pow(e)); }
DiffPoly DiffPoly::monic() const { return DiffPoly(ring_, body_.monic()); }

// ---------------------------------------------------------------------------
// Leaders and ranks

namespace {
// Highest-ranked variable of f, or nothing for constants.
std::optional<std::pair<Derivative, VarId>> leader_var(const DiffPoly& f) {
  std::optional<std::pair<Derivative, VarId>> best;
  const Ranking& r = f.ring()->ranking();
  for (VarId v : f.body().variables()) {
    Derivative d = f.ring()->derivative_of(v);
    if (!best || ranking_compare(d, best->first, r) > 0) best = std::make_pair(d, v);
  }
  return best;
}
}  // namespace

Derivative leader(const DiffPoly& f) {
  auto lv = leader_var(f);
  if (!lv) throw UsageError("no leader: polynomial lies in the coefficient field");
  return lv->first;
}

Rank rank_of(const DiffPoly& f) {
  auto lv = leader_var(f);
  if (!lv) throw UsageError("no leader: polynomial lies in the coefficient field");
  return Rank{lv->first, f.body().degree_in(lv->second)};
}

int compare_rank(const Rank& a, const Rank& b, const Ranking& r) {
  if (int c = ranking_compare(a.leader, b.leader, r)) return c;
  return cmp3(a.degree, b.degree);
}

LeaderData leader_data(const DiffPoly& f) {
  auto lv = leader_var(f);
  if (!lv) throw UsageError("no leader: polynomial lies in the coefficient field");
  LeaderData ld;
  ld.leader = lv->first;
  ld.var = lv->second;
  ld.degree = f.body().degree_in(ld.var);
  ld.initial = DiffPoly(f.ring(), f.body().coeff_of(ld.var, ld.degree));
  ld.separant = DiffPoly(f.ring(), f.body().partial(ld.var));
  return ld;
}

int diff_compare(const DiffPoly& a, const DiffPoly& b) {
  const bool ca = a.is_constant(), cb = b.is_constant();
  if (ca != cb) return ca ? -1 : 1;
  if (!ca) {
    if (int c = compare_rank(rank_of(a), rank_of(b), a.ring()->ranking())) return c;
  }
  return compare(a.body(), b.body());
}

// ---------------------------------------------------------------------------
// Differentiation

DiffPoly differentiate(const DiffPoly& f, std::size_t i) {
  const DiffRingPtr& R = f.ring();
  if (i >= R->m()) throw UsageError("differentiate: derivation index out of range");
  const RingPtr& P = R->poly_ring();
  std::vector<Term> out;
  // Coefficients only carry a nontrivial derivation over Q(x), where m = 1.
  const bool coeff_der = R->field() == FieldKind::Qx;
  for (const Term& t : f.body().terms()) {
    if (coeff_der && !t.coeff.is_rational()) {
      Coeff dc = t.coeff.derivative();
      if (!dc.is_zero()) out.push_back(Term{dc, t.mono});
    }
    for (auto [v, e] : t.mono.entries()) {
      Derivative d = R->derivative_of(v);
      d.op.k[i] += 1;
      VarId dv = R->var(d);
      Monomial rest = t.mono.with_exponent(v, e - 1);
      out.push_back(Term{t.coeff * Coeff(static_cast<long>(e)), rest * Monomial::var(dv)});
    }
  }
  return DiffPoly(R, Poly(P, std::move(out)));
}

DiffPoly apply_derop(const DiffPoly& f, const DerOp& theta) {
  if (theta.size() != f.ring()->m()) throw UsageError("apply_derop: multi-index arity mismatch");
  DiffPoly g = f;
  for (std::size_t i = 0; i < theta.size(); ++i)
    for (std::uint32_t k = 0; k < theta.k[i] && !g.is_zero(); ++k) g = differentiate(g, i);
  return g;
}

// ---------------------------------------------------------------------------
// Statistics and prolongation

std::uint32_t order_of(const DiffPoly& f) {
  std::uint32_t o = 0;
  for (const Derivative& d : f.derivatives()) o = std::max(o, d.order());
  return o;
}

OrderStats order_stats(const std::vector<DiffPoly>& F, const DiffPoly* f) {
  OrderStats s;
  DiffRingPtr R;
  for (const DiffPoly& g : F)
    if (g.ring()) R = g.ring();
  if (!R && f) R = f->ring();
  if (R) s.h.assign(R->n(), 0);
  for (const DiffPoly& g : F) {
    for (const Derivative& d : g.derivatives()) s.h[d.indet] = std::max(s.h[d.indet], d.order());
    s.D = std::max(s.D, g.total_degree());
  }
  for (std::uint32_t h : s.h) s.H = std::max(s.H, h);
  if (f) s.ord_f = order_of(*f);
  return s;
}

std::vector<DerOp> derops_up_to(std::size_t m, std::uint32_t h) {
  std::vector<DerOp> out;
  for (std::uint32_t o = 0; o <= h; ++o) {
    // All compositions of o into m parts, lex ascending.
    std::vector<std::uint32_t> k(m, 0);
    std::vector<DerOp> level;
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
      if (pos + 1 == m) {
        k[pos] = left;
        level.emplace_back(k);
        return;
      }
      for (std::uint32_t v = 0; v <= left; ++v) {
        k[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, o);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<DiffPoly> prolong(const std::vector<DiffPoly>& F, std::uint32_t h) {
  std::vector<DiffPoly> out;
  if (F.empty()) return out;
  const std::size_t m = F.front().ring()->m();
  const std::vector<DerOp> ops = derops_up_to(m, h);
  std::set<std::string> seen;
  for (const DiffPoly& g : F) {
    // Each theta g is obtained from a cached (theta - e_i) g by one step.
    std::map<DerOp, DiffPoly> cache;
    for (const DerOp& op : ops) {
      DiffPoly d;
      if (op.order() == 0) {
        d = g;
      } else {
        std::size_t i = 0;
        while (op.k[i] == 0) ++i;
        DerOp prev = op;
        prev.k[i] -= 1;
        d = differentiate(cache.at(prev), i);
      }
      cache.emplace(op, d);
      if (d.is_zero()) continue;
      if (seen.insert(d.to_string()).second) out.push_back(d);
    }
  }
  return out;
}

MonomialOrder gb_order(const DiffRingPtr& ring, const std::vector<Poly>& polys) {
  std::set<VarId> vs;
  for (const Poly& p : polys)
    for (VarId v : p.variables()) vs.insert(v);
  MonomialOrder o;
  o.kind = OrderKind::grevlex;
  o.priority = ring->gb_priority(std::vector<VarId>(vs.begin(), vs.end()));
  return o;
}

}  // namespace dnull
