#include "dnull/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "dnull/errors.hpp"

namespace dnull {

namespace {

thread_local GroebnerStats g_stats;

// Dense polynomial: term k has coefficient c[k] and exponent row
// e[k*S .. k*S+S), slot 0 holding the total degree. Terms are sorted by
// decreasing monomial.
struct DPoly {
  std::vector<Coeff> c;
  std::vector<std::uint16_t> e;
  std::size_t size() const { return c.size(); }
  bool empty() const { return c.empty(); }
};

class Engine {
 public:
  Engine(std::size_t nvars, OrderKind kind, const ResourceCaps& caps)
      : n_(nvars), s_(nvars + 1), kind_(kind), caps_(caps), start_(Clock::now()) {}

  std::size_t stride() const { return s_; }

  int cmp(const std::uint16_t* a, const std::uint16_t* b) const {
    if (kind_ == OrderKind::grevlex) {
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      for (std::size_t i = n_; i >= 1; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = 1; i <= n_; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  std::uint64_t mask(const std::uint16_t* a) const {
    std::uint64_t m = 0;
    for (std::size_t i = 1; i <= n_; ++i)
      if (a[i]) m |= std::uint64_t{1} << ((i - 1) % 64);
    return m;
  }

  static bool divides(const std::uint16_t* a, const std::uint16_t* b, std::size_t s) {
    for (std::size_t i = 1; i < s; ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  void sort_terms(DPoly& p) const {
    std::vector<std::size_t> idx(p.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return cmp(&p.e[a * s_], &p.e[b * s_]) > 0;
    });
    DPoly out;
    for (std::size_t k : idx) {
      const std::uint16_t* row = &p.e[k * s_];
      if (!out.empty() && cmp(&out.e[(out.size() - 1) * s_], row) == 0) {
        out.c.back() += p.c[k];
        if (out.c.back().is_zero()) {
          out.c.pop_back();
          out.e.resize(out.e.size() - s_);
        }
        continue;
      }
      if (p.c[k].is_zero()) continue;
      out.c.push_back(p.c[k]);
      out.e.insert(out.e.end(), row, row + s_);
    }
    p = std::move(out);
  }

  // h[from..] - c * x^shift * g
  DPoly sub_mul(const DPoly& h, std::size_t from, const Coeff& c, const std::uint16_t* shift,
                const DPoly& g) const {
    DPoly r;
    r.c.reserve(h.size() - from + g.size());
    r.e.reserve((h.size() - from + g.size()) * s_);
    std::vector<std::uint16_t> row(s_);
    auto load = [&](std::size_t j) {
      for (std::size_t i = 0; i < s_; ++i) row[i] = checked_add(g.e[j * s_ + i], shift[i]);
    };
    std::size_t i = from, j = 0;
    if (j < g.size()) load(j);
    while (i < h.size() || j < g.size()) {
      int d;
      if (i >= h.size()) d = -1;
      else if (j >= g.size()) d = 1;
      else d = cmp(&h.e[i * s_], row.data());
      if (d > 0) {
        r.c.push_back(h.c[i]);
        r.e.insert(r.e.end(), &h.e[i * s_], &h.e[i * s_] + s_);
        ++i;
      } else if (d < 0) {
        r.c.push_back(-(c * g.c[j]));
        r.e.insert(r.e.end(), row.begin(), row.end());
        if (++j < g.size()) load(j);
      } else {
        Coeff v = h.c[i] - c * g.c[j];
        if (!v.is_zero()) {
          r.c.push_back(std::move(v));
          r.e.insert(r.e.end(), row.begin(), row.end());
        }
        ++i;
        if (++j < g.size()) load(j);
      }
    }
    if (r.size() > caps_.max_terms)
      throw ResourceCapError(ResourceCapError::Kind::term_count,
                             "Groebner: polynomial exceeds term cap", r.size());
    return r;
  }

  DPoly mul_mono(const DPoly& g, const std::uint16_t* shift) const {
    DPoly r = g;
    for (std::size_t k = 0; k < r.size(); ++k)
      for (std::size_t i = 0; i < s_; ++i) r.e[k * s_ + i] = checked_add(r.e[k * s_ + i], shift[i]);
    return r;
  }

  void make_monic(DPoly& p) const {
    if (p.empty() || p.c[0].is_one()) return;
    Coeff inv = p.c[0].inverse();
    for (auto& c : p.c) c *= inv;
  }

  bool is_constant(const DPoly& p) const { return p.size() == 1 && p.e[0] == 0; }

  // Index of an active basis element whose lead divides row, or -1.
  long find_divisor(const std::uint16_t* row, const std::vector<std::size_t>& set) const {
    const std::uint64_t m = mask(row);
    for (std::size_t k : set) {
      if ((lead_mask_[k] & ~m) != 0) continue;
      if (basis_[k].e[0] > row[0]) continue;
      if (divides(basis_[k].e.data(), row, s_)) return static_cast<long>(k);
    }
    return -1;
  }

  // Full reduction of h by the basis elements listed in `set`.
  DPoly reduce(DPoly h, const std::vector<std::size_t>& set) {
    DPoly r;
    std::vector<std::uint16_t> shift(s_);
    std::size_t pos = 0;
    std::size_t steps = 0;
    while (pos < h.size()) {
      const std::uint16_t* row = &h.e[pos * s_];
      long k = find_divisor(row, set);
      if (k < 0) {
        r.c.push_back(h.c[pos]);
        r.e.insert(r.e.end(), row, row + s_);
        ++pos;
        continue;
      }
      const DPoly& g = basis_[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < s_; ++i) shift[i] = row[i] - g.e[i];
      Coeff c = h.c[pos];
      h = sub_mul(h, pos, c, shift.data(), g);
      pos = 0;
      if ((++steps & 63) == 0) check_time();
    }
    return r;
  }

  std::size_t add_basis(DPoly p) {
    lead_mask_.push_back(mask(p.e.data()));
    basis_.push_back(std::move(p));
    active_.push_back(false);
    return basis_.size() - 1;
  }

  void check_time() const {
    double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    if (secs > caps_.max_seconds)
      throw ResourceCapError(ResourceCapError::Kind::wall_time, "Groebner: wall-time cap exceeded",
                             basis_.size());
  }

  // Returns false when the ideal is the unit ideal.
  bool run(std::vector<DPoly> input) {
    g_stats = GroebnerStats{};
    for (auto& p : input) {
      sort_terms(p);
      if (p.empty()) continue;
      DPoly h = reduce(std::move(p), active_list());
      if (h.empty()) continue;
      make_monic(h);
      if (is_constant(h)) return false;
      update(add_basis(std::move(h)));
    }
    std::vector<std::uint16_t> shift(s_);
    while (!pairs_.empty()) {
      check_time();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      ++g_stats.pairs_processed;

      const DPoly& gi = basis_[p.i];
      const DPoly& gj = basis_[p.j];
      for (std::size_t i = 0; i < s_; ++i) shift[i] = p.lcm[i] - gi.e[i];
      DPoly sp = mul_mono(gi, shift.data());
      for (std::size_t i = 0; i < s_; ++i) shift[i] = p.lcm[i] - gj.e[i];
      sp = sub_mul(sp, 0, Coeff(1), shift.data(), gj);
      DPoly h = reduce(std::move(sp), active_list());
      if (h.empty()) {
        ++g_stats.zero_reductions;
        continue;
      }
      make_monic(h);
      if (is_constant(h)) return false;
      update(add_basis(std::move(h)));
      std::size_t live = active_list().size();
      g_stats.max_basis_size = std::max(g_stats.max_basis_size, live);
      if (live > caps_.max_basis_size)
        throw ResourceCapError(ResourceCapError::Kind::basis_size,
                               "Groebner: basis size cap exceeded", live);
    }
    return true;
  }

  // Minimal basis is the active set; interreduce tails and sort.
  std::vector<DPoly> reduced_basis() {
    std::vector<std::size_t> act = active_list();
    std::vector<DPoly> out;
    for (std::size_t k : act) {
      std::vector<std::size_t> others;
      for (std::size_t o : act)
        if (o != k) others.push_back(o);
      DPoly g = basis_[k];
      DPoly tail;
      tail.c.assign(g.c.begin() + 1, g.c.end());
      tail.e.assign(g.e.begin() + static_cast<long>(s_), g.e.end());
      DPoly r = reduce(std::move(tail), others);
      DPoly res;
      res.c.push_back(g.c[0]);
      res.e.assign(g.e.begin(), g.e.begin() + static_cast<long>(s_));
      res.c.insert(res.c.end(), r.c.begin(), r.c.end());
      res.e.insert(res.e.end(), r.e.begin(), r.e.end());
      out.push_back(std::move(res));
    }
    std::sort(out.begin(), out.end(),
              [&](const DPoly& a, const DPoly& b) { return cmp(a.e.data(), b.e.data()) > 0; });
    return out;
  }

  std::vector<std::size_t> active_list() const {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < active_.size(); ++k)
      if (active_[k]) r.push_back(k);
    return r;
  }

  // Reduction of h against an arbitrary list of monic polynomials (not a
  // Groebner basis run).
  DPoly reduce_by(DPoly h, std::vector<DPoly> G) {
    std::vector<std::size_t> set;
    for (auto& g : G) {
      sort_terms(g);
      if (g.empty()) continue;
      make_monic(g);
      set.push_back(add_basis(std::move(g)));
    }
    sort_terms(h);
    return reduce(std::move(h), set);
  }

 private:
  using Clock = std::chrono::steady_clock;

  struct Pair {
    std::size_t i, j;
    std::vector<std::uint16_t> lcm;
  };

  static std::uint16_t checked_add(std::uint16_t a, std::uint16_t b) {
    unsigned v = unsigned{a} + unsigned{b};
    if (v > std::numeric_limits<std::uint16_t>::max())
      throw ResourceCapError(ResourceCapError::Kind::term_count, "Groebner: exponent overflow");
    return static_cast<std::uint16_t>(v);
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm[0] != b.lcm[0]) return a.lcm[0] < b.lcm[0];
    int c = cmp(a.lcm.data(), b.lcm.data());
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::vector<std::uint16_t> lcm_of(const std::uint16_t* a, const std::uint16_t* b) const {
    std::vector<std::uint16_t> l(s_);
    unsigned deg = 0;
    for (std::size_t i = 1; i < s_; ++i) {
      l[i] = std::max(a[i], b[i]);
      deg += l[i];
    }
    l[0] = static_cast<std::uint16_t>(std::min<unsigned>(deg, 65535));
    return l;
  }

  bool coprime(const std::uint16_t* a, const std::uint16_t* b) const {
    for (std::size_t i = 1; i < s_; ++i)
      if (a[i] && b[i]) return false;
    return true;
  }

  // Gebauer-Moeller update for the new element h.
  void update(std::size_t h) {
    const std::uint16_t* lh = basis_[h].e.data();
    std::vector<Pair> C;
    std::vector<bool> cop;
    for (std::size_t g = 0; g < active_.size(); ++g) {
      if (!active_[g]) continue;
      C.push_back(Pair{g, h, lcm_of(basis_[g].e.data(), lh)});
      cop.push_back(coprime(basis_[g].e.data(), lh));
    }
    std::vector<Pair> D;
    std::vector<bool> dcop;
    for (std::size_t k = 0; k < C.size(); ++k) {
      bool keep = cop[k];
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q)
          if (divides(C[q].lcm.data(), C[k].lcm.data(), s_)) keep = false;
        for (std::size_t q = 0; q < D.size() && keep; ++q)
          if (divides(D[q].lcm.data(), C[k].lcm.data(), s_)) keep = false;
      }
      if (keep) {
        D.push_back(C[k]);
        dcop.push_back(cop[k]);
      }
    }
    std::vector<Pair> B;
    for (auto& p : pairs_) {
      const std::uint16_t* l = p.lcm.data();
      if (divides(lh, l, s_)) {
        auto l1 = lcm_of(basis_[p.i].e.data(), lh);
        auto l2 = lcm_of(basis_[p.j].e.data(), lh);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      B.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < D.size(); ++k)
      if (!dcop[k]) B.push_back(std::move(D[k]));
    pairs_ = std::move(B);
    for (std::size_t g = 0; g < active_.size(); ++g)
      if (active_[g] && divides(lh, basis_[g].e.data(), s_)) active_[g] = false;
    active_[h] = true;
  }

  std::size_t n_, s_;
  OrderKind kind_;
  ResourceCaps caps_;
  Clock::time_point start_;
  std::vector<DPoly> basis_;
  std::vector<std::uint64_t> lead_mask_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

// Maps ring variables to dense slots according to the requested priority.
struct DenseMap {
  std::vector<VarId> dense_to_var;
  std::unordered_map<VarId, std::size_t> var_to_dense;

  DenseMap(const std::vector<const Poly*>& polys, const MonomialOrder& order) {
    std::vector<VarId> present;
    for (const Poly* p : polys)
      for (VarId v : p->variables()) present.push_back(v);
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    for (VarId v : order.priority)
      if (std::binary_search(present.begin(), present.end(), v) && !var_to_dense.count(v)) push(v);
    for (VarId v : present)
      if (!var_to_dense.count(v)) push(v);
  }

  void push(VarId v) {
    var_to_dense[v] = dense_to_var.size();
    dense_to_var.push_back(v);
  }

  std::size_t nvars() const { return dense_to_var.size(); }

  DPoly to_dense(const Poly& p) const {
    const std::size_t s = nvars() + 1;
    DPoly d;
    d.c.reserve(p.size());
    d.e.assign(p.size() * s, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const Term& t = p.terms()[k];
      d.c.push_back(t.coeff);
      unsigned deg = 0;
      for (auto [v, x] : t.mono.entries()) {
        if (x > std::numeric_limits<std::uint16_t>::max())
          throw UsageError("Groebner: exponent too large for the dense engine");
        d.e[k * s + 1 + var_to_dense.at(v)] = static_cast<std::uint16_t>(x);
        deg += x;
      }
      if (deg > std::numeric_limits<std::uint16_t>::max())
        throw UsageError("Groebner: degree too large for the dense engine");
      d.e[k * s] = static_cast<std::uint16_t>(deg);
    }
    return d;
  }

  Poly from_dense(const RingPtr& ring, const DPoly& d) const {
    const std::size_t s = nvars() + 1;
    std::vector<Term> terms;
    terms.reserve(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
      std::vector<Monomial::Entry> en;
      for (std::size_t i = 0; i < nvars(); ++i)
        if (d.e[k * s + 1 + i]) en.emplace_back(dense_to_var[i], d.e[k * s + 1 + i]);
      std::sort(en.begin(), en.end());
      terms.push_back(Term{d.c[k], Monomial(std::move(en))});
    }
    return Poly(ring, std::move(terms));
  }
};

RingPtr ring_of(std::span<const Poly> F, const Poly* extra = nullptr) {
  RingPtr r;
  auto take = [&](const Poly& p) {
    if (!p.ring()) return;
    if (!r) r = p.ring();
    else if (r != p.ring()) throw UsageError("Groebner: polynomials from different rings");
  };
  for (const Poly& p : F) take(p);
  if (extra) take(*extra);
  return r;
}

// true iff 1 in (F); no basis is kept.
bool unit_ideal(std::span<const Poly> F, const MonomialOrder& order, const ResourceCaps& caps) {
  std::vector<const Poly*> ptrs;
  for (const Poly& p : F) ptrs.push_back(&p);
  DenseMap dm(ptrs, order);
  Engine eng(dm.nvars(), order.kind, caps);
  std::vector<DPoly> in;
  for (const Poly& p : F) in.push_back(dm.to_dense(p));
  return !eng.run(std::move(in));
}

// Copies the ring of F plus one fresh slack variable, which is placed last
// in the priority list.
struct SlackRing {
  RingPtr ring;
  VarId slack;
  std::vector<Poly> lifted;
  MonomialOrder order;

  SlackRing(const RingPtr& base, std::span<const Poly> F, const MonomialOrder& ord) {
    ring = PolyRing::create(base->field(), ord.kind);
    for (std::size_t v = 0; v < base->num_vars(); ++v) {
      VarInfo vi = base->info(static_cast<VarId>(v));
      ring->add_variable(vi.name, vi.role);
    }
    slack = ring->add_variable("_slack", VarRole::slack);
    for (const Poly& p : F) lifted.push_back(lift(p));
    order.kind = ord.kind;
    order.priority = ord.priority;
    order.priority.push_back(slack);
  }

  Poly lift(const Poly& p) const {
    return p.map_vars(ring, [](VarId v) { return v; });
  }
};

}  // namespace

GroebnerStats last_groebner_stats() { return g_stats; }

GroebnerBasis buchberger(std::span<const Poly> F, const MonomialOrder& order,
                         const ResourceCaps& caps) {
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  RingPtr ring = ring_of(F);
  if (!ring) return out;
  std::vector<const Poly*> ptrs;
  for (const Poly& p : F) ptrs.push_back(&p);
  DenseMap dm(ptrs, order);
  Engine eng(dm.nvars(), order.kind, caps);
  std::vector<DPoly> in;
  for (const Poly& p : F) in.push_back(dm.to_dense(p));
  if (!eng.run(std::move(in))) {
    out.generators.push_back(Poly::constant(ring, Coeff(1)));
    return out;
  }
  for (const DPoly& d : eng.reduced_basis()) out.generators.push_back(dm.from_dense(ring, d));
  return out;
}

Poly normal_form(const Poly& g, std::span<const Poly> G, const MonomialOrder& order) {
  RingPtr ring = ring_of(G, &g);
  if (!ring || g.is_zero()) return g;
  std::vector<const Poly*> ptrs{&g};
  for (const Poly& p : G) ptrs.push_back(&p);
  DenseMap dm(ptrs, order);
  Engine eng(dm.nvars(), order.kind, ResourceCaps{});
  std::vector<DPoly> gs;
  for (const Poly& p : G) gs.push_back(dm.to_dense(p));
  DPoly r = eng.reduce_by(dm.to_dense(g), std::move(gs));
  return dm.from_dense(ring, r);
}

bool ideal_membership(const Poly& f, std::span<const Poly> F, const ResourceCaps& caps,
                      const MonomialOrder& order) {
  if (f.is_zero()) return true;
  if (f.is_constant()) return unit_ideal(F, order, caps);
  GroebnerBasis gb = buchberger(F, order, caps);
  if (gb.is_unit()) return true;
  return normal_form(f, gb.generators, order).is_zero();
}

bool radical_membership(const Poly& f, std::span<const Poly> F, const ResourceCaps& caps,
                        const MonomialOrder& order) {
  if (f.is_zero()) return true;
  if (f.is_constant()) return unit_ideal(F, order, caps);
  RingPtr base = ring_of(F, &f);
  SlackRing sr(base, F, order);
  Poly z = Poly::variable(sr.ring, sr.slack);
  sr.lifted.push_back(Poly::constant(sr.ring, Coeff(1)) - z * sr.lift(f));
  return unit_ideal(sr.lifted, sr.order, caps);
}

bool saturation_membership(const Poly& f, std::span<const Poly> F, std::span<const Poly> S,
                           const ResourceCaps& caps, const MonomialOrder& order) {
  if (f.is_zero()) return true;
  RingPtr base = ring_of(F, &f);
  if (!base) base = ring_of(S);
  if (!base) return false;
  SlackRing sr(base, F, order);
  Poly prod = Poly::constant(sr.ring, Coeff(1));
  for (const Poly& s : S) prod = prod * sr.lift(s);
  Poly w = Poly::variable(sr.ring, sr.slack);
  sr.lifted.push_back(Poly::constant(sr.ring, Coeff(1)) - w * prod);
  return ideal_membership(sr.lift(f), sr.lifted, caps, sr.order);
}

}  // namespace dnull
