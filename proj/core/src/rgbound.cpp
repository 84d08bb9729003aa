#include "dnull/rgbound.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "dnull/bounds.hpp"
#include "dnull/dickson.hpp"
#include "dnull/reduction.hpp"

namespace dnull {

namespace {

// Zeros dropped, monic, sorted by diff_compare, duplicates removed.
std::vector<DiffPoly> normalize(std::vector<DiffPoly> S) {
  std::vector<DiffPoly> out;
  for (DiffPoly& s : S)
    if (!s.is_zero()) out.push_back(s.monic());
  std::sort(out.begin(), out.end(),
            [](const DiffPoly& a, const DiffPoly& b) { return diff_compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DiffPoly> unite(std::vector<DiffPoly> a, const std::vector<DiffPoly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize(std::move(a));
}

// v = theta u for some theta (theta = 1 allowed).
bool is_derivative(const Derivative& v, const Derivative& u) {
  return v.indet == u.indet && u.op.divides(v.op);
}

struct Measure {
  std::uint32_t D = 0, H = 0;

  void add(const DiffPoly& p) {
    D = std::max(D, p.total_degree());
    H = std::max(H, order_of(p));
  }
  void add(const std::vector<DiffPoly>& S) {
    for (const DiffPoly& p : S) add(p);
  }
};

Measure measure(const std::vector<DiffPoly>& F, const std::vector<DiffPoly>& C) {
  Measure m;
  m.add(F);
  m.add(C);
  return m;
}

std::string rank_text(const DiffPoly& f) {
  LeaderData ld = leader_data(f);
  return f.ring()->name_of(ld.leader) + "^" + std::to_string(ld.degree);
}

// Least-rank element of F that is reduced w.r.t. C; F is sorted by
// diff_compare, so the first hit is the least.
std::optional<DiffPoly> least_reduced(const std::vector<DiffPoly>& F,
                                      const std::vector<DiffPoly>& C) {
  for (const DiffPoly& g : F)
    if (!g.is_constant() && is_reduced_wrt(g, C)) return g;
  return std::nullopt;
}

bool has_unit(const std::vector<DiffPoly>& F) {
  for (const DiffPoly& g : F)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

class Runner {
 public:
  Runner(const DiffSystem& sys, const RgboundCaps& caps)
      : ring_(sys.ring), caps_(caps), start_(std::chrono::steady_clock::now()) {}

  DecompositionResult run(const std::vector<DiffPoly>& F1) {
    WorkItem root;
    root.kind = ItemKind::root;
    root.F = normalize(F1);
    Tau tau(ring_->m() + 1, 0);
    tau.push_back(ring_->n());
    tau.push_back(ring_->n());
    tau.push_back(measure(root.F, {}).D);
    root.tau = std::move(tau);
    push(std::move(root));

    while (!queue_.empty()) {
      check_time();
      if (res_.trace.size() >= caps_.max_iterations)
        fail(ResourceCapError::Kind::iterations,
             "rgbound: iteration cap " + std::to_string(caps_.max_iterations) + " reached");
      std::size_t id = queue_.front();
      queue_.pop_front();
      step(id);
    }
    return std::move(res_);
  }

 private:
  [[noreturn]] void fail(ResourceCapError::Kind kind, const std::string& what) {
    throw RgboundCapError(kind, what, std::move(res_));
  }

  void check_time() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (s > caps_.max_seconds) fail(ResourceCapError::Kind::wall_time, "rgbound: time cap reached");
  }

  void check_terms(const std::vector<DiffPoly>& S) {
    for (const DiffPoly& p : S)
      if (p.body().size() > caps_.max_terms)
        fail(ResourceCapError::Kind::term_count,
             "rgbound: polynomial with " + std::to_string(p.body().size()) + " terms");
  }

  std::size_t push(WorkItem item) {
    item.id = res_.items.size();
    queue_.push_back(item.id);
    res_.items.push_back(std::move(item));
    return res_.items.size() - 1;
  }

  std::size_t push_child(IterationRecord& rec, ItemKind kind, std::vector<DiffPoly> F,
                         std::vector<DiffPoly> C, Tau tau) {
    WorkItem w;
    w.parent = rec.item;
    w.kind = kind;
    w.F = std::move(F);
    w.C = std::move(C);
    w.tau = std::move(tau);
    std::size_t id = push(std::move(w));
    rec.children.push_back(id);
    return id;
  }

  void add_component(ComponentKind kind, std::vector<DiffPoly> set, std::size_t item) {
    Component c;
    c.kind = kind;
    c.set = std::move(set);
    c.item = item;
    res_.components.push_back(std::move(c));
  }

  void step(std::size_t id) {
    // Copies: pushing new items may reallocate res_.items.
    const std::vector<DiffPoly> F = res_.items[id].F;
    const std::vector<DiffPoly> C = res_.items[id].C;
    const Tau tau = res_.items[id].tau;

    IterationRecord rec;
    rec.item = id;
    rec.parent = res_.items[id].parent;
    rec.kind = res_.items[id].kind;
    rec.tau = tau;
    Measure in = measure(F, C);
    rec.D_in = in.D;
    rec.H_in = in.H;
    Measure touched = in;

    if (has_unit(F)) {
      rec.outcome = Outcome::unit;
      res_.saw_unit = true;
      finish(rec, touched);
      return;
    }

    std::optional<DiffPoly> chosen = least_reduced(F, C);
    if (!chosen) {
      // Nothing in F is reduced w.r.t. C: reduce F fully and continue with
      // the remainders, or accept C when everything vanishes.
      std::vector<DiffPoly> rem;
      for (const DiffPoly& g : F) rem.push_back(full_remainder(g, C));
      rem = normalize(std::move(rem));
      check_terms(rem);
      touched.add(rem);
      if (rem.empty()) {
        rec.outcome = Outcome::stuck_candidate;
        add_component(ComponentKind::characteristic_candidate, C, id);
      } else {
        rec.outcome = Outcome::stuck_extended;
        Tau t = tau;
        std::optional<DiffPoly> g = least_reduced(rem, C);
        t.back() = g ? g->total_degree() : 0;
        push_child(rec, ItemKind::incomplete, unite(F, rem), C, std::move(t));
      }
      finish(rec, touched);
      return;
    }

    const DiffPoly f = *chosen;
    const LeaderData lf = leader_data(f);
    rec.f_rank = rank_text(f);

    // Splitting on the separant and the initial.
    for (const DiffPoly& g : {lf.separant, lf.initial}) {
      if (g.is_constant()) continue;
      touched.add(g);
      Tau t = tau;
      t.back() = g.total_degree();
      push_child(rec, ItemKind::incomplete, unite(F, {g}), C, std::move(t));
    }

    std::vector<DiffPoly> Dset, Cbar;
    for (const DiffPoly& c : C) {
      if (is_derivative(leader(c), lf.leader))
        Dset.push_back(c);
      else
        Cbar.push_back(c);
    }
    Cbar.push_back(f);
    Cbar = normalize(std::move(Cbar));

    std::vector<DiffPoly> delta = normalize(delta_set(Cbar));
    check_terms(delta);
    touched.add(delta);
    std::vector<DiffPoly> G = unite(unite(F, delta), Dset);
    G.erase(std::remove(G.begin(), G.end(), f.monic()), G.end());

    // Taken over G and C-bar so that every element of C-bar enters B even
    // when G is empty or of lower order.
    std::uint32_t b = 0;
    for (const DiffPoly& g : G) b = std::max(b, order_of(g));
    for (const DiffPoly& c : Cbar) b = std::max(b, order_of(c));
    rec.b = b;

    std::vector<DiffPoly> pool;
    for (const DiffPoly& c : Cbar) {
      std::uint32_t oc = order_of(c);
      if (oc > b) continue;
      for (const DerOp& th : derops_up_to(ring_->m(), b - oc)) pool.push_back(apply_derop(c, th));
    }
    pool = normalize(std::move(pool));
    check_terms(pool);
    touched.add(pool);
    const std::vector<DiffPoly> B = minimal_triangular_subset(pool);

    std::vector<DiffPoly> Bbar;
    for (std::size_t i = 0; i < B.size(); ++i) {
      std::vector<DiffPoly> rest;
      for (std::size_t j = 0; j < B.size(); ++j)
        if (j != i) rest.push_back(B[j]);
      Bbar.push_back(algrem(B[i], rest));
    }
    check_terms(Bbar);
    touched.add(Bbar);

    if (!same_rank(Bbar, B)) {
      rec.outcome = Outcome::witness;
      add_component(ComponentKind::inconsistent_witness, B, id);
      finish(rec, touched);
      return;
    }

    std::vector<DiffPoly> R;
    for (const DiffPoly& g : G) R.push_back(algrem(g, B));
    R = normalize(std::move(R));
    check_terms(R);
    touched.add(R);
    std::vector<DiffPoly> Cnew = charset(normalize(Bbar));

    if (R.empty()) {
      rec.outcome = Outcome::candidate;
      add_component(ComponentKind::characteristic_candidate, std::move(Cnew), id);
    } else {
      rec.outcome = Outcome::pushed;
      std::vector<DiffPoly> Fnew = unite(R, F);
      Tau t(lf.leader.op.k.begin(), lf.leader.op.k.end());
      const std::uint64_t j = lf.leader.indet + 1;
      t.push_back(lf.degree);
      t.push_back(j);
      t.push_back(ring_->n() - j);
      std::optional<DiffPoly> g = has_unit(Fnew) ? std::nullopt : least_reduced(Fnew, Cnew);
      t.push_back(g ? g->total_degree() : 0);
      push_child(rec, ItemKind::complete, std::move(Fnew), std::move(Cnew), std::move(t));
    }
    finish(rec, touched);
  }

  void finish(IterationRecord& rec, const Measure& touched) {
    rec.D_touched = touched.D;
    rec.H_touched = touched.H;
    res_.trace.push_back(std::move(rec));
  }

  DiffRingPtr ring_;
  RgboundCaps caps_;
  std::chrono::steady_clock::time_point start_;
  DecompositionResult res_;
  std::deque<std::size_t> queue_;
};

Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// D_next <= (4 D)^{C(2H+m, m)+1}, exactly.
bool degree_step_holds(std::uint32_t D_next, std::uint32_t D, std::uint32_t H, std::size_t m) {
  const Integer base = 4 * Integer(static_cast<unsigned long>(D));
  if (base <= 1) return D_next <= base;
  const Integer e = binom(2UL * H + m, m) + 1;
  // base >= 4, so any exponent >= 17 already exceeds 2^32 > D_next.
  if (e >= 17) return true;
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), e.get_ui());
  return Integer(static_cast<unsigned long>(D_next)) <= bound;
}

}  // namespace

std::vector<std::vector<std::size_t>> DecompositionResult::lineages() const {
  std::vector<bool> has_child(items.size(), false);
  for (const WorkItem& w : items)
    if (w.parent) has_child[*w.parent] = true;
  std::vector<std::vector<std::size_t>> out;
  for (const WorkItem& w : items) {
    if (has_child[w.id]) continue;
    std::vector<std::size_t> path{w.id};
    for (auto p = w.parent; p; p = items[*p].parent) path.push_back(*p);
    std::reverse(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  return out;
}

DecompositionResult rgbound_decompose(const DiffSystem& sys, const RgboundCaps& caps) {
  if (!sys.ring) throw UsageError("rgbound_decompose: system without a ring");
  if (sys.F.empty()) throw UsageError("rgbound_decompose: empty system");
  return Runner(sys, caps).run(sys.F);
}

TraceReport verify_trace(DecompositionResult& res, const DiffSystem& sys, bool exact,
                         const ResourceCaps& caps) {
  TraceReport rep;
  const std::size_t m = sys.ring->m();

  for (const auto& path : res.lineages()) {
    TupleSeq seq;
    for (std::size_t id : path) seq.push_back(res.items[id].tau);
    rep.max_lineage_length = std::max(rep.max_lineage_length, path.size());
    if (!is_dicksonian(seq)) {
      rep.dicksonian = false;
      rep.failures.push_back("tuples along the lineage ending at item " +
                             std::to_string(path.back()) + " are not dicksonian");
    }
  }

  for (const WorkItem& w : res.items) {
    if (w.kind != ItemKind::complete) continue;
    const WorkItem& p = res.items[*w.parent];
    Measure before = measure(p.F, p.C), after = measure(w.F, w.C);
    if (!degree_step_holds(after.D, before.D, before.H, m)) {
      rep.degree_ok = false;
      rep.failures.push_back("degree growth bound fails at item " + std::to_string(w.id));
    }
  }

  OrderStats st = order_stats(sys.F);
  BoundReport br = structural_bounds(st, static_cast<unsigned>(m),
                                     static_cast<unsigned>(sys.ring->n()));
  const AckExpr& L = br.find("L")->expr;
  if (L.is_constant()) {
    rep.iteration_bound_symbolic = false;
    rep.iteration_bound_ok = Integer(static_cast<unsigned long>(rep.max_lineage_length)) <= L.value();
    if (!rep.iteration_bound_ok) rep.failures.push_back("lineage longer than the iteration bound");
  }

  std::vector<DiffPoly> F1;
  for (const DiffPoly& g : sys.F)
    if (!g.is_zero()) F1.push_back(g);
  bool all_witnesses = true;
  for (Component& c : res.components) {
    if (c.kind == ComponentKind::inconsistent_witness) {
      if (!exact) continue;
      std::vector<Poly> B, H;
      for (const DiffPoly& p : c.set) B.push_back(p.body());
      for (const DiffPoly& h : h_set(c.set))
        if (!h.is_constant()) H.push_back(h.body());
      std::vector<Poly> all = B;
      all.insert(all.end(), H.begin(), H.end());
      Poly one = Poly::constant(sys.ring->poly_ring(), Coeff(1));
      if (!saturation_membership(one, B, H, caps, gb_order(sys.ring, all))) {
        all_witnesses = false;
        rep.failures.push_back("witness of item " + std::to_string(c.item) +
                               " is not inconsistent");
      }
      continue;
    }
    if (!is_triangular(c.set)) {
      rep.candidates_triangular = false;
      rep.failures.push_back("candidate of item " + std::to_string(c.item) + " is not triangular");
    }
    for (const DiffPoly& g : F1)
      if (!full_remainder(g, c.set).is_zero()) {
        rep.candidates_reduce_F = false;
        rep.failures.push_back(g.to_string() + " does not reduce to 0 by the candidate of item " +
                               std::to_string(c.item));
      }
    if (exact) c.coherent = is_coherent(c.set, CoherenceMode::exact, caps);
  }
  if (exact) rep.witnesses_inconsistent = all_witnesses;
  return rep;
}

const char* to_string(ItemKind k) {
  switch (k) {
    case ItemKind::root: return "root";
    case ItemKind::complete: return "complete";
    case ItemKind::incomplete: return "incomplete";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pushed: return "pushed";
    case Outcome::candidate: return "candidate";
    case Outcome::witness: return "witness";
    case Outcome::unit: return "unit";
    case Outcome::stuck_candidate: return "stuck-candidate";
    case Outcome::stuck_extended: return "stuck-extended";
  }
  return "?";
}

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::characteristic_candidate: return "characteristic-candidate";
    case ComponentKind::inconsistent_witness: return "inconsistent-witness";
  }
  return "?";
}

}  // namespace dnull
