#include "dnull/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "dnull/errors.hpp"

namespace dnull {

namespace {

const Ranking& ranking_of(const DiffPoly& f) { return f.ring()->ranking(); }

// v is a proper derivative of u.
bool proper_derivative(const Derivative& v, const Derivative& u) {
  return v.indet == u.indet && u.op.divides(v.op) && v.op != u.op;
}

}  // namespace

Reducedness reducedness(const DiffPoly& f, const DiffPoly& g) {
  LeaderData lg = leader_data(g);
  Reducedness r;
  r.partially = true;
  for (const Derivative& d : f.derivatives())
    if (proper_derivative(d, lg.leader)) {
      r.partially = false;
      break;
    }
  r.algebraically = f.body().degree_in(lg.var) < lg.degree;
  r.fully = r.partially && r.algebraically;
  return r;
}

bool is_reduced_wrt(const DiffPoly& f, const std::vector<DiffPoly>& A) {
  for (const DiffPoly& a : A)
    if (!reducedness(f, a).fully) return false;
  return true;
}

std::vector<DiffPoly> sort_by_rank(std::vector<DiffPoly> S) {
  for (const DiffPoly& s : S)
    if (s.is_constant()) throw UsageError("sort_by_rank: constant polynomial has no rank");
  std::stable_sort(S.begin(), S.end(), [](const DiffPoly& a, const DiffPoly& b) {
    return compare_rank(rank_of(a), rank_of(b), ranking_of(a)) < 0;
  });
  return S;
}

bool is_triangular(const std::vector<DiffPoly>& S) {
  std::vector<Derivative> lds;
  for (const DiffPoly& s : S) {
    if (s.is_constant()) return false;
    lds.push_back(leader(s));
  }
  std::sort(lds.begin(), lds.end());
  return std::adjacent_find(lds.begin(), lds.end()) == lds.end();
}

bool is_autoreduced(const std::vector<DiffPoly>& S, bool algebraic_only) {
  for (const DiffPoly& s : S)
    if (s.is_constant()) return false;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (i == j) continue;
      Reducedness r = reducedness(S[i], S[j]);
      if (algebraic_only ? !r.algebraically : !r.fully) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// algrem

AlgremResult algrem_chain(const DiffPoly& g, const std::vector<DiffPoly>& B) {
  std::vector<std::size_t> idx(B.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Derivative> lds;
  for (const DiffPoly& b : B) lds.push_back(leader(b));
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ranking_compare(lds[a], lds[b], ranking_of(B[a])) > 0;
  });
  AlgremResult res;
  res.remainder = g;
  for (std::size_t i : idx) {
    if (res.remainder.is_zero()) break;
    LeaderData ld = leader_data(B[i]);
    if (res.remainder.body().degree_in(ld.var) < ld.degree) continue;
    PseudoDivision pd = pseudo_divide(res.remainder.body(), B[i].body(), ld.var);
    res.steps.push_back(AlgremStep{i, DiffPoly(g.ring(), pd.quotient), pd.exponent});
    res.remainder = DiffPoly(g.ring(), pd.remainder);
  }
  return res;
}

DiffPoly algrem(const DiffPoly& g, const std::vector<DiffPoly>& B) {
  return algrem_chain(g, B).remainder;
}

// ---------------------------------------------------------------------------
// Ritt partial reduction

PartialRemainder partial_remainder(const DiffPoly& f, const std::vector<DiffPoly>& A) {
  PartialRemainder out;
  out.g = f;
  out.multiplier = DiffPoly::constant(f.ring(), Coeff(1));
  std::vector<LeaderData> lds;
  for (const DiffPoly& a : A) lds.push_back(leader_data(a));
  const Ranking& r = f.ring()->ranking();
  while (!out.g.is_zero()) {
    // Highest derivative of g that is a proper derivative of some leader.
    std::optional<Derivative> best;
    std::size_t best_a = 0;
    for (const Derivative& d : out.g.derivatives()) {
      for (std::size_t i = 0; i < lds.size(); ++i) {
        if (!proper_derivative(d, lds[i].leader)) continue;
        if (!best || ranking_compare(d, *best, r) > 0) {
          best = d;
          best_a = i;
        }
        break;
      }
    }
    if (!best) break;
    DerOp theta = lds[best_a].leader.op.complement_in(best->op);
    DiffPoly ta = apply_derop(A[best_a], theta);
    VarId v = f.ring()->var(*best);
    PseudoDivision pd = pseudo_divide(out.g.body(), ta.body(), v);
    out.g = DiffPoly(f.ring(), pd.remainder);
    out.order_used = std::max(out.order_used, theta.order());
    if (pd.exponent > 0) out.multiplier = out.multiplier * lds[best_a].separant.pow(pd.exponent);
  }
  return out;
}

DiffPoly full_remainder(const DiffPoly& f, const std::vector<DiffPoly>& A) {
  return algrem(partial_remainder(f, A).g, A);
}

// ---------------------------------------------------------------------------
// Triangular subsets and characteristic sets

std::vector<DiffPoly> minimal_triangular_subset(const std::vector<DiffPoly>& S) {
  std::vector<DiffPoly> sorted = sort_by_rank(S);
  std::vector<DiffPoly> out;
  for (const DiffPoly& s : sorted) {
    if (!out.empty() &&
        ranking_compare(leader(s), leader(out.back()), ranking_of(s)) <= 0)
      continue;
    out.push_back(s);
  }
  return out;
}

std::vector<DiffPoly> charset(const std::vector<DiffPoly>& S) {
  std::vector<DiffPoly> sorted = sort_by_rank(S);
  std::vector<DiffPoly> out;
  for (const DiffPoly& s : sorted)
    if (is_reduced_wrt(s, out)) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Delta polynomials and coherence

DiffPoly delta_poly(const DiffPoly& A, const DiffPoly& B) {
  LeaderData la = leader_data(A), lb = leader_data(B);
  if (la.leader.indet != lb.leader.indet) return DiffPoly(A.ring(), Poly(A.ring()->poly_ring()));
  DerOp v = la.leader.op.lcm(lb.leader.op);
  DiffPoly psiA = apply_derop(A, la.leader.op.complement_in(v));
  DiffPoly phiB = apply_derop(B, lb.leader.op.complement_in(v));
  return lb.separant * psiA - la.separant * phiB;
}

std::vector<DiffPoly> delta_set(const std::vector<DiffPoly>& C) {
  std::vector<DiffPoly> out;
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      DiffPoly d = delta_poly(C[i], C[j]);
      if (!d.is_zero()) out.push_back(d);
    }
  return out;
}

std::vector<DiffPoly> h_set(const std::vector<DiffPoly>& C) {
  std::vector<DiffPoly> out;
  for (const DiffPoly& c : C) {
    LeaderData ld = leader_data(c);
    out.push_back(ld.initial);
    out.push_back(ld.separant);
  }
  return out;
}

bool is_coherent(const std::vector<DiffPoly>& C, CoherenceMode mode, const ResourceCaps& caps) {
  if (C.size() < 2) return true;
  std::vector<DiffPoly> H;
  if (mode == CoherenceMode::exact)
    for (const DiffPoly& h : h_set(C))
      if (!h.is_constant()) H.push_back(h);
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      LeaderData la = leader_data(C[i]), lb = leader_data(C[j]);
      if (la.leader.indet != lb.leader.indet) continue;
      DiffPoly d = delta_poly(C[i], C[j]);
      if (d.is_zero()) continue;
      if (mode == CoherenceMode::fast) {
        if (!full_remainder(d, C).is_zero()) return false;
        continue;
      }
      // C_v: derivatives of elements of C whose leaders rank below v.
      Derivative v{la.leader.indet, la.leader.op.lcm(lb.leader.op)};
      const Ranking& r = ranking_of(C[i]);
      std::vector<Poly> Cv;
      for (const DiffPoly& c : C) {
        Derivative u = leader(c);
        if (u.order() > v.order()) continue;
        for (const DerOp& th : derops_up_to(u.op.size(), v.order() - u.order())) {
          Derivative tu{u.indet, u.op + th};
          if (ranking_compare(tu, v, r) >= 0) continue;
          Cv.push_back(apply_derop(c, th).body());
        }
      }
      std::vector<Poly> Hp;
      for (const DiffPoly& h : H) Hp.push_back(h.body());
      std::vector<Poly> all = Cv;
      all.push_back(d.body());
      all.insert(all.end(), Hp.begin(), Hp.end());
      if (!saturation_membership(d.body(), Cv, Hp, caps, gb_order(C[i].ring(), all))) return false;
    }
  return true;
}

RankOrder compare_autoreduced_rank(const std::vector<DiffPoly>& A, const std::vector<DiffPoly>& B) {
  const std::size_t k = std::min(A.size(), B.size());
  for (std::size_t i = 0; i < k; ++i) {
    int c = compare_rank(rank_of(A[i]), rank_of(B[i]), ranking_of(A[i]));
    if (c < 0) return RankOrder::lower;
    if (c > 0) return RankOrder::higher;
  }
  if (A.size() > B.size()) return RankOrder::lower;
  if (A.size() < B.size()) return RankOrder::higher;
  return RankOrder::equal;
}

bool same_rank(const std::vector<DiffPoly>& A, const std::vector<DiffPoly>& B) {
  if (A.size() != B.size()) return false;
  for (const DiffPoly& a : A)
    if (a.is_constant()) return false;
  for (const DiffPoly& b : B)
    if (b.is_constant()) return false;
  std::vector<DiffPoly> sa = sort_by_rank(A), sb = sort_by_rank(B);
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (compare_rank(rank_of(sa[i]), rank_of(sb[i]), ranking_of(sa[i])) != 0) return false;
  return true;
}

}  // namespace dnull
