#include "dnull/nullstellensatz.hpp"

#include <map>
#include <set>

namespace dnull {

namespace {

// Prolongations F^{(<=h)} grown one level at a time; each new derivative
// comes from a cached one of order one less.
class Prolonger {
 public:
  explicit Prolonger(const std::vector<DiffPoly>& F) : F_(F), cache_(F.size()) {}

  std::vector<Poly> level(std::uint32_t h) {
    const std::size_t m = F_.empty() ? 0 : F_.front().ring()->m();
    std::vector<Poly> out;
    std::set<std::string> seen;
    for (std::size_t g = 0; g < F_.size(); ++g) {
      for (const DerOp& op : derops_up_to(m, h)) {
        const DiffPoly& d = get(g, op);
        if (d.is_zero()) continue;
        if (seen.insert(d.to_string()).second) out.push_back(d.body());
      }
    }
    return out;
  }

 private:
  const DiffPoly& get(std::size_t g, const DerOp& op) {
    auto it = cache_[g].find(op);
    if (it != cache_[g].end()) return it->second;
    DiffPoly d;
    if (op.order() == 0) {
      d = F_[g];
    } else {
      std::size_t i = 0;
      while (op.k[i] == 0) ++i;
      DerOp prev = op;
      prev.k[i] -= 1;
      d = differentiate(get(g, prev), i);
    }
    return cache_[g].emplace(op, std::move(d)).first->second;
  }

  std::vector<DiffPoly> F_;
  std::vector<std::map<DerOp, DiffPoly>> cache_;
};

MembershipVerdict decide(const DiffSystem& sys, std::uint32_t h, const std::vector<Poly>& gens,
                         const ResourceCaps& caps) {
  MembershipVerdict v;
  v.h = h;
  v.generators = gens.size();
  std::set<VarId> vars;
  for (const Poly& p : gens)
    for (VarId x : p.variables()) vars.insert(x);
  v.variables = vars.size();

  const DiffPoly f = sys.target();
  if (f.is_zero()) {
    v.status = MembershipStatus::in_radical;
    return v;
  }
  std::vector<Poly> all = gens;
  all.push_back(f.body());
  const MonomialOrder order = gb_order(sys.ring, all);
  bool member = f.is_constant() ? ideal_membership(Poly::constant(sys.ring->poly_ring(), Coeff(1)),
                                                   gens, caps, order)
                                : radical_membership(f.body(), gens, caps, order);
  v.status = member ? MembershipStatus::in_radical : MembershipStatus::not_in_radical;
  return v;
}

}  // namespace

MembershipVerdict radical_membership_at(const DiffSystem& sys, std::uint32_t h,
                                        const ResourceCaps& caps) {
  std::vector<Poly> gens;
  for (const DiffPoly& p : prolong(sys.F, h)) gens.push_back(p.body());
  try {
    return decide(sys, h, gens, caps);
  } catch (const ResourceCapError&) {
    MembershipVerdict v;
    v.h = h;
    v.generators = gens.size();
    v.status = MembershipStatus::inconclusive_cap;
    return v;
  }
}

MinimalT minimal_t(const DiffSystem& sys, std::uint32_t h_max, const ResourceCaps& caps) {
  MinimalT out;
  out.h_max = h_max;
  Prolonger pro(sys.F);
  for (std::uint32_t h = 0; h <= h_max; ++h) {
    MembershipVerdict v;
    try {
      v = decide(sys, h, pro.level(h), caps);
    } catch (const ResourceCapError& e) {
      throw InconclusiveScan(h, e);
    }
    out.verdicts.push_back(v);
    if (v.status == MembershipStatus::in_radical) {
      out.t = h;
      break;
    }
  }
  return out;
}

DiffSystem example_family(ExampleSelector sel, std::optional<std::size_t> declared_m) {
  if (sel.param < 1) throw UsageError("example_family: parameter must be at least 1");
  const unsigned p = sel.param;
  const std::size_t m = sel.kind == ExampleKind::ex4 ? p : 1;
  if (declared_m && *declared_m != m)
    throw UsageError(std::string("example_family: ") + to_string(sel.kind) + " needs " +
                     std::to_string(m) + " derivation(s), " + std::to_string(*declared_m) +
                     " declared");
  DiffSystem sys;
  auto one = [&] { return DiffPoly::constant(sys.ring, Coeff(1)); };
  switch (sel.kind) {
    case ExampleKind::ex1: {
      sys.ring = DiffRing::create(1, {"y"});
      sys.F = {DiffPoly::y(sys.ring, 0, {1}) - one(), DiffPoly::y(sys.ring, 0).pow(p)};
      break;
    }
    case ExampleKind::ex2:
    case ExampleKind::ex3: {
      std::vector<std::string> names;
      for (unsigned i = 1; i <= p; ++i) names.push_back("y" + std::to_string(i));
      const bool ex2 = sel.kind == ExampleKind::ex2;
      sys.ring = DiffRing::create(1, names, ex2 ? FieldKind::Qx : FieldKind::Q);
      auto y = [&](unsigned i, std::uint32_t k) { return DiffPoly::y(sys.ring, i - 1, {k}); };
      if (ex2) {
        sys.F.push_back(y(1, 1));
        for (unsigned i = 1; i < p; ++i) sys.F.push_back(y(i, 0) - y(i + 1, 1));
        Coeff a = 1;
        for (unsigned i = 1; i <= p; ++i) a = a * Coeff::x() / Coeff(static_cast<long>(i));
        sys.F.push_back(y(p, 0) - DiffPoly::constant(sys.ring, a));
      } else {
        sys.F.push_back(y(1, 0).pow(2));
        for (unsigned i = 1; i < p; ++i) sys.F.push_back(y(i, 0) - y(i + 1, 0).pow(2));
        sys.F.push_back(one() - y(p, 1));
      }
      break;
    }
    case ExampleKind::ex4: {
      sys.ring = DiffRing::create(m, {"u"});
      auto ux = [&](std::size_t i, std::uint32_t k) {
        std::vector<std::uint32_t> ks(m, 0);
        ks[i - 1] = k;
        return DiffPoly::y(sys.ring, 0, ks);
      };
      sys.F.push_back(ux(1, 1).pow(2));
      for (std::size_t i = 1; i < m; ++i) sys.F.push_back(ux(i, 1) - ux(i + 1, 1).pow(2));
      sys.F.push_back(one() - ux(m, 2));
      break;
    }
  }
  return sys;
}

bool degreelem_claim_check(const std::vector<DiffPoly>& F, const DiffPoly& a, unsigned d,
                           std::size_t i, const ResourceCaps& caps) {
  if (F.empty()) throw UsageError("degreelem_claim_check: empty F");
  if (d < 1) throw UsageError("degreelem_claim_check: d must be at least 1");
  const DiffRingPtr& R = a.ring();
  if (i >= R->m()) throw UsageError("degreelem_claim_check: derivation index out of range");

  std::vector<Poly> base;
  for (const DiffPoly& g : F) base.push_back(g.body());
  const DiffPoly ad = a.pow(d);
  std::vector<Poly> all = base;
  all.push_back(ad.body());
  if (!ideal_membership(ad.body(), base, caps, gb_order(R, all)))
    throw UsageError("degreelem_claim_check: a^d is not in (F)");

  std::vector<Poly> pro;
  for (const DiffPoly& g : prolong(F, d)) pro.push_back(g.body());
  const DiffPoly target = differentiate(a, i).pow(2 * d - 1);
  all = pro;
  all.push_back(target.body());
  return ideal_membership(target.body(), pro, caps, gb_order(R, all));
}

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::in_radical: return "in-radical";
    case MembershipStatus::not_in_radical: return "not-in-radical";
    case MembershipStatus::inconclusive_cap: return "inconclusive-cap";
  }
  return "?";
}

const char* to_string(ExampleKind k) {
  switch (k) {
    case ExampleKind::ex1: return "ex1";
    case ExampleKind::ex2: return "ex2";
    case ExampleKind::ex3: return "ex3";
    case ExampleKind::ex4: return "ex4";
  }
  return "?";
}

}  // namespace dnull
