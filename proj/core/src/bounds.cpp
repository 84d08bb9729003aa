#include "dnull/bounds.hpp"

#include <algorithm>

#include "dnull/errors.hpp"

namespace dnull {

namespace {

using E = AckExpr;

E c(long v) { return E::constant(v); }
E c(const Integer& v) { return E::constant(v); }

std::size_t bits(const Integer& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

// floor(log2 v) for v >= 1.
Integer floor_log2(const Integer& v) { return Integer(static_cast<unsigned long>(bits(v) - 1)); }

// ceil(log2 v) for v >= 1.
Integer ceil_log2(const Integer& v) {
  if (v <= 1) return 0;
  return Integer(static_cast<unsigned long>(bits(v - 1)));
}

Integer icbrt_floor(const Integer& v) {
  Integer r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);
  return r;
}

Integer icbrt_ceil(const Integer& v) {
  Integer r = icbrt_floor(v);
  if (r * r * r < v) r += 1;
  return r;
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Integer binom(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace

AckExpr ackermann(unsigned m, const Integer& n, std::size_t bit_cap) {
  if (auto v = ackermann_value(m, n, bit_cap)) return c(*v);
  return E::ack(m, c(n));
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const BoundEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

void BoundReport::add(std::string name, std::string formula, AckExpr expr) {
  entries.push_back(BoundEntry{std::move(name), std::move(formula), std::move(expr)});
}

AckExpr q_of(const OrderStats& s, unsigned n, std::size_t bit_cap) {
  E q = E::max({c(9), c(static_cast<long>(n)), E::pow(c(2), c(9L * s.H)), c(static_cast<long>(s.D))});
  return q.simplify(bit_cap);
}

BoundReport structural_bounds(const OrderStats& s, unsigned m, unsigned n, std::size_t bit_cap) {
  if (m < 1) throw UsageError("structural_bounds: m must be at least 1");
  BoundReport r;
  E Q = q_of(s, n, bit_cap);
  E maxcor = E::ack(m + 7, E::sub(Q, c(1))).simplify(bit_cap);
  r.add("Q", "max(9, n, 2^(9H), D)", Q);
  r.add("L", "log2 A(m+7, Q-1)", E::log2ceil(maxcor).simplify(bit_cap));
  r.add("maxcor", "A(m+7, Q-1)", maxcor);
  return r;
}

AckExpr degree_growth_step(const Integer& D, const Integer& H, unsigned m, std::size_t bit_cap) {
  E e = E::pow(E::mul(c(4), c(D)),
               E::add(E::binom(E::add(E::mul(c(2), c(H)), c(static_cast<long>(m))),
                               c(static_cast<long>(m))),
                      c(1)));
  return e.simplify(bit_cap);
}

unsigned lemmaf_q(unsigned ord_f, unsigned min_ord_A) {
  return ord_f > min_ord_A ? ord_f - min_ord_A : 0;
}

AckExpr degreelem_order(const AckExpr& k, const AckExpr& H, const AckExpr& d, std::size_t bit_cap) {
  E e = E::mul(E::pow(c(4), E::add(E::mul(E::add(k, c(1)), H), c(1))), d);
  return e.simplify(bit_cap);
}

BoundReport lifting_bounds(const LiftingInput& in, std::size_t bit_cap) {
  BoundReport r;
  const E n = c(static_cast<long>(in.n));
  const E m = c(static_cast<long>(in.m));
  const E ordf = c(static_cast<long>(in.ord_f));
  E Q = q_of(in.F, in.n, bit_cap);
  E Ebound = E::ack(in.m + 7, E::sub(Q, c(1))).simplify(bit_cap);
  E L = in.L ? *in.L : E::log2ceil(Ebound).simplify(bit_cap);
  E HL = E::mul(c(static_cast<long>(in.F.H)), E::pow(c(2), L)).simplify(bit_cap);
  E HA = in.H_A ? *in.H_A : HL;

  r.add("q", "max(0, ord f - min ord A)",
        c(static_cast<long>(lemmaf_q(in.ord_f, in.min_ord_A))));
  E p = E::mul(n, E::pow(c(2), E::add(HA, m))).simplify(bit_cap);
  r.add("p", "n 2^(H(A)+m)", p);
  E d = E::pow(E::max({c(static_cast<long>(in.D_f)), Ebound}),
               E::mul(n, E::pow(c(2), E::add(E::add(HL, m), ordf))))
            .simplify(bit_cap);
  r.add("d", "max(D(f), A(m+7, Q-1))^(n 2^(H 2^L + m + ord f))", d);
  r.add("degreelem", "4^((k+1)H+1) d with k = 2p, H = t(G,f)",
        degreelem_order(E::mul(c(2), p), in.t_G, d, bit_cap));
  E exponent = E::add(E::mul(E::add(E::mul(n, E::pow(c(2), E::add(HL, c(1)))), c(1)), in.t_G), c(1));
  E rhs = E::add(E::add(ordf, HL), E::mul(E::pow(c(4), exponent), d)).simplify(bit_cap);
  r.add("t_rhs", "ord f + H 2^L + 4^((n 2^(H 2^L + 1) + 1) t(G,f) + 1) d", rhs);
  return r;
}

AckExpr t_bound_closed(const OrderStats& s, unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw UsageError("t_bound_closed: m and n must be at least 1");
  unsigned B = std::max({n, s.H, s.D});
  return E::ack(m + 8, c(static_cast<long>(B)));
}

RecurrenceReport proof_recurrence_check(unsigned H1, unsigned D1, unsigned m, unsigned n,
                                        unsigned steps, std::size_t bit_cap, unsigned x_lo,
                                        unsigned x_hi) {
  RecurrenceReport rep;
  const Integer cap(static_cast<unsigned long>(bit_cap));

  // u_1 is built from the same H_1 = max(H, m) that starts the H_k chain;
  // with H < m the first inequality would otherwise fail by definition.
  const unsigned Hs = std::max(H1, m);
  RecurrenceRow prev;
  Integer e;  // lower bound on log2 u_k
  for (unsigned k = 1; k <= steps; ++k) {
    RecurrenceRow row;
    row.k = k;
    if (k == 1) {
      if (9UL * Hs > bit_cap) {
        rep.truncated = true;
        break;
      }
      row.H = Hs;
      row.D = Integer(D1);
      row.log2_D_upper = D1 == 0 ? Integer(0) : ceil_log2(Integer(D1));
      Integer u = std::max({Integer(n), Integer(9), pow2(9UL * Hs), Integer(D1)});
      row.u = u;
      row.log2_u_lower = floor_log2(u);
      row.H_ok = pow2(9UL * Hs) <= u;
      row.D_ok = Integer(D1) <= u;
      e = k == steps ? Integer(0) : icbrt_floor(u) * (2 + floor_log2(u));
    } else {
      row.H = 2 * prev.H;
      row.log2_u_lower = e;
      if (!prev.H.fits_ulong_p()) {
        rep.truncated = true;
        break;
      }
      const Integer C = binom(2 * prev.H + m, m) + 1;
      if (prev.D && *prev.D == 0) {
        row.D = Integer(0);
        row.log2_D_upper = 0;
      } else {
        row.log2_D_upper = C * (2 + prev.log2_D_upper);
        if (prev.D && C * (bits(*prev.D) + 2) <= cap) {
          Integer D;
          mpz_pow_ui(D.get_mpz_t(), Integer(4 * *prev.D).get_mpz_t(), C.get_ui());
          row.D = D;
        }
      }
      row.H_ok = 9 * row.H <= e;
      row.D_ok = row.log2_D_upper <= e;
      // e_{k+1} = 2^{floor(e_k/3)} (2 + e_k) bounds log2 u_{k+1} from below.
      if (k < steps) {
        Integer third = e / 3;
        if (third > cap) {
          rep.rows.push_back(row);
          rep.verified_steps = k;
          rep.prefix_ok = rep.prefix_ok && row.H_ok && row.D_ok;
          rep.truncated = true;
          break;
        }
        e = pow2(third.get_ui()) * (2 + e);
      }
    }
    rep.prefix_ok = rep.prefix_ok && row.H_ok && row.D_ok;
    rep.rows.push_back(row);
    rep.verified_steps = k;
    prev = row;
  }

  const Integer denom = 1024;
  for (unsigned x = std::max(1u, x_lo); x <= x_hi; ++x) {
    XCheck xc;
    xc.x = x;
    const Integer X(x);
    // a/1024 >= cbrt(x)  <=>  a^3 >= x 2^30
    Integer a = icbrt_ceil(X * pow2(30));
    // b/1024 >= log2 x  <=>  2^b >= x^1024
    Integer x1024;
    mpz_pow_ui(x1024.get_mpz_t(), X.get_mpz_t(), 1024);
    Integer b = ceil_log2(x1024);
    xc.lhs_upper = Rational(a, denom) * (Rational(2) + Rational(b, denom));
    xc.lhs_upper.canonicalize();
    // log2(1 - t) >= -2t on [0, 1/2] with t = 3 / 2^{x+2}.
    xc.rhs_lower = Rational(X + 2) - Rational(Integer(6), pow2(x + 2));
    xc.rhs_lower.canonicalize();
    xc.ok = xc.lhs_upper <= xc.rhs_lower;
    Integer coarse = icbrt_ceil(X) * (2 + ceil_log2(X));
    xc.coarse_ok = coarse <= X + 1;
    rep.x_ok = rep.x_ok && xc.ok;
    rep.x_checks.push_back(xc);
  }
  return rep;
}

}  // namespace dnull
