#include "dnull/dickson.hpp"

#include <algorithm>
#include <functional>

#include "dnull/ack_expr.hpp"
#include "dnull/errors.hpp"

namespace dnull {

GrowthFn GrowthFn::affine(std::uint64_t a, std::int64_t b) {
  GrowthFn f;
  f.a_ = a;
  f.b_ = b;
  return f;
}

GrowthFn GrowthFn::table(std::vector<std::uint64_t> values) {
  GrowthFn f;
  f.is_table_ = true;
  f.table_ = std::move(values);
  return f;
}

std::optional<std::uint64_t> GrowthFn::at(std::uint64_t i) const {
  if (i == 0) return std::nullopt;
  if (is_table_) {
    if (i > table_.size()) return std::nullopt;
    return table_[i - 1];
  }
  __int128 v = static_cast<__int128>(a_) * i + b_;
  if (v < 0) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

std::optional<std::uint64_t> GrowthFn::domain_end() const {
  if (is_table_) return table_.size();
  return std::nullopt;
}

bool GrowthFn::increasing() const {
  if (is_table_) {
    for (std::size_t i = 1; i < table_.size(); ++i)
      if (table_[i] <= table_[i - 1]) return false;
    return true;
  }
  return a_ > 0;
}

namespace {

bool leq(const NTuple& a, const NTuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::uint64_t max_coord(const NTuple& t) {
  return t.empty() ? 0 : *std::max_element(t.begin(), t.end());
}

// Calls fn on every n-tuple with coordinates <= c (and some coordinate == c
// when `exact`), in lexicographically decreasing order; stops when fn
// returns false.
bool for_each_tuple(std::size_t n, std::uint64_t c, bool exact,
                    const std::function<bool(const NTuple&)>& fn) {
  NTuple t(n, 0);
  std::function<bool(std::size_t, bool)> rec = [&](std::size_t pos, bool hit) -> bool {
    if (pos == n) {
      if (exact && !hit) return true;
      return fn(t);
    }
    for (std::uint64_t v = c + 1; v-- > 0;) {
      t[pos] = v;
      if (!rec(pos + 1, hit || v == c)) return false;
    }
    return true;
  };
  if (n == 0) return fn(t);
  return rec(0, false);
}

}  // namespace

bool is_dicksonian(const TupleSeq& seq) {
  for (const NTuple& t : seq)
    if (t.size() != seq.front().size()) throw UsageError("is_dicksonian: ragged tuple lengths");
  for (std::size_t j = 1; j < seq.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (leq(seq[i], seq[j])) return false;
  return true;
}

bool growth_bounded(const TupleSeq& seq, const GrowthFn& f) {
  for (std::size_t j = 0; j < seq.size(); ++j) {
    auto fj = f.at(j + 1);
    if (!fj) throw UsageError("growth_bounded: growth function undefined at " + std::to_string(j + 1));
    if (max_coord(seq[j]) > *fj) return false;
  }
  return true;
}

std::uint64_t inverse_ceil(const GrowthFn& f, const Integer& x) {
  if (!f.is_table()) {
    // Least k >= 1 with a k + b >= x.
    const Integer a(static_cast<unsigned long>(f.slope())), b(static_cast<long>(f.intercept()));
    if (a + b >= x) return 1;
    if (a == 0) throw UsageError("inverse_ceil: constant growth function never reaches x");
    Integer k = (x - b + a - 1) / a;
    if (!k.fits_ulong_p()) throw UsageError("inverse_ceil: result out of range");
    return k.get_ui();
  }
  for (std::uint64_t k = 1; k <= f.values().size(); ++k)
    if (Integer(static_cast<unsigned long>(f.values()[k - 1])) >= x) return k;
  throw UsageError("inverse_ceil: table exhausted before reaching " + x.get_str());
}

std::optional<TupleSeq> gen_unit_growth(std::size_t d, std::uint64_t m, std::size_t length,
                                        bool* exhausted, std::uint64_t node_cap) {
  if (exhausted) *exhausted = false;
  if (length == 0) return TupleSeq{};
  TupleSeq seq{NTuple(d, m)};
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::function<bool()> rec = [&]() -> bool {
    if (seq.size() == length) return true;
    if (++nodes > node_cap) {
      out_of_budget = true;
      return false;
    }
    const std::uint64_t c = m + seq.size();
    bool found = false;
    for_each_tuple(d, c, true, [&](const NTuple& t) {
      for (const NTuple& s : seq)
        if (leq(s, t)) return true;
      seq.push_back(t);
      if (rec()) {
        found = true;
        return false;
      }
      seq.pop_back();
      return !out_of_budget;
    });
    return found;
  };
  if (rec()) return seq;
  if (exhausted) *exhausted = out_of_budget;
  return std::nullopt;
}

TupleSeq pad_construction(const TupleSeq& seq, const GrowthFn& f, std::size_t d) {
  if (seq.empty()) return {};
  if (!is_dicksonian(seq)) throw UsageError("pad_construction: input is not dicksonian");
  if (!growth_bounded(seq, f)) throw UsageError("pad_construction: growth not bounded by f");
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::uint64_t fi = *f.at(i), fn = *f.at(i + 1);
    if (fn <= fi) throw UsageError("pad_construction: growth function is not increasing");
    if (fi >= 1) {
      auto A = ackermann_value(static_cast<unsigned>(d), Integer(static_cast<unsigned long>(fi - 1)));
      if (A && Integer(static_cast<unsigned long>(fn - fi)) > *A)
        throw UsageError("pad_construction: f(i+1) - f(i) exceeds A(d, f(i)-1)");
    }
  }
  TupleSeq out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::uint64_t fi = *f.at(i + 1);
    NTuple p = seq[i];
    p.insert(p.end(), d, fi);
    out.push_back(p);
    if (i + 1 == seq.size()) break;
    const std::uint64_t step = *f.at(i + 2) - fi;
    bool exhausted = false;
    auto inner = gen_unit_growth(d, fi, step, &exhausted);
    if (!inner)
      throw ConstructionInfeasible("pad_construction: no unit-growth sequence of " +
                                   std::to_string(d) + "-tuples from " + std::to_string(fi) +
                                   " of length " + std::to_string(step) +
                                   (exhausted ? " within the search budget" : ""));
    for (std::size_t s = 1; s < inner->size(); ++s) {
      NTuple t = seq[i];
      t.insert(t.end(), (*inner)[s].begin(), (*inner)[s].end());
      out.push_back(t);
    }
  }
  return out;
}

SearchResult search_max_length(std::size_t n, const GrowthFn& f, std::uint64_t coord_cap,
                               bool exact_growth, std::uint64_t node_cap) {
  SearchResult res;
  TupleSeq seq;
  std::function<void()> rec = [&]() {
    if (seq.size() > res.length) {
      res.length = seq.size();
      res.witness = seq;
    }
    if (++res.nodes > node_cap) {
      res.conclusive = false;
      return;
    }
    auto fi = f.at(seq.size() + 1);
    if (!fi) return;  // past the end of the growth function's domain
    std::uint64_t c = *fi;
    if (c > coord_cap) {
      res.conclusive = false;
      if (exact_growth) return;
      c = coord_cap;
    }
    for_each_tuple(n, c, exact_growth, [&](const NTuple& t) {
      for (const NTuple& s : seq)
        if (leq(s, t)) return true;
      seq.push_back(t);
      rec();
      seq.pop_back();
      return res.nodes <= node_cap;
    });
  };
  rec();
  return res;
}

}  // namespace dnull
