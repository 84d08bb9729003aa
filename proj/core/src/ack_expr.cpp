#include "dnull/ack_expr.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>

#include "dnull/errors.hpp"

namespace dnull {

namespace {

std::size_t bits(const Integer& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

bool fits(const Integer& v, std::size_t cap) { return bits(v) <= cap; }

// 2^2^...^2 with `height` twos, when it fits.
std::optional<Integer> tower(const Integer& height, std::size_t cap) {
  if (height < 1) return Integer(1);
  if (height > 64) return std::nullopt;
  Integer t = 2;
  for (unsigned long j = 1; j < height.get_ui(); ++j) {
    // bits(2^t) = t + 1
    if (t + 1 > Integer(static_cast<unsigned long>(cap))) return std::nullopt;
    Integer next;
    mpz_ui_pow_ui(next.get_mpz_t(), 2, t.get_ui());
    t = next;
  }
  return t;
}

}  // namespace

std::optional<Integer> ackermann_value(unsigned m, const Integer& n, std::size_t cap) {
  if (n < 0) throw UsageError("ackermann: negative argument");
  std::optional<Integer> r;
  switch (m) {
    case 0: r = Integer(n + 1); break;
    case 1: r = Integer(n + 2); break;
    case 2: r = Integer(2 * n + 3); break;
    case 3: {
      if (n + 3 > Integer(static_cast<unsigned long>(cap))) return std::nullopt;
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, Integer(n + 3).get_ui());
      r = Integer(p - 3);
      break;
    }
    case 4: {
      auto t = tower(n + 3, cap);
      if (!t) return std::nullopt;
      r = Integer(*t - 3);
      break;
    }
    default:
      // A(m, n) >= A(5, 1) = A(4, 65533) for m >= 5, n >= 1: a tower of
      // 65536 twos, beyond any representable cap.
      if (n == 0) return ackermann_value(m - 1, Integer(1), cap);
      return std::nullopt;
  }
  if (!fits(*r, cap)) return std::nullopt;
  return r;
}

const char* op_name(AckExpr::Op op) {
  switch (op) {
    case AckExpr::Op::constant: return "const";
    case AckExpr::Op::ack: return "ack";
    case AckExpr::Op::max: return "max";
    case AckExpr::Op::pow: return "pow";
    case AckExpr::Op::log2ceil: return "log2ceil";
    case AckExpr::Op::binom: return "binom";
    case AckExpr::Op::add: return "add";
    case AckExpr::Op::mul: return "mul";
    case AckExpr::Op::sub: return "sub";
  }
  return "?";
}

AckExpr AckExpr::make(Op op, std::vector<AckExpr> args, unsigned m) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->m = m;
  n->args = std::move(args);
  return AckExpr(std::shared_ptr<const Node>(std::move(n)));
}

AckExpr AckExpr::constant(Integer v) {
  auto n = std::make_shared<Node>();
  n->value = std::move(v);
  return AckExpr(std::shared_ptr<const Node>(std::move(n)));
}

AckExpr AckExpr::ack(unsigned m, AckExpr arg) { return make(Op::ack, {std::move(arg)}, m); }
AckExpr AckExpr::max(std::vector<AckExpr> args) {
  if (args.empty()) throw UsageError("AckExpr::max: no arguments");
  return make(Op::max, std::move(args));
}
AckExpr AckExpr::pow(AckExpr b, AckExpr e) { return make(Op::pow, {std::move(b), std::move(e)}); }
AckExpr AckExpr::log2ceil(AckExpr a) { return make(Op::log2ceil, {std::move(a)}); }
AckExpr AckExpr::binom(AckExpr n, AckExpr k) { return make(Op::binom, {std::move(n), std::move(k)}); }
AckExpr AckExpr::add(AckExpr a, AckExpr b) { return make(Op::add, {std::move(a), std::move(b)}); }
AckExpr AckExpr::mul(AckExpr a, AckExpr b) { return make(Op::mul, {std::move(a), std::move(b)}); }
AckExpr AckExpr::sub(AckExpr a, AckExpr b) { return make(Op::sub, {std::move(a), std::move(b)}); }

std::optional<Integer> AckExpr::evaluate(std::size_t cap) const {
  const Node& n = *node_;
  auto guard = [&](Integer v) -> std::optional<Integer> {
    if (!fits(v, cap)) return std::nullopt;
    return v;
  };
  if (n.op == Op::constant) return n.value;
  if (n.op == Op::log2ceil && n.args[0].op() == Op::ack) {
    // ceil(log2(2^{x+3} - 3)) = x + 3 and ceil(log2(T(x+3) - 3)) = T(x+2)
    // hold without evaluating the Ackermann value itself.
    const AckExpr& a = n.args[0];
    auto x = a.args()[0].evaluate(cap);
    if (x && *x >= 0 && a.ack_m() == 3) return guard(*x + 3);
    if (x && *x >= 0 && a.ack_m() == 4) return tower(*x + 2, cap);
  }
  std::vector<Integer> v;
  for (const AckExpr& a : n.args) {
    auto r = a.evaluate(cap);
    if (!r) return std::nullopt;
    v.push_back(*r);
  }
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::ack: return ackermann_value(n.m, v[0], cap);
    case Op::max: {
      Integer best = v[0];
      for (const Integer& x : v)
        if (x > best) best = x;
      return best;
    }
    case Op::pow: {
      if (v[1] < 0) throw UsageError("AckExpr: negative exponent");
      if (v[0] == 0) return Integer(v[1] == 0 ? 1 : 0);
      if (v[0] == 1) return Integer(1);
      if (v[0] == -1) return Integer(mpz_even_p(v[1].get_mpz_t()) ? 1 : -1);
      if (v[1] > Integer(static_cast<unsigned long>(cap))) return std::nullopt;
      unsigned long e = v[1].get_ui();
      if ((bits(v[0]) - 1) * e > cap) return std::nullopt;
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), v[0].get_mpz_t(), e);
      return guard(r);
    }
    case Op::log2ceil: {
      if (v[0] < 1) throw UsageError("AckExpr: log2 of a non-positive value");
      if (v[0] == 1) return Integer(0);
      return Integer(static_cast<unsigned long>(bits(v[0] - 1)));
    }
    case Op::binom: {
      if (v[1] < 0 || v[1] > v[0]) return Integer(0);
      if (!v[1].fits_ulong_p() || v[1] > Integer(static_cast<unsigned long>(cap)) * 4)
        return std::nullopt;
      // log2 C(n, k) <= k log2 n keeps the computation inside the budget.
      if (bits(v[0]) * v[1].get_ui() > 4 * cap + 64) return std::nullopt;
      Integer r;
      mpz_bin_ui(r.get_mpz_t(), v[0].get_mpz_t(), v[1].get_ui());
      return guard(r);
    }
    case Op::add: return guard(v[0] + v[1]);
    case Op::mul: return guard(v[0] * v[1]);
    case Op::sub: return guard(v[0] - v[1]);
  }
  return std::nullopt;
}

AckExpr AckExpr::simplify(std::size_t cap) const {
  if (auto v = evaluate(cap)) return constant(*v);
  std::vector<AckExpr> args;
  for (const AckExpr& a : node_->args) args.push_back(a.simplify(cap));
  return make(node_->op, std::move(args), node_->m);
}

AckExpr AckExpr::toy() const {
  if (node_->op == Op::constant) return *this;
  std::vector<AckExpr> args;
  for (const AckExpr& a : node_->args) args.push_back(a.toy());
  if (node_->op == Op::ack) return add(args[0], constant(2));
  return make(node_->op, std::move(args), node_->m);
}

bool AckExpr::operator==(const AckExpr& o) const {
  if (node_ == o.node_) return true;
  const Node &a = *node_, &b = *o.node_;
  if (a.op != b.op || a.m != b.m || a.args.size() != b.args.size()) return false;
  if (a.op == Op::constant) return a.value == b.value;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (a.args[i] != b.args[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text form

std::string AckExpr::to_string() const {
  const Node& n = *node_;
  if (n.op == Op::constant) return n.value.get_str();
  std::string s = "(";
  s += op_name(n.op);
  if (n.op == Op::ack) s += " " + std::to_string(n.m);
  for (const AckExpr& a : n.args) s += " " + a.to_string();
  return s + ")";
}

namespace {

struct TextParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < s.size(); ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string atom() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' &&
           s[pos] != ')')
      ++pos;
    if (b == pos) fail("expected an atom");
    return s.substr(b, pos - b);
  }

  Integer number(const std::string& a) {
    Integer v;
    if (v.set_str(a, 10) != 0) fail("bad integer '" + a + "'");
    return v;
  }

  AckExpr expr() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    if (s[pos] != '(') return AckExpr::constant(number(atom()));
    ++pos;
    std::string op = atom();
    unsigned m = 0;
    if (op == "ack") {
      Integer mi = number(atom());
      if (mi < 0 || !mi.fits_uint_p()) fail("bad Ackermann index");
      m = static_cast<unsigned>(mi.get_ui());
    }
    std::vector<AckExpr> args;
    for (;;) {
      skip();
      if (pos >= s.size()) fail("missing ')'");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      args.push_back(expr());
    }
    auto want = [&](std::size_t k) {
      if (args.size() != k) fail("'" + op + "' expects " + std::to_string(k) + " argument(s)");
    };
    if (op == "ack") return want(1), AckExpr::ack(m, args[0]);
    if (op == "max") {
      if (args.empty()) fail("'max' needs arguments");
      return AckExpr::max(args);
    }
    if (op == "pow") return want(2), AckExpr::pow(args[0], args[1]);
    if (op == "log2ceil") return want(1), AckExpr::log2ceil(args[0]);
    if (op == "binom") return want(2), AckExpr::binom(args[0], args[1]);
    if (op == "add") return want(2), AckExpr::add(args[0], args[1]);
    if (op == "mul") return want(2), AckExpr::mul(args[0], args[1]);
    if (op == "sub") return want(2), AckExpr::sub(args[0], args[1]);
    fail("unknown operator '" + op + "'");
  }
};

nlohmann::json to_j(const AckExpr& e) {
  nlohmann::json j;
  j["op"] = op_name(e.op());
  if (e.is_constant()) {
    j["value"] = e.value().get_str();
    return j;
  }
  if (e.op() == AckExpr::Op::ack) j["m"] = e.ack_m();
  j["args"] = nlohmann::json::array();
  for (const AckExpr& a : e.args()) j["args"].push_back(to_j(a));
  return j;
}

AckExpr from_j(const nlohmann::json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "const") {
    Integer v;
    if (v.set_str(j.at("value").get<std::string>(), 10) != 0)
      throw UsageError("AckExpr JSON: bad integer");
    return AckExpr::constant(v);
  }
  std::vector<AckExpr> args;
  for (const auto& a : j.at("args")) args.push_back(from_j(a));
  // Reuse the text parser's arity checks by round-tripping through text.
  std::string text = "(" + op;
  if (op == "ack") text += " " + std::to_string(j.at("m").get<unsigned>());
  for (const AckExpr& a : args) text += " " + a.to_string();
  text += ")";
  return AckExpr::parse(text);
}

}  // namespace

AckExpr AckExpr::parse(const std::string& text) {
  TextParser p{text};
  AckExpr e = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

std::string AckExpr::to_json() const { return to_j(*this).dump(); }

AckExpr AckExpr::from_json(const std::string& json) {
  try {
    return from_j(nlohmann::json::parse(json));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("AckExpr JSON: ") + e.what());
  }
}

}  // namespace dnull
