#include "dnull/problem.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "dnull/errors.hpp"

namespace dnull {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Recursive-descent parser over one polynomial expression.
//   expr   = ["-"] term { ("+" | "-") term }
//   term   = power { ("*" | "/") power }
//   power  = atom [ "^" nat ]
//   atom   = nat | name [ "[" nat { "," nat } "]" ] | "(" expr ")"
class ExprParser {
 public:
  ExprParser(const DiffRingPtr& ring, const std::string& text, std::size_t line, std::size_t col)
      : ring_(ring), s_(text), line_(line), col0_(col) {}

  DiffPoly parse() {
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    DiffPoly p = expr();
    skip();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + pos_);
  }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  DiffPoly constant(const Coeff& c) const { return DiffPoly::constant(ring_, c); }

  DiffPoly expr() {
    skip();
    DiffPoly acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  DiffPoly term() {
    DiffPoly acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        std::size_t at = pos_;
        DiffPoly d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          error("division only by a nonzero constant");
        }
        acc = acc.scaled(d.body().constant_coeff().inverse());
      } else {
        return acc;
      }
    }
  }

  DiffPoly power() {
    DiffPoly base = atom();
    if (eat('^')) {
      skip();
      unsigned long e = nat("exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long nat(const char* what) {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error(std::string("expected ") + what);
    if (pos_ - start > 9) {
      pos_ = start;
      error(std::string(what) + " too large");
    }
    return std::stoul(s_.substr(start, pos_ - start));
  }

  DiffPoly atom() {
    skip();
    if (pos_ == s_.size()) error("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DiffPoly p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Coeff(Rational(Integer(s_.substr(start, pos_ - start)))));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->indet_index(name);
      if (idx < 0) {
        if (name == "x" && ring_->field() == FieldKind::Qx) return constant(Coeff::x());
        pos_ = start;
        error("unknown name '" + name + "'");
      }
      std::vector<std::uint32_t> ks(ring_->m(), 0);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '[') {
        std::size_t open = pos_;
        ++pos_;
        std::vector<std::uint32_t> got;
        do {
          got.push_back(static_cast<std::uint32_t>(nat("derivative order")));
        } while (eat(','));
        if (!eat(']')) error("expected ']'");
        if (got.size() != ring_->m()) {
          pos_ = open;
          error("multi-index has " + std::to_string(got.size()) + " entries, ring has " +
                std::to_string(ring_->m()) + " derivation(s)");
        }
        ks = got;
      }
      return DiffPoly::y(ring_, static_cast<std::uint32_t>(idx), ks);
    }
    error(std::string("unexpected '") + c + "'");
  }

  DiffRingPtr ring_;
  const std::string& s_;
  std::size_t line_, col0_;
  std::size_t pos_ = 0;
};

struct Value {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;  // column of text[0]
};

using Section = std::map<std::string, Value>;

// Splits on ';', keeping each piece's column.
std::vector<Value> split_list(const Value& v) {
  std::vector<Value> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= v.text.size(); ++i) {
    if (i < v.text.size() && v.text[i] != ';') continue;
    std::string piece = v.text.substr(start, i - start);
    std::size_t lead = piece.find_first_not_of(" \t");
    if (lead == std::string::npos)
      throw ParseError("empty list element", v.line, v.col + start);
    out.push_back(Value{trim(piece), v.line, v.col + start + lead});
    start = i + 1;
  }
  return out;
}

const Value& require(const Section& s, const std::string& sec, const std::string& key,
                     std::size_t line) {
  auto it = s.find(key);
  if (it == s.end()) throw ParseError("missing '" + key + "' in [" + sec + "]", line, 1);
  return it->second;
}

}  // namespace

DiffPoly parse_diffpoly(const DiffRingPtr& ring, const std::string& text, std::size_t line,
                        std::size_t column) {
  return ExprParser(ring, text, line, column).parse();
}

ProblemFile parse_problem(const std::string& text) {
  static const std::map<std::string, std::vector<std::string>> known = {
      {"ring", {"derivations", "indeterminates", "field"}},
      {"system", {"F", "f"}},
      {"ranking", {"type"}},
  };
  std::map<std::string, Section> sections;
  std::map<std::string, std::size_t> section_line;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t lead = line.find_first_not_of(" \t") + 1;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("unterminated section header", lineno, lead);
      current = trim(t.substr(1, t.size() - 2));
      if (!known.count(current)) throw ParseError("unknown section [" + current + "]", lineno, lead);
      if (sections.count(current)) throw ParseError("duplicate section [" + current + "]", lineno, lead);
      sections[current];
      section_line[current] = lineno;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno, lead);
    if (current.empty()) throw ParseError("key outside of a section", lineno, lead);
    std::string key = trim(line.substr(0, eq));
    const auto& keys = known.at(current);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError("unknown key '" + key + "' in [" + current + "]", lineno, lead);
    if (sections[current].count(key)) throw ParseError("duplicate key '" + key + "'", lineno, lead);
    std::size_t vstart = line.find_first_not_of(" \t", eq + 1);
    if (vstart == std::string::npos) throw ParseError("empty value for '" + key + "'", lineno, eq + 2);
    sections[current][key] = Value{trim(line.substr(vstart)), lineno, vstart + 1};
  }

  ProblemFile p;
  if (!sections.count("ring")) throw ParseError("missing [ring] section", lineno + 1, 1);
  if (!sections.count("system")) throw ParseError("missing [system] section", lineno + 1, 1);
  const Section& ring = sections["ring"];
  const std::size_t rl = section_line["ring"];

  const Value& mv = require(ring, "ring", "derivations", rl);
  if (mv.text.empty() || mv.text.size() > 3 ||
      mv.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("derivations must be a positive integer", mv.line, mv.col);
  p.m = std::stoul(mv.text);
  if (p.m < 1) throw ParseError("derivations must be at least 1", mv.line, mv.col);

  const Value& iv = require(ring, "ring", "indeterminates", rl);
  {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= iv.text.size(); ++i) {
      if (i < iv.text.size() && iv.text[i] != ',') continue;
      std::string name = trim(iv.text.substr(start, i - start));
      std::size_t col = iv.col + start;
      bool ok = !name.empty() && ident_start(name[0]);
      for (char c : name) ok = ok && ident_char(c);
      if (!ok) throw ParseError("bad indeterminate name '" + name + "'", iv.line, col);
      if (std::find(p.indeterminates.begin(), p.indeterminates.end(), name) != p.indeterminates.end())
        throw ParseError("duplicate indeterminate '" + name + "'", iv.line, col);
      p.indeterminates.push_back(name);
      start = i + 1;
    }
  }

  if (auto it = ring.find("field"); it != ring.end()) {
    if (it->second.text == "Q")
      p.field = FieldKind::Q;
    else if (it->second.text == "Q(x)")
      p.field = FieldKind::Qx;
    else
      throw ParseError("field must be Q or Q(x)", it->second.line, it->second.col);
    if (p.field == FieldKind::Qx && p.m != 1)
      throw ParseError("Q(x) requires exactly one derivation", it->second.line, it->second.col);
  }
  if (p.field == FieldKind::Qx)
    for (const std::string& n : p.indeterminates)
      if (n == "x") throw ParseError("'x' is the base variable of Q(x)", iv.line, iv.col);

  if (sections.count("ranking")) {
    const Section& rk = sections["ranking"];
    if (auto it = rk.find("type"); it != rk.end() && it->second.text != "orderly")
      throw ParseError("only the orderly ranking is supported", it->second.line, it->second.col);
  }

  p.system.ring = DiffRing::create(p.m, p.indeterminates, p.field);
  const Section& sys = sections["system"];
  const Value& fv = require(sys, "system", "F", section_line["system"]);
  for (const Value& piece : split_list(fv))
    p.system.F.push_back(parse_diffpoly(p.system.ring, piece.text, piece.line, piece.col));
  if (auto it = sys.find("f"); it != sys.end())
    p.system.f = parse_diffpoly(p.system.ring, it->second.text, it->second.line, it->second.col);
  return p;
}

std::string print_problem(const ProblemFile& p) {
  std::ostringstream os;
  os << "[ring]\n";
  os << "derivations = " << p.m << "\n";
  os << "indeterminates = ";
  for (std::size_t i = 0; i < p.indeterminates.size(); ++i)
    os << (i ? ", " : "") << p.indeterminates[i];
  os << "\n";
  os << "field = " << (p.field == FieldKind::Qx ? "Q(x)" : "Q") << "\n";
  os << "\n[system]\n";
  os << "F = ";
  for (std::size_t i = 0; i < p.system.F.size(); ++i)
    os << (i ? "; " : "") << p.system.F[i].to_string();
  os << "\n";
  if (p.system.f) os << "f = " << p.system.f->to_string() << "\n";
  os << "\n[ranking]\ntype = orderly\n";
  return os.str();
}

ProblemFile problem_from_system(const DiffSystem& sys) {
  ProblemFile p;
  p.m = sys.ring->m();
  p.indeterminates = sys.ring->indet_names();
  p.field = sys.ring->field();
  p.ranking = sys.ring->ranking().kind;
  p.system = sys;
  return p;
}

}  // namespace dnull
