#include "thomcalc/polynomial_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "thomcalc/errors.hpp"

namespace thomcalc {

namespace {

bool is_one(const Rational& q) { return q == 1; }

void append_monomial(std::string& out, const Monomial& m, const TextOptions& opts, bool& wrote) {
  for (const auto& [v, e] : m.factors()) {
    if (opts.suppress_c0 && v.family() == Family::c && v.index() == 0) continue;
    if (wrote) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
    wrote = true;
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }
  // Exponent written as ^k, ^-k or ^{k}.
  int exponent() {
    if (accept('{')) {
      int e = integer();
      expect('}');
      return e;
    }
    return integer();
  }
  Rational number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }
  Variable variable() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected variable");
    char f = s_[pos_++];
    switch (f) {
      case 'c': return Variable::c(integer());
      case 'z':
      case 'l':
      case 't':
      case 'e':
      case 'y':
      case 'a': {
        expect('_');
        int i = integer();
        switch (f) {
          case 'z': return Variable::z(i);
          case 'l': return Variable::lambda(i);
          case 't': return Variable::theta(i);
          case 'e': return Variable::eta(i);
          case 'y': return Variable::y(i);
          default: return Variable::a(i);
        }
      }
      case 'u': {
        if (accept('[')) {
          std::vector<int> parts;
          do {
            parts.push_back(integer());
          } while (accept(','));
          expect(']');
          expect('^');
          int l = exponent();
          return Variable::u(l, parts);
        }
        expect('_');
        expect('{');
        int m = integer();
        expect(',');
        int r = integer();
        expect('}');
        expect('^');
        int l = exponent();
        return Variable::uhat(m, r, l);
      }
      default:
        --pos_;
        fail("unknown variable");
    }
    return {};
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) +
                     "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Polynomial parse_sum(Lexer& lx);

Polynomial parse_factor(Lexer& lx) {
  const char c = lx.peek();
  if (lx.accept('(')) {
    Polynomial inner = parse_sum(lx);
    lx.expect(')');
    if (lx.accept('^')) {
      const int e = lx.exponent();
      if (e < 0) lx.fail("negative power of a parenthesized sum");
      inner = inner.pow(static_cast<unsigned>(e));
    }
    return inner;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    Rational q = lx.number();
    if (lx.accept('^')) q = pow(q, lx.exponent());
    return Polynomial(q);
  }
  Variable v = lx.variable();
  int e = 1;
  if (lx.accept('^')) e = lx.exponent();
  return Polynomial(v, e);
}

Polynomial parse_product(Lexer& lx) {
  Polynomial p = parse_factor(lx);
  while (lx.accept('*')) p *= parse_factor(lx);
  return p;
}

// sum := [+-] product ([+-] product)*
Polynomial parse_sum(Lexer& lx) {
  PolynomialBuilder b;
  bool negative = false;
  if (lx.accept('-')) {
    negative = true;
  } else {
    lx.accept('+');
  }
  while (true) {
    Polynomial t = parse_product(lx);
    b.add(negative ? -t : t);
    if (lx.accept('+')) {
      negative = false;
    } else if (lx.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return b.build();
}

}  // namespace

std::string to_text(const Monomial& m, const TextOptions& opts) {
  std::string out;
  bool wrote = false;
  append_monomial(out, m, opts, wrote);
  return wrote ? out : "1";
}

std::string to_text(const Polynomial& p, const TextOptions& opts) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    bool wrote = false;
    append_monomial(mono, t.mono, opts, wrote);
    if (!wrote) {
      out += to_string(c);
    } else if (is_one(c)) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
    first = false;
  }
  return out;
}

std::string to_text(const LinearForm& f) { return to_text(f.to_polynomial()); }

Variable parse_variable(std::string_view text) {
  Lexer lx(text);
  Variable v = lx.variable();
  if (!lx.done()) lx.fail("trailing input after variable");
  return v;
}

Polynomial parse_polynomial(std::string_view text) {
  Lexer lx(text);
  if (lx.done()) throw ParseError("empty polynomial");
  Polynomial p = parse_sum(lx);
  if (!lx.done()) lx.fail("expected '+', '-' or '*'");
  return p;
}

LinearForm parse_linear_form(std::string_view text) {
  return LinearForm::from_polynomial(parse_polynomial(text));
}

json variable_to_json(Variable v) {
  json j;
  j["family"] = family_name(v.family());
  switch (v.family()) {
    case Family::uhat: j["index"] = {v.uhat_m(), v.uhat_r(), v.uhat_l()}; break;
    case Family::u: {
      json idx = json::array({v.u_level()});
      for (int p : v.u_partition()) idx.push_back(p);
      j["index"] = idx;
      break;
    }
    default: j["index"] = v.index();
  }
  return j;
}

Variable variable_from_json(const json& j) {
  try {
    Family f = family_from_name(j.at("family").get<std::string>());
    const json& idx = j.at("index");
    if (f == Family::uhat) {
      if (!idx.is_array() || idx.size() != 3) throw ParseError("uhat index must be [m, r, l]");
      return Variable::uhat(idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>());
    }
    if (f == Family::u) {
      if (!idx.is_array() || idx.size() < 2) throw ParseError("u index must be [l, parts...]");
      std::vector<int> parts;
      for (std::size_t i = 1; i < idx.size(); ++i) parts.push_back(idx[i].get<int>());
      return Variable::u(idx[0].get<int>(), parts);
    }
    return Variable::indexed(f, idx.get<int>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad variable JSON: ") + e.what());
  }
}

json to_json(const Polynomial& p) {
  std::vector<Variable> vars = p.variables();
  json j;
  j["vars"] = json::array();
  for (Variable v : vars) j["vars"].push_back(variable_to_json(v));
  j["terms"] = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (Variable v : vars) exps.push_back(t.mono.exponent(v));
    j["terms"].push_back({{"coeff", to_string(t.coeff)}, {"exps", exps}});
  }
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  try {
    std::vector<Variable> vars;
    for (const auto& v : j.at("vars")) vars.push_back(variable_from_json(v));
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& exps = t.at("exps");
      if (exps.size() != vars.size()) throw ParseError("exponent vector length mismatch");
      std::vector<Monomial::Factor> fs;
      for (std::size_t i = 0; i < vars.size(); ++i) fs.emplace_back(vars[i], exps[i].get<int>());
      const json& c = t.at("coeff");
      Rational coeff = c.is_string() ? parse_rational(c.get<std::string>())
                                     : Rational(c.get<long>());
      terms.push_back({Monomial::from_factors(std::move(fs)), coeff});
    }
    return Polynomial::from_terms(std::move(terms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

json to_json(const LinearForm& f) {
  json coeffs = json::object();
  for (const auto& [v, c] : f.coeffs()) coeffs[v.name()] = to_string(c);
  return {{"constant", to_string(f.constant())}, {"coeffs", coeffs}};
}

LinearForm linear_form_from_json(const json& j) {
  try {
    Rational constant = 0;
    if (j.contains("constant")) constant = parse_rational(j["constant"].get<std::string>());
    std::vector<LinearForm::Entry> entries;
    if (j.contains("coeffs")) {
      for (const auto& [name, c] : j["coeffs"].items()) {
        Rational q = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
        entries.emplace_back(parse_variable(name), q);
      }
    }
    return LinearForm(constant, std::move(entries));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad linear form JSON: ") + e.what());
  }
}

}  // namespace thomcalc
