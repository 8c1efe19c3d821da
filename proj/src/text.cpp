#include "brd/text.hpp"

#include <cctype>
#include <sstream>

#include "brd/error.hpp"

namespace brd {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t p = 0;

  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eof() {
    skip_ws();
    return p >= s.size();
  }
  char peek() {
    skip_ws();
    return p < s.size() ? s[p] : '\0';
  }
  bool try_consume(char c) {
    skip_ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c))
      fail("Malformed", std::string("expected '") + c + "' at offset " +
                            std::to_string(p));
  }
  bool try_keyword(const std::string& kw) {
    skip_ws();
    if (s.compare(p, kw.size(), kw) == 0) {
      p += kw.size();
      return true;
    }
    return false;
  }
  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    std::size_t digits = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == digits) fail("Malformed", "expected integer at offset " +
                                           std::to_string(start));
    try {
      return std::stoll(s.substr(start, p - start));
    } catch (const std::exception&) {
      fail("Malformed", "integer out of range");
    }
  }
  Int parse_bigint() {
    skip_ws();
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    std::size_t digits = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == digits) fail("Malformed", "expected integer at offset " +
                                           std::to_string(start));
    return Int(s.substr(start, p - start));
  }
};

void append_poly_term(std::ostringstream& os, const Int& coeff,
                      std::int64_t exp, bool first) {
  Int c = coeff;
  if (first) {
    if (c < 0) {
      os << '-';
      c = -c;
    }
  } else {
    os << (c < 0 ? " - " : " + ");
    if (c < 0) c = -c;
  }
  os << c.str();
  if (exp != 0) os << "d^" << exp;
}

LaurentPoly parse_poly_at(Cursor& cur) {
  LaurentPoly p;
  bool first = true;
  while (true) {
    cur.skip_ws();
    int sign = 1;
    if (!first) {
      if (cur.try_consume('+')) {
        sign = 1;
      } else if (cur.try_consume('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    Int coeff = cur.parse_bigint();
    std::int64_t exp = 0;
    if (cur.try_keyword("d^")) exp = cur.parse_int();
    p += LaurentPoly::delta_power(exp, sign * coeff);
    first = false;
  }
  return p;
}

LambdaClass parse_class_at(Cursor& cur) {
  if (cur.try_keyword("theta")) return LambdaClass::Theta;
  if (cur.try_keyword("xi")) return LambdaClass::Xi;
  if (cur.try_consume('1')) return LambdaClass::One;
  fail("Malformed", "expected scalar class (1, xi, theta)");
}

Connector parse_connector_at(Cursor& cur) {
  if (!cur.try_keyword("n:")) fail("Malformed", "expected 'n:<size>'");
  std::int64_t n64 = cur.parse_int();
  if (n64 < 1 || n64 > 1000000) fail("Malformed", "connector size invalid");
  int n = static_cast<int>(n64);
  std::vector<Connector::Pair> ps;
  while (cur.peek() == '{') {
    cur.expect('{');
    int a = static_cast<int>(cur.parse_int());
    int b = static_cast<int>(cur.parse_int());
    cur.expect('}');
    bool dec = false;
    if (cur.p < cur.s.size() && cur.s[cur.p] == '*') {
      ++cur.p;
      dec = true;
    }
    ps.push_back({a, b, dec});
  }
  return Connector::make(n, std::move(ps));
}

Root parse_root_at(Cursor& cur) {
  if (!cur.try_keyword("e")) fail("Malformed", "expected root literal");
  std::int64_t j = cur.parse_int();
  bool plus;
  if (cur.try_consume('+'))
    plus = true;
  else if (cur.try_consume('-'))
    plus = false;
  else
    fail("Malformed", "expected '+' or '-' in root literal");
  if (!cur.try_keyword("e")) fail("Malformed", "expected 'e' in root literal");
  std::int64_t i = cur.parse_int();
  if (i < 1 || j <= i) fail("Malformed", "root literal needs e<j>, e<i>, j > i");
  return make_root(static_cast<int>(i), static_cast<int>(j), plus);
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_poly_term(os, c, e, first);
    first = false;
  }
  return os.str();
}

LaurentPoly parse_poly(const std::string& s) {
  Cursor cur{s};
  LaurentPoly p = parse_poly_at(cur);
  if (!cur.eof()) fail("Malformed", "trailing characters in polynomial");
  return p;
}

std::string scalar_to_string(LambdaClass cls, const LaurentPoly& coeff) {
  std::ostringstream os;
  os << class_token(cls) << "*(" << to_string(coeff) << ")";
  return os.str();
}

std::string to_string(const Connector& c) {
  std::ostringstream os;
  os << "n:" << c.size();
  for (const auto& p : c.pairs()) {
    os << " {" << p.a << ' ' << p.b << '}';
    if (p.decorated) os << '*';
  }
  return os.str();
}

Connector parse_connector(const std::string& s) {
  Cursor cur{s};
  Connector c = parse_connector_at(cur);
  if (!cur.eof()) fail("Malformed", "trailing characters in connector");
  return c;
}

std::string to_string(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, coeff] : e.terms()) {
    if (!first) os << " + ";
    os << scalar_to_string(d.cls, coeff) << " ; " << to_string(d.conn);
    first = false;
  }
  return os.str();
}

AlgebraElement parse_element(const std::string& s, Mode mode, int expected_n) {
  Cursor cur{s};
  cur.skip_ws();
  if (cur.try_consume('0')) {
    if (!cur.eof()) fail("Malformed", "trailing characters after zero");
    if (expected_n < 1)
      fail("Malformed", "zero element needs an explicit size");
    return AlgebraElement::zero(expected_n, mode);
  }
  AlgebraElement out = AlgebraElement::zero(std::max(expected_n, 1), mode);
  bool have_out = expected_n >= 1;
  while (true) {
    LambdaClass cls = parse_class_at(cur);
    cur.expect('*');
    cur.expect('(');
    LaurentPoly coeff = parse_poly_at(cur);
    cur.expect(')');
    cur.expect(';');
    Connector conn = parse_connector_at(cur);
    if (!have_out) {
      out = AlgebraElement::zero(conn.size(), mode);
      have_out = true;
    }
    if (conn.size() != out.size())
      fail("SizeMismatch", "connector size differs from element size");
    out.add_term(make_basis_diagram(cls, std::move(conn), mode), coeff);
    if (cur.eof()) break;
    cur.expect('+');
  }
  return out;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << 'e' << r.j << (r.plus ? '+' : '-') << 'e' << r.i;
  return os.str();
}

Root parse_root(const std::string& s) {
  Cursor cur{s};
  Root r = parse_root_at(cur);
  if (!cur.eof()) fail("Malformed", "trailing characters in root literal");
  return r;
}

std::string to_string(const SignedPermutation& w) {
  std::ostringstream os;
  os << '[';
  for (int k = 1; k <= w.size(); ++k) {
    if (k > 1) os << ' ';
    os << w.image(k);
  }
  os << ']';
  return os.str();
}

SignedPermutation parse_perm(const std::string& s) {
  Cursor cur{s};
  cur.expect('[');
  std::vector<int> img;
  while (cur.peek() != ']') img.push_back(static_cast<int>(cur.parse_int()));
  cur.expect(']');
  if (!cur.eof()) fail("Malformed", "trailing characters in permutation");
  return SignedPermutation::make(std::move(img));
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const GeneratorSymbol& g : w) {
    if (!first) os << ' ';
    first = false;
    switch (g.kind) {
      case GeneratorSymbol::Kind::R: os << 'r' << g.index; break;
      case GeneratorSymbol::Kind::E: os << 'e' << g.index; break;
      case GeneratorSymbol::Kind::EStar: os << "e*" << g.index; break;
      case GeneratorSymbol::Kind::RBeta:
        os << "r[" << to_string(g.root) << ']';
        break;
      case GeneratorSymbol::Kind::EBeta:
        os << "e[" << to_string(g.root) << ']';
        break;
      case GeneratorSymbol::Kind::Xi: os << "xi"; break;
      case GeneratorSymbol::Kind::Theta: os << "theta"; break;
      case GeneratorSymbol::Kind::Delta: os << "d^" << g.delta_exp; break;
    }
  }
  return os.str();
}

Word parse_word(const std::string& s) {
  Word out;
  Cursor cur{s};
  while (!cur.eof()) {
    if (cur.try_keyword("xi")) {
      out.push_back(GeneratorSymbol::xi());
    } else if (cur.try_keyword("theta")) {
      out.push_back(GeneratorSymbol::theta());
    } else if (cur.try_keyword("d^")) {
      out.push_back(GeneratorSymbol::delta(cur.parse_int()));
    } else if (cur.try_keyword("r[")) {
      Root r = parse_root_at(cur);
      cur.expect(']');
      out.push_back(GeneratorSymbol::r_beta(r));
    } else if (cur.try_keyword("e[")) {
      Root r = parse_root_at(cur);
      cur.expect(']');
      out.push_back(GeneratorSymbol::e_beta(r));
    } else if (cur.try_keyword("e*")) {
      out.push_back(
          GeneratorSymbol::e_star(static_cast<int>(cur.parse_int())));
    } else if (cur.try_keyword("r")) {
      out.push_back(GeneratorSymbol::r(static_cast<int>(cur.parse_int())));
    } else if (cur.try_keyword("e")) {
      out.push_back(GeneratorSymbol::e(static_cast<int>(cur.parse_int())));
    } else {
      fail("Malformed", "unknown word token at offset " +
                            std::to_string(cur.p));
    }
  }
  return out;
}

std::string to_string(const Monomial& m) {
  auto word = [](const std::vector<int>& w) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (int g : w) {
      if (!first) os << ' ';
      os << 'r' << g;
      first = false;
    }
    os << ']';
    return os.str();
  };
  std::ostringstream os;
  os << "u=" << word(m.u_word) << " X=";
  switch (m.cls.variant) {
    case Variant::Y: os << "Y(" << m.cls.t << ')'; break;
    case Variant::Yprime: os << "Y'(" << m.cls.t << ')'; break;
    case Variant::YstarPaired: os << "Y*(" << m.cls.t << ')'; break;
  }
  os << " k*=" << (m.k_star ? 1 : 0) << " z0=" << word(m.z0_word)
     << " v=" << word(m.v_word) << " d^" << m.delta_exp;
  return os.str();
}

std::string sc_to_csv(const std::vector<StructureRow>& rows) {
  std::ostringstream os;
  os << "i,j,k,delta_exp,class\n";
  for (const auto& r : rows)
    os << r.i << ',' << r.j << ',' << r.k << ',' << r.delta_exp << ','
       << class_token(r.cls) << '\n';
  return os.str();
}

}  // namespace brd
