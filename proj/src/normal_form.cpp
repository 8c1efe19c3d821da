#include "brd/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "brd/error.hpp"

namespace brd {

namespace {

void check_gen_index(int i, int n) {
  if (i < 1 || i > n || (i == 1 && n < 2))
    fail("IndexOutOfRange", "generator index " + std::to_string(i) +
                                " invalid for n=" + std::to_string(n));
}

void check_root(const Root& r, int n) {
  if (r.i < 1 || r.j <= r.i || r.j > n)
    fail("IndexOutOfRange", "root indices invalid for n=" + std::to_string(n));
}

}  // namespace

AlgebraElement gen_r_beta(const Root& r, int n, Mode mode) {
  check_root(r, n);
  std::vector<Connector::Pair> ps;
  for (int k = 1; k <= n; ++k) {
    if (k == r.i)
      ps.push_back({r.i, -r.j, r.plus});
    else if (k == r.j)
      ps.push_back({r.j, -r.i, r.plus});
    else
      ps.push_back({k, -k, false});
  }
  return AlgebraElement::term({LambdaClass::One, Connector::make(n, ps)},
                              LaurentPoly::constant(1), mode);
}

AlgebraElement gen_e_beta(const Root& r, int n, Mode mode) {
  check_root(r, n);
  std::vector<Connector::Pair> ps;
  ps.push_back({r.i, r.j, r.plus});
  ps.push_back({-r.i, -r.j, r.plus});
  for (int k = 1; k <= n; ++k)
    if (k != r.i && k != r.j) ps.push_back({k, -k, false});
  return AlgebraElement::term({LambdaClass::One, Connector::make(n, ps)},
                              LaurentPoly::constant(1), mode);
}

AlgebraElement gen_r(int i, int n, Mode mode) {
  check_gen_index(i, n);
  return gen_r_beta(simple_root(i, n), n, mode);
}

AlgebraElement gen_e(int i, int n, Mode mode) {
  check_gen_index(i, n);
  return gen_e_beta(simple_root(i, n), n, mode);
}

AlgebraElement gen_e_star(int i, int n, Mode mode) {
  check_gen_index(i, n);
  return gen_e_beta(mate(simple_root(i, n)), n, mode);
}

AlgebraElement eval_word(int n, const Word& word, Mode mode) {
  AlgebraElement acc = AlgebraElement::identity(n, mode);
  for (const GeneratorSymbol& g : word) {
    switch (g.kind) {
      case GeneratorSymbol::Kind::R:
        acc = multiply(acc, gen_r(g.index, n, mode));
        break;
      case GeneratorSymbol::Kind::E:
        acc = multiply(acc, gen_e(g.index, n, mode));
        break;
      case GeneratorSymbol::Kind::EStar:
        acc = multiply(acc, gen_e_star(g.index, n, mode));
        break;
      case GeneratorSymbol::Kind::RBeta:
        acc = multiply(acc, gen_r_beta(g.root, n, mode));
        break;
      case GeneratorSymbol::Kind::EBeta:
        acc = multiply(acc, gen_e_beta(g.root, n, mode));
        break;
      case GeneratorSymbol::Kind::Xi:
        if (mode != Mode::Extended)
          fail("ModeViolation", "xi is an extended-mode scalar");
        acc = multiply(acc, AlgebraElement::term(
                                {LambdaClass::Xi, Connector::identity(n)},
                                LaurentPoly::constant(1), mode));
        break;
      case GeneratorSymbol::Kind::Theta:
        if (mode != Mode::Extended)
          fail("ModeViolation", "theta is an extended-mode scalar");
        acc = multiply(acc, AlgebraElement::term(
                                {LambdaClass::Theta, Connector::identity(n)},
                                LaurentPoly::constant(1), mode));
        break;
      case GeneratorSymbol::Kind::Delta:
        acc = scale(LaurentPoly::delta_power(g.delta_exp), acc);
        break;
    }
  }
  return acc;
}

Word monomial_word(const Monomial& m) {
  const int n = m.n;
  const int t = m.cls.t;
  Word w;
  if (m.delta_exp != 0) w.push_back(GeneratorSymbol::delta(m.delta_exp));
  for (int g : m.u_word) w.push_back(GeneratorSymbol::r(g));
  switch (m.cls.variant) {
    case Variant::Y:
      for (int a = n; a >= n - 2 * t + 2; a -= 2)
        w.push_back(GeneratorSymbol::e(a));
      break;
    case Variant::Yprime:
      for (int a = n; a >= 4; a -= 2) w.push_back(GeneratorSymbol::e(a));
      w.push_back(GeneratorSymbol::e(1));
      break;
    case Variant::YstarPaired:
      for (int a = n; a >= n - 2 * t + 2; a -= 2) {
        w.push_back(GeneratorSymbol::e(a));
        w.push_back(GeneratorSymbol::e_star(a));
      }
      break;
  }
  // The coset reflection is the mate of the X pair on {n-1, n}; that pair
  // is decorated only for Y'(1), where the two poles trade places.
  if (m.k_star)
    w.push_back(GeneratorSymbol::r_beta(make_root(
        n - 1, n, !(m.cls.variant == Variant::Yprime && n == 2))));
  for (int g : m.z0_word) w.push_back(GeneratorSymbol::r(g));
  for (int g : m.v_word) w.push_back(GeneratorSymbol::r(g));
  return w;
}

namespace {

void check_monomial(const Monomial& m) {
  const int n = m.n;
  const int t = m.cls.t;
  if (n < 1 || t < 0 || 2 * t > n) fail("Malformed", "monomial rank invalid");
  if (m.cls.variant == Variant::Yprime && (n % 2 != 0 || 2 * t != n))
    fail("Malformed", "Y' variant needs t = n/2");
  if (m.k_star && (t == 0 || m.cls.variant == Variant::YstarPaired))
    fail("Malformed", "k_star requires a plain Y part");
  auto check_word = [&](const std::vector<int>& word, int rank) {
    for (int g : word)
      if (g < 1 || g > rank || (g == 1 && rank < 2))
        fail("Malformed", "word index out of range");
  };
  check_word(m.u_word, n);
  check_word(m.v_word, n);
  check_word(m.z0_word, n - 2 * t);
}

}  // namespace

AlgebraElement nu(const Monomial& m) {
  check_monomial(m);
  return eval_word(m.n, monomial_word(m), Mode::Strict);
}

Monomial nu_inverse(const BasisDiagram& d) {
  if (!basis_valid(d, Mode::Strict))
    fail("NotBasis", "not a strict-mode basis diagram");
  const Connector& c = d.conn;
  const int n = c.size();

  std::vector<Root> s_top, s_bot;
  for (const auto& p : c.pairs()) {
    if (p.a > 0 && p.b > 0) s_top.push_back({p.a, p.b, p.decorated});
    if (p.a < 0 && p.b < 0) s_bot.push_back({-p.a, -p.b, p.decorated});
  }
  const int t = static_cast<int>(s_top.size());

  Monomial m;
  m.n = n;
  if (t == 0) {
    // Pure signed permutation: the through map is the whole story.
    std::vector<int> img(n, 0);
    for (const auto& p : c.pairs()) img[-p.b - 1] = p.decorated ? -p.a : p.a;
    SignedPermutation w = SignedPermutation::make(std::move(img));
    m.cls = {0, Variant::Y};
    m.z0_word = reduced_word(w);
  } else {
    auto with_mates = [](const std::vector<Root>& rs) {
      std::vector<Root> out;
      for (const Root& r : rs) {
        out.push_back({r.i, r.j, false});
        out.push_back({r.i, r.j, true});
      }
      return out;
    };
    bool theta = d.cls == LambdaClass::Theta;
    ClassifyResult ct = orbit_classify(n, theta ? with_mates(s_top) : s_top);
    ClassifyResult cb = orbit_classify(n, theta ? with_mates(s_bot) : s_bot);
    if (ct.cls != cb.cls)
      fail("NotBasis", "top and bottom horizontal parts are not conjugate");
    m.cls = ct.cls;
    m.k_star = d.cls == LambdaClass::Xi;

    const SignedPermutation& u = ct.witness;
    const SignedPermutation& wb = cb.witness;
    SignedPermutation u_inv = u.inverse();

    // Signed through map: bottom j -> top for vertical pairs.
    std::vector<int> vert(n + 1, 0);
    for (const auto& p : c.pairs())
      if (p.a > 0 && p.b < 0) vert[-p.b] = p.decorated ? -p.a : p.a;
    auto through = [&](int q) { return q > 0 ? vert[q] : -vert[-q]; };

    const int base = n - 2 * t;
    std::vector<int> z_img(base, 0);
    for (int p = 1; p <= base; ++p) {
      int v = u_inv.apply(through(wb.apply(p)));
      if (v == 0 || std::abs(v) > base)
        fail("NotBasis", "through map does not respect the free block");
      z_img[p - 1] = theta ? std::abs(v) : v;
    }
    if (base > 0) {
      SignedPermutation z0;
      try {
        z0 = SignedPermutation::make(std::move(z_img));
      } catch (const Error&) {
        fail("NotBasis", "through map is not an even signed permutation");
      }
      m.z0_word = reduced_word(z0);
    }
    m.u_word = reduced_word(u);
    m.v_word = reduced_word(wb.inverse());
  }

  // Solve the delta power with one engine evaluation.
  m.delta_exp = 0;
  AlgebraElement e = nu(m);
  BasisDiagram ed{LambdaClass::One, Connector::identity(1)};
  LaurentPoly ec;
  std::int64_t s = 0;
  if (!e.single_term(ed, ec) || !ec.is_unit_delta_power(s) || ed != d)
    fail("Malformed", "normal form evaluation mismatch (engine defect)");
  m.delta_exp = -s;
  return m;
}

}  // namespace brd
