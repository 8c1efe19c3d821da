#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "brd/error.hpp"
#include "brd/normal_form.hpp"

using namespace brd;

namespace {

using G = GeneratorSymbol;

Connector conn(int n, std::vector<Connector::Pair> ps) {
  return Connector::make(n, std::move(ps));
}

AlgebraElement unit(LambdaClass cls, const Connector& c) {
  return AlgebraElement::term(make_basis_diagram(cls, c, Mode::Strict),
                              LaurentPoly::constant(1), Mode::Strict);
}

Connector e_plain() { return conn(2, {{1, 2, false}, {-1, -2, false}}); }
Connector e_dec() { return conn(2, {{1, 2, true}, {-1, -2, true}}); }

}  // namespace

TEST_CASE("generator diagrams") {
  BasisDiagram d;
  LaurentPoly c;

  CHECK(gen_r(2, 2, Mode::Strict).single_term(d, c));
  CHECK(d.conn == conn(2, {{1, -2, false}, {2, -1, false}}));
  CHECK(c == LaurentPoly::constant(1));

  CHECK(gen_r(1, 2, Mode::Strict).single_term(d, c));
  CHECK(d.conn == conn(2, {{1, -2, true}, {2, -1, true}}));

  CHECK(gen_e(1, 2, Mode::Strict).single_term(d, c));
  CHECK(d.conn == e_dec());

  CHECK(gen_e(2, 3, Mode::Strict).single_term(d, c));
  CHECK(d.conn == conn(3, {{1, 2, false}, {-1, -2, false}, {3, -3, false}}));

  CHECK(gen_e_star(1, 3, Mode::Strict) == gen_e(2, 3, Mode::Strict));
  CHECK(gen_e_star(2, 3, Mode::Strict).single_term(d, c));
  CHECK(d.conn == conn(3, {{1, 2, true}, {-1, -2, true}, {3, -3, false}}));

  CHECK(gen_r_beta(make_root(1, 3, false), 3, Mode::Strict).single_term(d, c));
  CHECK(d.conn == conn(3, {{1, -3, false}, {3, -1, false}, {2, -2, false}}));

  CHECK(gen_e_beta(make_root(1, 3, true), 3, Mode::Strict).single_term(d, c));
  CHECK(d.conn == conn(3, {{1, 3, true}, {-1, -3, true}, {2, -2, false}}));
}

TEST_CASE("generator index guards") {
  CHECK_THROWS_AS(gen_r(4, 3, Mode::Strict), Error);
  CHECK_THROWS_AS(gen_r(0, 3, Mode::Strict), Error);
  CHECK_THROWS_AS(gen_r(1, 1, Mode::Strict), Error);
  CHECK_THROWS_AS(gen_e_beta(make_root(1, 4, false), 3, Mode::Strict), Error);
  try {
    gen_e(5, 4, Mode::Strict);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "IndexOutOfRange");
  }
}

TEST_CASE("word evaluation") {
  CHECK(eval_word(3, {}, Mode::Strict) ==
        AlgebraElement::identity(3, Mode::Strict));

  // e1 e2 = theta d^-1 on the plain horizontal diagram
  AlgebraElement got = eval_word(2, {G::e(1), G::e(2)}, Mode::Strict);
  AlgebraElement want =
      AlgebraElement::term(make_basis_diagram(LambdaClass::Theta, e_plain(),
                                              Mode::Strict),
                           LaurentPoly::delta_power(-1), Mode::Strict);
  CHECK(got == want);

  // d^k prefixes scale
  CHECK(eval_word(2, {G::delta(3), G::e(2)}, Mode::Strict) ==
        scale(LaurentPoly::delta_power(3), gen_e(2, 2, Mode::Strict)));

  // r2 r2 = 1
  CHECK(eval_word(2, {G::r(2), G::r(2)}, Mode::Strict) ==
        AlgebraElement::identity(2, Mode::Strict));

  try {
    eval_word(2, {G::xi()}, Mode::Strict);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "ModeViolation");
  }
  CHECK_THROWS_AS(eval_word(2, {G::theta()}, Mode::Strict), Error);
  CHECK(eval_word(2, {G::xi(), G::xi()}, Mode::Extended) ==
        scale(LaurentPoly::delta_power(2),
              AlgebraElement::identity(2, Mode::Extended)));
}

TEST_CASE("monomial word assembly") {
  Monomial m;
  m.n = 4;
  m.cls = {2, Variant::YstarPaired};
  Word w = monomial_word(m);
  REQUIRE(w.size() == 4);
  CHECK(w[0].kind == G::Kind::E);
  CHECK(w[0].index == 4);
  CHECK(w[1].kind == G::Kind::EStar);
  CHECK(w[1].index == 4);
  CHECK(w[2].kind == G::Kind::E);
  CHECK(w[2].index == 2);
  CHECK(w[3].kind == G::Kind::EStar);
  CHECK(w[3].index == 2);

  m.cls = {2, Variant::Yprime};
  w = monomial_word(m);
  REQUIRE(w.size() == 2);
  CHECK(w[0].index == 4);
  CHECK(w[1].index == 1);

  m.cls = {2, Variant::Y};
  m.u_word = {2};
  m.k_star = true;
  m.z0_word = {};
  m.v_word = {3};
  m.delta_exp = -1;
  w = monomial_word(m);
  REQUIRE(w.size() == 6);
  CHECK(w[0].kind == G::Kind::Delta);
  CHECK(w[0].delta_exp == -1);
  CHECK(w[1].kind == G::Kind::R);
  CHECK(w[2].index == 4);
  CHECK(w[3].index == 2);
  CHECK(w[4].kind == G::Kind::RBeta);
  CHECK(w[4].root == make_root(3, 4, true));
  CHECK(w[5].kind == G::Kind::R);
  CHECK(w[5].index == 3);
}

TEST_CASE("nu on frozen monomials") {
  Monomial m;
  m.n = 2;
  m.cls = {1, Variant::Y};
  CHECK(nu(m) == unit(LambdaClass::One, e_plain()));

  m.k_star = true;
  AlgebraElement want = AlgebraElement::term(
      make_basis_diagram(LambdaClass::Xi, e_plain(), Mode::Strict),
      LaurentPoly::delta_power(-1), Mode::Strict);
  CHECK(nu(m) == want);

  m.k_star = false;
  m.cls = {1, Variant::YstarPaired};
  want = AlgebraElement::term(
      make_basis_diagram(LambdaClass::Theta, e_plain(), Mode::Strict),
      LaurentPoly::delta_power(-1), Mode::Strict);
  CHECK(nu(m) == want);

  m.cls = {1, Variant::Yprime};
  CHECK(nu(m) == unit(LambdaClass::One, e_dec()));

  Monomial z;
  z.n = 3;
  z.cls = {0, Variant::Y};
  z.z0_word = {2, 3};
  CHECK(nu(z) ==
        unit(LambdaClass::One,
             conn(3, {{1, -3, false}, {2, -1, false}, {3, -2, false}})));
}

TEST_CASE("monomial validation") {
  Monomial m;
  m.n = 3;
  m.cls = {2, Variant::Y};  // 2t > n
  CHECK_THROWS_AS(nu(m), Error);

  m.cls = {1, Variant::Yprime};  // needs 2t = n, even n
  CHECK_THROWS_AS(nu(m), Error);

  m.cls = {1, Variant::YstarPaired};
  m.k_star = true;  // k_star needs a plain Y part
  CHECK_THROWS_AS(nu(m), Error);

  m.k_star = false;
  m.cls = {1, Variant::Y};
  m.z0_word = {2};  // free block has rank 1, r2 does not exist there
  try {
    nu(m);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "Malformed");
  }
}

TEST_CASE("nu_inverse on frozen diagrams") {
  Monomial m = nu_inverse({LambdaClass::One, Connector::identity(3)});
  CHECK(m.cls == AdmissibleClass{0, Variant::Y});
  CHECK(m.u_word.empty());
  CHECK(m.z0_word.empty());
  CHECK(m.v_word.empty());
  CHECK_FALSE(m.k_star);
  CHECK(m.delta_exp == 0);

  m = nu_inverse({LambdaClass::One, e_plain()});
  CHECK(m.cls == AdmissibleClass{1, Variant::Y});
  CHECK(m.u_word.empty());
  CHECK(m.v_word.empty());
  CHECK_FALSE(m.k_star);
  CHECK(m.delta_exp == 0);

  m = nu_inverse({LambdaClass::One, e_dec()});
  CHECK(m.cls == AdmissibleClass{1, Variant::Yprime});
  CHECK(m.delta_exp == 0);

  m = nu_inverse({LambdaClass::Xi, e_plain()});
  CHECK(m.cls == AdmissibleClass{1, Variant::Y});
  CHECK(m.k_star);
  CHECK(m.delta_exp == 1);

  m = nu_inverse({LambdaClass::Theta, e_plain()});
  CHECK(m.cls == AdmissibleClass{1, Variant::YstarPaired});
  CHECK_FALSE(m.k_star);
  CHECK(m.delta_exp == 1);
}

TEST_CASE("nu_inverse rejects non-basis input") {
  BasisDiagram bad{LambdaClass::Xi, Connector::identity(2)};
  try {
    nu_inverse(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "NotBasis");
  }
  BasisDiagram ext = make_basis_diagram(LambdaClass::Theta,
                                        Connector::identity(2),
                                        Mode::Extended);
  CHECK_THROWS_AS(nu_inverse(ext), Error);
}

TEST_CASE("normal form round trip over full bases") {
  for (int n = 2; n <= 4; ++n) {
    for (const BasisDiagram& d : enumerate_basis(n, Mode::Strict)) {
      Monomial m = nu_inverse(d);
      CHECK(nu(m) ==
            AlgebraElement::term(d, LaurentPoly::constant(1), Mode::Strict));
    }
  }
}

TEST_CASE("horizontal shift relations across adjacent roots") {
  // r_{a*} e_a e_b = e_a r_{b*} e_b and e_{a*} e_a e_b = e_a e_{b*} e_b
  for (int n = 3; n <= 4; ++n) {
    std::vector<Root> roots = positive_roots(n);
    for (const Root& a : roots)
      for (const Root& b : roots) {
        if (std::abs(root_inner(a, b)) != 1) continue;
        CHECK(eval_word(n,
                        {G::r_beta(mate(a)), G::e_beta(a), G::e_beta(b)},
                        Mode::Strict) ==
              eval_word(n,
                        {G::e_beta(a), G::r_beta(mate(b)), G::e_beta(b)},
                        Mode::Strict));
        CHECK(eval_word(n,
                        {G::e_beta(mate(a)), G::e_beta(a), G::e_beta(b)},
                        Mode::Strict) ==
              eval_word(n,
                        {G::e_beta(a), G::e_beta(mate(b)), G::e_beta(b)},
                        Mode::Strict));
      }
  }
}
