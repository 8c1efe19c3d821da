#pragma once

#include <cstdint>
#include <vector>

#include "brd/algebra.hpp"
#include "brd/weyl.hpp"

namespace brd {

// One token of the generator-word grammar.
struct GeneratorSymbol {
  enum class Kind {
    R,      // r<i>: simple crossing (i = 1 decorated variant)
    E,      // e<i>: simple horizontal pair
    EStar,  // e*<i>: decorated horizontal pair
    RBeta,  // r[root]: reflection diagram for any positive root
    EBeta,  // e[root]: horizontal-pair diagram for any positive root
    Xi,     // scalar xi (extended mode only)
    Theta,  // scalar theta (extended mode only)
    Delta,  // d^k scalar
  };
  Kind kind = Kind::R;
  int index = 0;               // for R, E, EStar
  Root root;                   // for RBeta, EBeta
  std::int64_t delta_exp = 0;  // for Delta

  static GeneratorSymbol r(int i) { return {Kind::R, i, {}, 0}; }
  static GeneratorSymbol e(int i) { return {Kind::E, i, {}, 0}; }
  static GeneratorSymbol e_star(int i) { return {Kind::EStar, i, {}, 0}; }
  static GeneratorSymbol r_beta(Root rt) { return {Kind::RBeta, 0, rt, 0}; }
  static GeneratorSymbol e_beta(Root rt) { return {Kind::EBeta, 0, rt, 0}; }
  static GeneratorSymbol xi() { return {Kind::Xi, 0, {}, 0}; }
  static GeneratorSymbol theta() { return {Kind::Theta, 0, {}, 0}; }
  static GeneratorSymbol delta(std::int64_t k) {
    return {Kind::Delta, 0, {}, k};
  }
};

using Word = std::vector<GeneratorSymbol>;

// Generator diagrams as single-term elements with coefficient 1.
AlgebraElement gen_r(int i, int n, Mode mode);
AlgebraElement gen_e(int i, int n, Mode mode);
AlgebraElement gen_e_star(int i, int n, Mode mode);
AlgebraElement gen_r_beta(const Root& r, int n, Mode mode);
AlgebraElement gen_e_beta(const Root& r, int n, Mode mode);

// Left-to-right product of the word over the identity.
AlgebraElement eval_word(int n, const Word& word, Mode mode);

// Normal-form monomial u e_X z v with z = (r_n^*)^k_star z0 and a delta
// power.  Words are fully expanded generator-index lists.
struct Monomial {
  int n = 1;
  std::vector<int> u_word;
  AdmissibleClass cls;  // X = admissible_Y(n, cls); t may be 0
  bool k_star = false;
  std::vector<int> z0_word;  // generator indices <= n - 2t
  std::vector<int> v_word;
  std::int64_t delta_exp = 0;
};

// Evaluates the monomial through the product engine (strict mode):
// delta^delta_exp * u * e_X * (r_n^*)^k_star * z0 * v.
AlgebraElement nu(const Monomial& m);

// Inverse normal form: the unique monomial with nu(monomial) == 1 * d.
Monomial nu_inverse(const BasisDiagram& d);

// The word of symbols the monomial expands to (usable with eval_word).
Word monomial_word(const Monomial& m);

}  // namespace brd
