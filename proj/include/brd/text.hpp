#pragma once

#include <string>
#include <vector>

#include "brd/algebra.hpp"
#include "brd/connector.hpp"
#include "brd/laurent.hpp"
#include "brd/normal_form.hpp"
#include "brd/weyl.hpp"

namespace brd {

// Laurent polynomials, canonical form: terms by ascending exponent,
// e.g. "-1 + 2d^3"; the zero polynomial prints as "0".
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& s);

// "<class>*(<poly>)" with class one of 1, xi, theta.
std::string scalar_to_string(LambdaClass cls, const LaurentPoly& coeff);

// "n:4 {1 2}* {3 -1} {4 -4}* {-2 -3}"
std::string to_string(const Connector& c);
Connector parse_connector(const std::string& s);

// Terms joined by " + ": "<scalar> ; <connector>"; zero prints as "0".
std::string to_string(const AlgebraElement& e);
// expected_n < 0 infers the size from the first connector literal.
AlgebraElement parse_element(const std::string& s, Mode mode,
                             int expected_n = -1);

// "e<j>+e<i>" / "e<j>-e<i>" with j > i.
std::string to_string(const Root& r);
Root parse_root(const std::string& s);

// "[2 -1 3]"
std::string to_string(const SignedPermutation& w);
SignedPermutation parse_perm(const std::string& s);

// Whitespace-separated word tokens: r2 e3 e*2 r[e3+e1] e[e2-e1] xi theta d^-1
std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

// One-line monomial rendering:
// "u=[r2 r3] X=Y(1) k*=0 z0=[] v=[] d^0"
std::string to_string(const Monomial& m);

// CSV with header i,j,k,delta_exp,class.
std::string sc_to_csv(const std::vector<StructureRow>& rows);

}  // namespace brd
