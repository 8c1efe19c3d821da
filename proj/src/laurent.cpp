#include "brd/laurent.hpp"

#include "brd/error.hpp"

namespace brd {

LaurentPoly LaurentPoly::constant(Int c) {
  LaurentPoly p;
  p.add_term(0, c);
  return p;
}

LaurentPoly LaurentPoly::delta_power(std::int64_t exp, Int coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

void LaurentPoly::add_term(std::int64_t exp, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_unit_delta_power(std::int64_t& exp) const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  exp = e;
  return true;
}

bool LaurentPoly::is_single_term(std::int64_t& exp, Int& coeff) const {
  if (terms_.size() != 1) return false;
  exp = terms_.begin()->first;
  coeff = terms_.begin()->second;
  return true;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(checked_exp_add(ea, eb), ca * cb);
  return r;
}

std::int64_t checked_exp_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail("Malformed", "delta exponent overflow");
  return r;
}

ClassProduct class_mul(LambdaClass a, LambdaClass b) {
  if (a == LambdaClass::One) return {b, 0};
  if (b == LambdaClass::One) return {a, 0};
  if (a == LambdaClass::Xi && b == LambdaClass::Xi)
    return {LambdaClass::One, 2};
  if (a == LambdaClass::Theta && b == LambdaClass::Theta)
    return {LambdaClass::Theta, 2};
  // xi * theta = theta * xi = delta * theta
  return {LambdaClass::Theta, 1};
}

const char* class_token(LambdaClass c) {
  switch (c) {
    case LambdaClass::One: return "1";
    case LambdaClass::Xi: return "xi";
    case LambdaClass::Theta: return "theta";
  }
  return "?";
}

std::int64_t class_pi_exponent(LambdaClass c) {
  switch (c) {
    case LambdaClass::One: return 0;
    case LambdaClass::Xi: return 1;
    case LambdaClass::Theta: return 2;
  }
  return 0;
}

LambdaScalar scalar_mul(const LambdaScalar& a, const LambdaScalar& b) {
  ClassProduct cp = class_mul(a.cls, b.cls);
  LambdaScalar r;
  r.cls = cp.cls;
  r.coeff = a.coeff * b.coeff * LaurentPoly::delta_power(cp.delta_shift);
  if (r.coeff.is_zero()) r.cls = LambdaClass::One;
  return r;
}

}  // namespace brd
