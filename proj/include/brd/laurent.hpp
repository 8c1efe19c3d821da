#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>

namespace brd {

using Int = boost::multiprecision::cpp_int;

// Exact Laurent polynomial in one variable d (the loop parameter delta),
// exponents in Z, coefficients arbitrary-precision integers.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly constant(Int c);
  static LaurentPoly delta_power(std::int64_t exp, Int coeff = Int(1));

  bool is_zero() const { return terms_.empty(); }
  // True when the polynomial is exactly coeff*d^exp with coeff == 1.
  bool is_unit_delta_power(std::int64_t& exp) const;
  // True when the polynomial has a single term; reports it.
  bool is_single_term(std::int64_t& exp, Int& coeff) const;

  Int eval_one() const;  // evaluation at d = 1

  const std::map<std::int64_t, Int>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

private:
  void add_term(std::int64_t exp, const Int& coeff);
  std::map<std::int64_t, Int> terms_;
};

// Checked exponent addition; delta exponents must never wrap silently.
std::int64_t checked_exp_add(std::int64_t a, std::int64_t b);

// The scalar monoid is generated by delta^(+-1), xi, theta subject to
// xi^2 = delta^2, xi*theta = delta*theta, theta^2 = delta^2*theta.  Every
// element is delta^k * cls with cls one of the three classes below.
enum class LambdaClass : std::uint8_t { One = 0, Xi = 1, Theta = 2 };

struct ClassProduct {
  LambdaClass cls;
  std::int64_t delta_shift;
};

// Product of two classes: resulting class and the delta power produced.
ClassProduct class_mul(LambdaClass a, LambdaClass b);

const char* class_token(LambdaClass c);  // "1", "xi", "theta"

// pi specialization on classes: 1 -> d^0, xi -> d^1, theta -> d^2.
std::int64_t class_pi_exponent(LambdaClass c);

// A class together with an exact Laurent coefficient.  Zero coefficient
// normalizes the class to One.
struct LambdaScalar {
  LambdaClass cls = LambdaClass::One;
  LaurentPoly coeff = LaurentPoly::constant(1);

  static LambdaScalar one() { return {}; }
  static LambdaScalar delta_power(std::int64_t k) {
    return {LambdaClass::One, LaurentPoly::delta_power(k)};
  }
  bool operator==(const LambdaScalar& o) const {
    return cls == o.cls && coeff == o.coeff;
  }
};

LambdaScalar scalar_mul(const LambdaScalar& a, const LambdaScalar& b);

}  // namespace brd
