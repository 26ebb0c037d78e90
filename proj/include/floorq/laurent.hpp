#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace floorq {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in q^{1/2}. Exponents are stored doubled, so the
// monomial q^{e} lives under key 2e.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(int twice_exp, const BigInt& c = 1);

  bool is_zero() const { return c_.empty(); }
  // Doubled degree / lowest exponent. Throw std::domain_error on zero.
  int degree2() const;
  int low_degree2() const;
  BigInt coeff2(int twice_exp) const;
  const std::map<int, BigInt>& terms() const { return c_; }
  std::size_t size() const { return c_.size(); }

  bool is_symmetric() const;
  bool has_nonnegative_coeffs() const;
  BigInt eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& k);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& k) { return a *= k; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

  // Drops every term whose doubled exponent is below `twice_min`.
  void truncate_below(int twice_min);

  // "q^3 + 13*q^2 + 94*q + 404 + ... + q^-3"; half-integer powers as q^(5/2).
  std::string to_string() const;
  // {"2e": "coeff", ...} keyed by doubled exponent, descending.
  std::string to_json() const;
  static LaurentPoly from_json(const std::string& text);

 private:
  void add_term(int e2, const BigInt& c);
  std::map<int, BigInt> c_;
};

LaurentPoly quantum_integer(int k);
LaurentPoly quantum_square(int k);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r);

// Product keeping only the top `keep` integer codegrees (0..keep) of the result.
// Exact for the kept range when both inputs have nonnegative coefficients.
LaurentPoly mul_top(const LaurentPoly& p, const LaurentPoly& r, int keep);

// Throws std::domain_error when d does not divide p.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

// Coefficient of q^{deg(p) - i}. Throws on the zero polynomial.
BigInt codegree_coeff(const LaurentPoly& p, int i);

LaurentPoly substitute_q_squared(const LaurentPoly& p);

// Every coefficient of p - r is nonnegative.
bool poly_geq(const LaurentPoly& p, const LaurentPoly& r);

std::string exponent_string(int twice_exp);

}  // namespace floorq
