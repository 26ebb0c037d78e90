#pragma once

#include "floorq/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace floorq {

using Rational = boost::multiprecision::cpp_rational;

// P^(n)(x) = sum_l (-1)^l C(n,l) P(x+l), applied to a sampled sequence.
std::vector<Rational> discrete_derivative(const std::vector<Rational>& values, int n);

// Polynomial in one or more variables with rational coefficients, keyed by
// exponent vectors.
class RationalPoly {
 public:
  explicit RationalPoly(int nvars = 1) : nvars_(nvars) {}
  int nvars() const { return nvars_; }
  void add_term(const std::vector<int>& exps, const Rational& c);
  Rational eval(const std::vector<Rational>& x) const;
  Rational eval1(const Rational& x) const { return eval({x}); }
  // Highest exponent of variable k (-1 for the zero polynomial).
  int degree_in(int k) const;
  Rational coeff(const std::vector<int>& exps) const;
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

// Unique polynomial of degree < #points; throws on duplicate x.
RationalPoly interpolate(const std::vector<std::pair<long long, Rational>>& points);

struct Axis {
  std::string name;
  long long lo = 0;
  int degree = 0;  // claimed degree; the grid uses degree+2 points
  int held_out = 1;  // extra points lo+degree+2, lo+degree+3, ... checked against the fit
};

struct PolyFitReport {
  bool ok = true;
  std::vector<Axis> axes;
  RationalPoly fit{1};
  std::vector<int> measured_degrees;      // from the full grid
  std::vector<std::string> residuals;     // held-out residuals in axis order, "0" when exact
  std::vector<std::string> messages;
  std::size_t samples = 0;
  std::string to_json() const;
};

using Sampler = std::function<BigInt(const std::vector<long long>&)>;

// Samples the tensor grid prod_k {lo_k .. lo_k + degree_k + 1}, computes
// Newton forward differences along every axis, and checks that the measured
// degree in each variable is exactly the claimed one. The fitted polynomial is
// then tested on held_out_k points per axis starting at lo_k + degree_k + 2,
// with the other coordinates at their lower corner.
PolyFitReport verify_polynomiality(const Sampler& sampler, const std::vector<Axis>& axes, int jobs = 1);

}  // namespace floorq
