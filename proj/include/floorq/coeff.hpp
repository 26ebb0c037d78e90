#pragma once

#include "floorq/diagram.hpp"
#include "floorq/laurent.hpp"

#include <vector>

namespace floorq {

// Sum over compositions (i_1..i_k) of l into positive parts of prod i_j.
BigInt F(int k, int l);
// Brute-force composition enumeration; small inputs only.
BigInt F_bruteforce(int k, int l);
// C(l+k-1, 2k-1), the generating-function closed form.
BigInt F_closed(int k, int l);
inline BigInt Phi(int l, int k) { return F(k, k + l); }

// Codegree-i coefficient of prod [a_j]^2. Uses Phi_i(k) when every a_j > i,
// otherwise expands the product.
BigInt coeff_product_of_squares(int i, const std::vector<int>& weights);

struct UVector {
  std::vector<int> u;
  std::vector<int> u_tilde;
  int codeg() const;
  bool operator==(const UVector&) const = default;
};

// C_i in lexicographic order of (u, u_tilde).
std::vector<UVector> enumerate_C(int i);

// Chain diagram on floors v_1..v_a: u_j sources at v_{j+1}, u~_j sinks at
// v_{a-j}, the rest at v_1 and v_a. Throws std::invalid_argument when a forced
// weight is not positive or a vector does not fit.
FloorDiagram build_D(int a, int b, int n, const UVector& uv);

// Nested-sum formula; binomials with negative arguments or bottom > top are 0.
BigInt nu_tilde(const std::vector<int>& u, long long a, long long b, long long n, long long s);
// Throws std::domain_error unless b >= i and an+b >= i+2s, with i = |u|.
BigInt nu(const UVector& uv, int a, int b, int n, int s);

// Requires an+b >= i+2s, b > i, a > i; throws std::domain_error otherwise.
BigInt coeff_closed_form(int i, int a, int b, int n, int s);

bool in_U(int i, int a, int b, int n, int s);

}  // namespace floorq
