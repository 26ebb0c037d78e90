#include "floorq/laurent.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace floorq {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) c_.emplace(0, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int twice_exp, const BigInt& c) {
  LaurentPoly p;
  p.add_term(twice_exp, c);
  return p;
}

int LaurentPoly::degree2() const {
  if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
  return c_.rbegin()->first;
}

int LaurentPoly::low_degree2() const {
  if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
  return c_.begin()->first;
}

BigInt LaurentPoly::coeff2(int twice_exp) const {
  auto it = c_.find(twice_exp);
  return it == c_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : c_) {
    auto it = c_.find(-e);
    if (it == c_.end() || it->second != c) return false;
  }
  return true;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  for (const auto& kv : c_)
    if (kv.second < 0) return false;
  return true;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& kv : c_) s += kv.second;
  return s;
}

void LaurentPoly::add_term(int e2, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(e2, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& kv : c_) kv.second *= k;
  return *this;
}

void LaurentPoly::truncate_below(int twice_min) {
  c_.erase(c_.begin(), c_.lower_bound(twice_min));
}

std::string exponent_string(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return "(" + std::to_string(e2) + "/2)";
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "q";
    if (e != 2) os << "^" << exponent_string(e);
  }
  return os.str();
}

std::string LaurentPoly::to_json() const {
  // Hand-rolled so key order is descending exponent rather than lexicographic.
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << ", ";
    first = false;
    os << "\"" << it->first << "\": \"" << it->second << "\"";
  }
  os << "}";
  return os.str();
}

LaurentPoly LaurentPoly::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    BigInt c(it.value().is_string() ? it.value().get<std::string>()
                                    : std::to_string(it.value().get<long long>()));
    p.add_term(std::stoi(it.key()), c);
  }
  return p;
}

LaurentPoly quantum_integer(int k) {
  if (k <= 0) throw std::domain_error("quantum_integer: k must be positive");
  LaurentPoly p;
  for (int e2 = k - 1; e2 >= -(k - 1); e2 -= 2) p += LaurentPoly::monomial(e2, 1);
  return p;
}

LaurentPoly quantum_square(int k) {
  LaurentPoly p;
  // [k]^2 = sum_{j} (k - |j|) q^j, |j| < k.
  for (int j = -(k - 1); j <= k - 1; ++j) p += LaurentPoly::monomial(2 * j, k - (j < 0 ? -j : j));
  return p;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }

LaurentPoly mul_top(const LaurentPoly& p, const LaurentPoly& r, int keep) {
  if (p.is_zero() || r.is_zero()) return {};
  const int top = p.degree2() + r.degree2();
  const int floor2 = top - 2 * keep;
  LaurentPoly out;
  const auto& pt = p.terms();
  const auto& rt = r.terms();
  for (auto a = pt.rbegin(); a != pt.rend(); ++a) {
    if (a->first + r.degree2() < floor2) break;
    for (auto b = rt.rbegin(); b != rt.rend(); ++b) {
      if (a->first + b->first < floor2) break;
      out += LaurentPoly::monomial(a->first + b->first, a->second * b->second);
    }
  }
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
  LaurentPoly rem = p;
  LaurentPoly quot;
  const int dtop = d.degree2();
  const BigInt& lead = d.terms().rbegin()->second;
  const int dlow = d.low_degree2();
  while (!rem.is_zero() && rem.degree2() - dtop + dlow >= rem.low_degree2()) {
    const int e = rem.degree2();
    const BigInt& c = rem.terms().rbegin()->second;
    if (c % lead != 0) break;
    LaurentPoly t = LaurentPoly::monomial(e - dtop, c / lead);
    quot += t;
    rem -= t * d;
  }
  if (!rem.is_zero()) throw std::domain_error("divide_exact: division is not exact");
  return quot;
}

BigInt codegree_coeff(const LaurentPoly& p, int i) {
  return p.coeff2(p.degree2() - 2 * i);
}

LaurentPoly substitute_q_squared(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(2 * e, c);
  return r;
}

bool poly_geq(const LaurentPoly& p, const LaurentPoly& r) {
  return (p - r).has_nonnegative_coeffs();
}

}  // namespace floorq
