#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace verlinde {

namespace detail {

// Little-endian coefficient vectors. Integer polynomials stay integer under
// reduction modulo a monic integer polynomial, which keeps the hot paths
// free of per-term gcd normalization.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place remainder of a modulo the monic polynomial m.
inline void mod_monic(IntPoly& a, const IntPoly& m) {
  const std::size_t d = m.size() - 1;
  while (a.size() > d) {
    Int c = std::move(a.back());
    a.pop_back();
    if (c != 0) {
      const std::size_t base = a.size() - d;
      for (std::size_t j = 0; j < d; ++j) a[base + j] -= c * m[j];
    }
  }
}

// Quotient of a by the monic polynomial m; the division must be exact.
inline IntPoly div_exact_monic(IntPoly a, const IntPoly& m) {
  const std::size_t d = m.size() - 1;
  if (a.size() <= d) throw std::logic_error("div_exact_monic: degree underflow");
  IntPoly q(a.size() - d);
  for (std::size_t i = a.size(); i-- > d;) {
    Int c = std::move(a[i]);
    if (c != 0) {
      for (std::size_t j = 0; j < d; ++j) a[i - d + j] -= c * m[j];
      q[i - d] = std::move(c);
    }
  }
  for (std::size_t j = 0; j < d; ++j)
    if (a[j] != 0) throw std::logic_error("div_exact_monic: nonzero remainder");
  return q;
}

// x^N - 1 = prod_{d | N} Phi_d, so Phi_N is obtained by exact division of
// x^N - 1 by the Phi_d of all proper divisors. Monic with integer
// coefficients throughout. Cached per N; entries are immutable once stored.
inline const IntPoly& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  static std::map<unsigned, IntPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto compute = [](unsigned m, auto&& self) -> const IntPoly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    IntPoly p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d)
      if (m % d == 0) p = div_exact_monic(std::move(p), self(d, self));
    return cache.emplace(m, std::move(p)).first->second;
  };
  return compute(n, compute);
}

// Long division over Q[x]; returns {quotient, remainder}.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return {std::move(q), std::move(a)};
}

}  // namespace detail

// An exact element of Q(zeta_N), zeta_N = e^{2*pi*i/N}, held as the unique
// residue modulo Phi_N. Two values are equal as complex numbers iff their
// canonical coefficient vectors coincide; this makes exact zero-testing and
// integrality certification possible.
//
// Internally the coefficient vector is stored as integer numerators over one
// positive common denominator with unit content, an equivalent canonical
// form that keeps multiplication in integer arithmetic.
class Cyclotomic {
 public:
  // The zero element of Q(zeta_N).
  explicit Cyclotomic(unsigned order)
      : order_(checked_order(order)), num_(order, Int(0)), den_(1) {}

  static Cyclotomic zero(unsigned order) { return Cyclotomic(order); }

  static Cyclotomic one(unsigned order) { return from_rational(order, Rational(1)); }

  static Cyclotomic from_integer(unsigned order, const Int& n) {
    return from_rational(order, Rational(n));
  }

  static Cyclotomic from_rational(unsigned order, const Rational& r) {
    Cyclotomic c(order);
    std::vector<Int> raw(order, Int(0));
    raw[0] = numerator(r);
    c.assign_reduced(std::move(raw), denominator(r));
    return c;
  }

  // zeta_N^e, exponent reduced mod N.
  static Cyclotomic root_power(unsigned order, long long e) {
    Cyclotomic c(order);
    const long long n = static_cast<long long>(order);
    std::vector<Int> raw(order, Int(0));
    raw[static_cast<std::size_t>(((e % n) + n) % n)] = 1;
    c.assign_reduced(std::move(raw), 1);
    return c;
  }

  // sum_j raw[j] * zeta_N^j for an integer exponent-accumulation vector
  // (any length; exponents beyond deg Phi_N are folded in).
  static Cyclotomic from_exponent_sums(unsigned order, std::vector<Int> raw) {
    Cyclotomic c(order);
    c.assign_reduced(std::move(raw), 1);
    return c;
  }

  static Cyclotomic from_rational_coeffs(unsigned order,
                                         const std::vector<Rational>& coeffs) {
    Int den = 1;
    for (const Rational& r : coeffs) den = lcm(den, denominator(r));
    std::vector<Int> raw(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      raw[j] = numerator(coeffs[j]) * (den / denominator(coeffs[j]));
    Cyclotomic c(order);
    c.assign_reduced(std::move(raw), den);
    return c;
  }

  unsigned order() const { return order_; }

  // Canonical coefficient of zeta_N^j; zero for j >= deg Phi_N.
  Rational coeff(std::size_t j) const {
    if (j >= num_.size()) throw std::out_of_range("Cyclotomic::coeff");
    return make_rational(num_[j], den_);
  }

  std::vector<Rational> coeffs() const {
    std::vector<Rational> out(num_.size());
    for (std::size_t j = 0; j < num_.size(); ++j)
      out[j] = make_rational(num_[j], den_);
    return out;
  }

  bool is_zero() const {
    for (const Int& x : num_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) = default;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_order(a, b);
    Cyclotomic c(a.order_);
    std::vector<Int> raw(a.order_);
    for (std::size_t j = 0; j < raw.size(); ++j)
      raw[j] = a.num_[j] * b.den_ + b.num_[j] * a.den_;
    c.assign_canonical(std::move(raw), a.den_ * b.den_);
    return c;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return a + (-b);
  }

  Cyclotomic operator-() const {
    Cyclotomic c(*this);
    for (Int& x : c.num_) x = -x;
    return c;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_order(a, b);
    const std::size_t d = a.residue_length();
    std::vector<Int> raw(2 * d - 1 > 0 ? 2 * d - 1 : 1, Int(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.num_[j] == 0) continue;
        raw[i + j] += a.num_[i] * b.num_[j];
      }
    }
    Cyclotomic c(a.order_);
    c.assign_reduced(std::move(raw), a.den_ * b.den_);
    return c;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& r) {
    Cyclotomic c(a.order_);
    std::vector<Int> raw(a.num_);
    for (Int& x : raw) x *= numerator(r);
    c.assign_canonical(std::move(raw), a.den_ * denominator(r));
    return c;
  }

  friend Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return a * r; }

  friend Cyclotomic operator/(const Cyclotomic& a, const Rational& r) {
    if (r == 0) throw std::domain_error("Cyclotomic: division by zero rational");
    return a * make_rational(denominator(r), numerator(r));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  // Complex conjugation, zeta |-> zeta^{-1}. A field automorphism; an
  // element is real iff it equals its conjugate.
  Cyclotomic conj() const {
    std::vector<Int> raw(order_, Int(0));
    for (std::size_t j = 0; j < residue_length(); ++j) {
      if (num_[j] == 0) continue;
      raw[(order_ - j) % order_] += num_[j];
    }
    Cyclotomic c(order_);
    c.assign_reduced(std::move(raw), den_);
    return c;
  }

  // Field inverse via the extended Euclidean algorithm against Phi_N, which
  // is irreducible over Q, so the gcd with any nonzero residue is a constant.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero element");
    const detail::IntPoly& phi = detail::cyclotomic_polynomial(order_);
    detail::RatPoly r0(phi.size());
    for (std::size_t j = 0; j < phi.size(); ++j) r0[j] = Rational(phi[j]);
    detail::RatPoly r1(residue_length());
    for (std::size_t j = 0; j < r1.size(); ++j) r1[j] = make_rational(num_[j], den_);
    detail::trim(r1);
    detail::RatPoly t0, t1{Rational(1)};
    while (!r1.empty()) {
      auto [q, r2] = detail::divmod(std::move(r0), r1);
      detail::RatPoly t2 = t0;
      t2.resize(std::max(t2.size(), q.size() + t1.size()), Rational(0));
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
      }
      detail::trim(t2);
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is the constant gcd; t0 / r0 is the inverse modulo Phi_N.
    const Rational g = r0.front();
    std::vector<Rational> u(t0.size());
    for (std::size_t j = 0; j < t0.size(); ++j) u[j] = t0[j] / g;
    return from_rational_coeffs(order_, u);
  }

  // The value as a rational number, when the canonical form is constant.
  Rational as_rational() const {
    for (std::size_t j = 1; j < num_.size(); ++j)
      if (num_[j] != 0)
        throw NotAnInteger("Cyclotomic::as_rational: canonical form is not constant");
    return make_rational(num_[0], den_);
  }

  // Certifies the element is a rational integer and returns it.
  Int as_integer() const {
    Rational r = as_rational();
    if (denominator(r) != 1)
      throw NotAnInteger("Cyclotomic::as_integer: constant is not an integer");
    return numerator(r);
  }

  // Numeric value sum_j a_j e^{2*pi*i*j/N}. Accuracy <= 1e-12 relative for
  // |a_j| <= 1e6 and N <= 100. Exists for cross-checks only; the exact core
  // never consumes it.
  std::complex<double> to_complex() const {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < residue_length(); ++j) {
      if (num_[j] == 0) continue;
      const double c = to_double(make_rational(num_[j], den_));
      const double angle = two_pi * static_cast<double>(j) / order_;
      acc += std::complex<double>(c * std::cos(angle), c * std::sin(angle));
    }
    return acc;
  }

 private:
  static unsigned checked_order(unsigned order) {
    if (order == 0) throw std::invalid_argument("Cyclotomic: order must be >= 1");
    return order;
  }

  static void check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_)
      throw std::invalid_argument("Cyclotomic: mixed orders");
  }

  std::size_t residue_length() const {
    return detail::cyclotomic_polynomial(order_).size() - 1;
  }

  // Store raw (arbitrary degree) after reduction mod Phi_N.
  void assign_reduced(std::vector<Int> raw, Int den) {
    detail::mod_monic(raw, detail::cyclotomic_polynomial(order_));
    raw.resize(order_, Int(0));
    assign_canonical(std::move(raw), std::move(den));
  }

  // Store a vector already of residue degree; only normalizes content.
  void assign_canonical(std::vector<Int> raw, Int den) {
    raw.resize(order_, Int(0));
    if (den < 0) {
      den = -den;
      for (Int& x : raw) x = -x;
    }
    Int g = den;
    for (const Int& x : raw) {
      if (g == 1) break;
      g = gcd(g, x);
    }
    if (g > 1) {
      den /= g;
      for (Int& x : raw) x /= g;
    }
    bool all_zero = true;
    for (const Int& x : raw)
      if (x != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) den = 1;
    num_ = std::move(raw);
    den_ = std::move(den);
  }

  unsigned order_;
  std::vector<Int> num_;
  Int den_;
};

// zeta_N^e in canonical form; the free-function spelling used throughout.
inline Cyclotomic root_power(unsigned order, long long e) {
  return Cyclotomic::root_power(order, e);
}

inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }

}  // namespace verlinde
