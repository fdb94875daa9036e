#pragma once

#include <stdexcept>

#include "errors.hpp"
#include "fusion_element.hpp"
#include "fusion_ring.hpp"
#include "rational.hpp"

namespace verlinde {

// Symplectic volumes of the torus fixed-point manifolds behind the two
// doubles. The quarter ratio is what forces even levels for the SO(3)
// double: a level-k pre-quantization must give integer symplectic area
// k * vol on every 2-cycle.
inline const Rational kVolumeTorusSquare{2};            // T x T in D(SU(2))
inline const Rational kVolumeSo3TorusSquare{1, 2};      // T' x T' in D(SO(3))

// Conjugacy class C_n of exp((n/k) rho) at level k.
struct ClassLabel {
  unsigned level;
  unsigned n;

  ClassLabel(unsigned level_, unsigned n_) : level(level_), n(n_) {
    if (level < 1) throw std::invalid_argument("ClassLabel: level must be >= 1");
    if (n > level) throw std::out_of_range("ClassLabel: n must lie in [0, level]");
  }
};

// One of the four level-k pre-quantizations of D(SO(3)): a character phi of
// Z_2 x Z_2, stored by its value pair (phi(1,0), phi(0,1)) in {+1,-1}^2.
// Storing values rather than an opaque label removes any inconsistent-input
// class, and delta_{phi,1} is computed, never passed in.
//
// Note on labeling: which of the three nontrivial characters gets which
// name is a convention (fixed elsewhere through a specific level-2
// pre-quantization); it cannot affect results here because all three
// nontrivial characters produce the identical fusion element.
class So3Prequantization {
 public:
  So3Prequantization(int sign10, int sign01) : sign10_(sign10), sign01_(sign01) {
    if ((sign10 != 1 && sign10 != -1) || (sign01 != 1 && sign01 != -1))
      throw std::invalid_argument("So3Prequantization: signs must be +1 or -1");
  }

  static So3Prequantization trivial() { return {+1, +1}; }

  int sign10() const { return sign10_; }
  int sign01() const { return sign01_; }

  // phi(u1, u2) = phi(1,0)^{u1} phi(0,1)^{u2}
  int value(unsigned u1, unsigned u2) const {
    int v = 1;
    if (u1 % 2) v *= sign10_;
    if (u2 % 2) v *= sign01_;
    return v;
  }

  bool is_trivial() const { return sign10_ == 1 && sign01_ == 1; }

  friend bool operator==(const So3Prequantization&, const So3Prequantization&) = default;

 private:
  int sign10_;
  int sign01_;
};

// The conjugacy class through exp(u rho) carries a level-k pre-quantization
// iff k*u is an integer.
inline bool prequantizable_conjugacy(unsigned k, const Rational& u) {
  if (k < 1) throw std::invalid_argument("prequantizable_conjugacy: level must be >= 1");
  if (u < 0 || u > 1)
    throw std::domain_error("prequantizable_conjugacy: u outside [0,1]");
  return is_integral(Rational(k) * u);
}

// D(SO(3)) is pre-quantizable exactly at even levels (k = 0 vacuously).
inline bool prequantizable_double_so3(unsigned k) { return k % 2 == 0; }

// Q(C_n) = tau_n. The central class n = k flows through uniformly.
inline FusionElement quantize_conjugacy(const ClassLabel& c) {
  return FusionElement::basis(c.level, c.n);
}

// Q(D(SU(2))) = sum_{j=0}^{[k/2]} (k+1-2j) tau_{2j}, which also equals
// sum_n tau_n^2; its value at j(q^s) is the inverse orthogonality weight.
inline FusionElement quantize_double_su2(unsigned k) {
  FusionElement out(k);
  for (unsigned j = 0; 2 * j <= k; ++j) out.set_coeff(2 * j, Int(k + 1 - 2 * j));
  return out;
}

// Q(S^4) = sum_{n=0}^k tau_n; evaluations vanish at every even s.
inline FusionElement quantize_s4(unsigned k) {
  FusionElement out(k);
  for (unsigned n = 0; n <= k; ++n) out.set_coeff(n, 1);
  return out;
}

// The alternating element tau_0 - tau_2 + tau_4 - ...; concentrated at the
// midpoint evaluation: value k/2+1 at s = k/2+1, zero at every other s.
inline FusionElement chi_element(unsigned k) {
  if (k % 2 != 0) throw NotPrequantizable("chi_element: level must be even");
  FusionElement out(k);
  for (unsigned j = 0; 2 * j <= k; ++j) out.set_coeff(2 * j, j % 2 == 0 ? 1 : -1);
  return out;
}

// Level-k quantization of D(SO(3)) under the pre-quantization labeled phi:
//   (1/4) sum_j (k+1-2j + (-1)^{j+k/2} (-1+4 delta_{phi,1})) tau_{2j}.
// Equivalently (Q(D(SU(2))) + (-1)^{k/2}(-1+4 delta) chi) / 4. Every
// coefficient must come out a nonnegative integer; anything else is a bug.
inline FusionElement quantize_double_so3(unsigned k, const So3Prequantization& phi) {
  if (!prequantizable_double_so3(k))
    throw NotPrequantizable("quantize_double_so3: level must be even");
  const int delta_term = phi.is_trivial() ? 3 : -1;  // -1 + 4 delta_{phi,1}
  FusionElement out(k);
  for (unsigned j = 0; 2 * j <= k; ++j) {
    const int parity = (j + k / 2) % 2 == 0 ? 1 : -1;
    const Int numer = Int(k + 1 - 2 * j) + parity * delta_term;
    if (numer < 0 || numer % 4 != 0)
      throw ConsistencyError("quantize_double_so3: coefficient not a nonnegative integer");
    out.set_coeff(2 * j, numer / 4);
  }
  return out;
}

// Quantization of a fusion product of spaces is the fusion product of the
// quantizations.
inline FusionElement quantize_fusion_product(const FusionElement& a,
                                             const FusionElement& b) {
  return fusion_mul(a, b);
}

}  // namespace verlinde
