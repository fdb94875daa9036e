#pragma once

#include <stdexcept>

#include "rational.hpp"

namespace verlinde {

// A rational point of the unit cube [0,1]^3.
struct TriplePoint {
  Rational u1, u2, u3;
};

// Membership in the closed polytope cut out by the three triangle
// inequalities and u1+u2+u3 <= 2. Boundary points belong to the polytope;
// the interesting coefficients sit exactly on the walls, so coordinates are
// exact rationals, never floats.
inline bool in_polytope(const TriplePoint& p) {
  for (const Rational* u : {&p.u1, &p.u2, &p.u3})
    if (*u < 0 || *u > 1)
      throw std::domain_error("in_polytope: coordinate outside [0,1]");
  return p.u3 <= p.u1 + p.u2 && p.u1 <= p.u2 + p.u3 && p.u2 <= p.u3 + p.u1 &&
         p.u1 + p.u2 + p.u3 <= 2;
}

// Level-k fusion coefficient in closed form: 1 iff l1+l2+l3 is even and
// (l1/k, l2/k, l3/k) lies in the polytope. k = 0 leaves only the forced
// coefficient of the one-element basis.
inline int fusion_coeff(unsigned k, unsigned l1, unsigned l2, unsigned l3) {
  if (l1 > k || l2 > k || l3 > k)
    throw std::out_of_range("fusion_coeff: index exceeds level");
  if (k == 0) return 1;
  if ((l1 + l2 + l3) % 2 != 0) return 0;
  const Rational kk(k);
  return in_polytope({Rational(l1) / kk, Rational(l2) / kk, Rational(l3) / kk}) ? 1 : 0;
}

}  // namespace verlinde
