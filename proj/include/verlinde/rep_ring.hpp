#pragma once

#include <map>
#include <stdexcept>

#include "fusion_element.hpp"
#include "rational.hpp"

namespace verlinde {

// Virtual character of SU(2) on the basis of irreducible characters chi_m,
// m = highest weight (dimension m+1). Sparse: no explicit zero entries.
class RepElement {
 public:
  RepElement() = default;

  // chi_m
  static RepElement character(unsigned m) {
    RepElement e;
    e.terms_[m] = 1;
    return e;
  }

  const std::map<unsigned, Int>& terms() const { return terms_; }

  Int coeff(unsigned m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

  RepElement& add_term(unsigned m, const Int& c) {
    if (c == 0) return *this;
    Int& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
    return *this;
  }

  friend bool operator==(const RepElement&, const RepElement&) = default;

  friend RepElement operator+(const RepElement& a, const RepElement& b) {
    RepElement c = a;
    for (const auto& [m, coeff] : b.terms_) c.add_term(m, coeff);
    return c;
  }

  friend RepElement operator-(const RepElement& a, const RepElement& b) {
    RepElement c = a;
    for (const auto& [m, coeff] : b.terms_) c.add_term(m, -coeff);
    return c;
  }

  friend RepElement operator*(const Int& s, const RepElement& a) {
    RepElement c;
    if (s != 0)
      for (const auto& [m, coeff] : a.terms_) c.terms_[m] = s * coeff;
    return c;
  }

 private:
  std::map<unsigned, Int> terms_;
};

// Clebsch-Gordan product, extended bilinearly:
// chi_m chi_m' = chi_{m+m'} + chi_{m+m'-2} + ... + chi_{|m-m'|}.
inline RepElement cg_product(const RepElement& a, const RepElement& b) {
  RepElement c;
  for (const auto& [m, ca] : a.terms()) {
    for (const auto& [mp, cb] : b.terms()) {
      const Int cc = ca * cb;
      const unsigned lo = m > mp ? m - mp : mp - m;
      for (unsigned t = lo; t <= m + mp; t += 2) c.add_term(t, cc);
    }
  }
  return c;
}

inline RepElement operator*(const RepElement& a, const RepElement& b) {
  return cg_product(a, b);
}

// Image of a basis character under the quotient map onto the level-k fusion
// ring: +/- a basis index, or zero on the reflection hyperplanes. sign
// carries the parity (-1)^r of the number of reflections needed.
struct FoldResult {
  int sign = 0;
  unsigned index = 0;

  friend bool operator==(const FoldResult&, const FoldResult&) = default;
};

// Folds chi_l into the level-k alcove. Shifted-index form: with
// m = l+1 mod 2(k+2), the walls sit at multiples of k+2; below the first
// wall the character survives as-is, above it one reflection flips the sign.
// O(1) and equivalent to iterating reflections across k+1, 2k+3, 3k+5, ...
inline FoldResult fold(unsigned l, unsigned k) {
  const unsigned period = 2 * (k + 2);
  const unsigned m = (l + 1) % period;
  if (m % (k + 2) == 0) return {0, 0};
  if (m <= k + 1) return {+1, m - 1};
  return {-1, 2 * k + 3 - m};
}

// Linear extension of fold: the quotient map onto the level-k basis.
inline FusionElement reduce(const RepElement& a, unsigned k) {
  FusionElement out(k);
  for (const auto& [m, c] : a.terms()) {
    const FoldResult f = fold(m, k);
    if (f.sign > 0)
      out.add_coeff(f.index, c);
    else if (f.sign < 0)
      out.add_coeff(f.index, -c);
  }
  return out;
}

// Section of reduce on the basis: tau_l lifts to chi_l.
inline RepElement lift(const FusionElement& a) {
  RepElement out;
  for (unsigned l = 0; l <= a.level(); ++l) out.add_term(l, a.coeff(l));
  return out;
}

}  // namespace verlinde
