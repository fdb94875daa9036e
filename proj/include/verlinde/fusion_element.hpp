#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace verlinde {

// Integer combination of the basis tau_0, ..., tau_k of the level-k fusion
// ring. The coefficient vector always has length k+1; arithmetic is only
// defined between elements of equal level.
class FusionElement {
 public:
  explicit FusionElement(unsigned level)
      : level_(level), coeffs_(level + 1, Int(0)) {}

  FusionElement(unsigned level, std::vector<Int> coeffs)
      : level_(level), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(level) + 1)
      throw std::invalid_argument("FusionElement: coefficient count must be level+1");
  }

  // The basis element tau_l.
  static FusionElement basis(unsigned level, unsigned l) {
    if (l > level) throw std::out_of_range("FusionElement::basis: index exceeds level");
    FusionElement e(level);
    e.coeffs_[l] = 1;
    return e;
  }

  unsigned level() const { return level_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  const Int& coeff(unsigned l) const {
    if (l > level_) throw std::out_of_range("FusionElement::coeff");
    return coeffs_[l];
  }

  void set_coeff(unsigned l, Int c) {
    if (l > level_) throw std::out_of_range("FusionElement::set_coeff");
    coeffs_[l] = std::move(c);
  }

  void add_coeff(unsigned l, const Int& c) {
    if (l > level_) throw std::out_of_range("FusionElement::add_coeff");
    coeffs_[l] += c;
  }

  bool is_zero() const {
    for (const Int& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  // tau_l |-> tau_{k-l}, i.e. multiplication by tau_k; reverses the vector.
  FusionElement involution() const {
    FusionElement e(level_);
    for (unsigned l = 0; l <= level_; ++l) e.coeffs_[level_ - l] = coeffs_[l];
    return e;
  }

  friend bool operator==(const FusionElement&, const FusionElement&) = default;

  friend FusionElement operator+(const FusionElement& a, const FusionElement& b) {
    check_same_level(a, b);
    FusionElement c(a.level_);
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i)
      c.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return c;
  }

  friend FusionElement operator-(const FusionElement& a, const FusionElement& b) {
    check_same_level(a, b);
    FusionElement c(a.level_);
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i)
      c.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return c;
  }

  FusionElement operator-() const {
    FusionElement c(level_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c.coeffs_[i] = -coeffs_[i];
    return c;
  }

  friend FusionElement operator*(const Int& s, const FusionElement& a) {
    FusionElement c(a.level_);
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] = s * a.coeffs_[i];
    return c;
  }

  friend FusionElement operator*(const FusionElement& a, const Int& s) { return s * a; }

 private:
  static void check_same_level(const FusionElement& a, const FusionElement& b) {
    if (a.level_ != b.level_)
      throw std::invalid_argument("FusionElement: mixed levels");
  }

  unsigned level_;
  std::vector<Int> coeffs_;
};

inline FusionElement involution(const FusionElement& a) { return a.involution(); }

}  // namespace verlinde
