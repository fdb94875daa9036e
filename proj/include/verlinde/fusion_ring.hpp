#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "fusion_element.hpp"
#include "polytope.hpp"
#include "rep_ring.hpp"

namespace verlinde {

// The three independent product constructions. They compute identical
// products; keeping all three alive is the point of the library.
enum class Backend { Fold, Polytope, Evaluation };

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Fold: return "fold";
    case Backend::Polytope: return "polytope";
    case Backend::Evaluation: return "evaluation";
  }
  return "?";
}

// Selects the regular evaluation point j(q^s) of the cyclic subgroup of the
// maximal torus, s = 1, ..., k+1, with q the primitive (2k+4)-th root of
// unity. At these points every level-k character takes its defining values.
struct EvalPoint {
  unsigned level;
  unsigned s;

  EvalPoint(unsigned level_, unsigned s_) : level(level_), s(s_) {
    if (s < 1 || s > level + 1)
      throw std::out_of_range("EvalPoint: s must lie in [1, level+1]");
  }
};

// Exact value of the virtual character at j(q^s). Computed as the Weyl
// character Laurent sum tau_l(j(q^s)) = sum_{i=0..l} q^{s(l-2i)}, which
// avoids any division, then reduced to canonical form once.
inline Cyclotomic evaluate(const FusionElement& a, const EvalPoint& p) {
  if (a.level() != p.level)
    throw std::invalid_argument("evaluate: element level does not match point");
  const unsigned n = 2 * a.level() + 4;
  std::vector<Int> raw(n, Int(0));
  for (unsigned l = 0; l <= a.level(); ++l) {
    const Int& c = a.coeff(l);
    if (c == 0) continue;
    for (unsigned i = 0; i <= l; ++i) {
      const long long e = static_cast<long long>(p.s) *
                          (static_cast<long long>(l) - 2 * static_cast<long long>(i));
      raw[static_cast<std::size_t>(((e % n) + n) % n)] += c;
    }
  }
  return Cyclotomic::from_exponent_sums(n, std::move(raw));
}

// Orthogonality weight (2 - q^{2s} - q^{-2s}) / (2k+4). Real and positive;
// numerically equals sin^2(pi s/(k+2)) / (k/2+1).
inline Cyclotomic weight(unsigned k, unsigned s) {
  if (s < 1 || s > k + 1) throw std::out_of_range("weight: s must lie in [1, k+1]");
  const unsigned n = 2 * k + 4;
  std::vector<Int> raw(n, Int(0));
  raw[0] += 2;
  raw[(2 * s) % n] -= 1;
  raw[(n - (2 * s) % n) % n] -= 1;
  return Cyclotomic::from_exponent_sums(n, std::move(raw)) / Rational(n);
}

namespace detail {

// Per-level tables reused by the evaluation backend, coefficient recovery
// and the moduli sums: basis character values, weights, and their products
// (the kernel of the orthogonality inversion). Compute-once, then shared
// read-only.
struct EvalTable {
  std::vector<Cyclotomic> weights;                    // [s-1]
  std::vector<std::vector<Cyclotomic>> basis_values;  // [l][s-1]
  std::vector<std::vector<Cyclotomic>> recovery;      // [l][s-1] = weights * basis_values
};

inline std::shared_ptr<const EvalTable> eval_table(unsigned k) {
  static std::map<unsigned, std::shared_ptr<const EvalTable>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<EvalTable>();
  table->weights.reserve(k + 1);
  for (unsigned s = 1; s <= k + 1; ++s) table->weights.push_back(weight(k, s));
  table->basis_values.resize(k + 1);
  table->recovery.resize(k + 1);
  for (unsigned l = 0; l <= k; ++l) {
    for (unsigned s = 1; s <= k + 1; ++s) {
      Cyclotomic v = evaluate(FusionElement::basis(k, l), EvalPoint(k, s));
      table->recovery[l].push_back(table->weights[s - 1] * v);
      table->basis_values[l].push_back(std::move(v));
    }
  }
  cache.emplace(k, table);
  return table;
}

// 0/1 structure constants from the polytope rule, memoized per level as a
// flat (k+1)^3 tensor.
inline std::shared_ptr<const std::vector<unsigned char>> polytope_tensor(unsigned k) {
  static std::map<unsigned, std::shared_ptr<const std::vector<unsigned char>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  const std::size_t n = k + 1;
  auto tensor = std::make_shared<std::vector<unsigned char>>(n * n * n);
  for (unsigned l1 = 0; l1 <= k; ++l1)
    for (unsigned l2 = 0; l2 <= k; ++l2)
      for (unsigned l3 = 0; l3 <= k; ++l3)
        (*tensor)[(l1 * n + l2) * n + l3] =
            static_cast<unsigned char>(fusion_coeff(k, l1, l2, l3));
  cache.emplace(k, tensor);
  return tensor;
}

}  // namespace detail

// Recovers the unique ring element with the given values at j(q^s),
// s = 1..k+1, through the orthogonality relations:
//   c_l = sum_s weight(k,s) tau_l(j(q^s)) v[s].
// Every recovered coefficient is certified to be a rational integer;
// anything else means v is not the value vector of a ring element.
inline FusionElement from_values(unsigned k, const std::vector<Cyclotomic>& v) {
  if (v.size() != static_cast<std::size_t>(k) + 1)
    throw std::invalid_argument("from_values: need exactly k+1 values");
  const unsigned n = 2 * k + 4;
  for (const Cyclotomic& x : v)
    if (x.order() != n)
      throw std::invalid_argument("from_values: value has wrong cyclotomic order");
  const auto table = detail::eval_table(k);
  FusionElement out(k);
  for (unsigned l = 0; l <= k; ++l) {
    Cyclotomic acc(n);
    for (unsigned s = 1; s <= k + 1; ++s) acc += table->recovery[l][s - 1] * v[s - 1];
    try {
      out.set_coeff(l, acc.as_integer());
    } catch (const NotAnInteger&) {
      throw IntegralityViolation("from_values: coefficient of tau_" +
                                 std::to_string(l) + " is not an integer");
    }
  }
  return out;
}

// Coefficient of tau_l. The same number is recomputable as the orthogonality
// sum over evaluation points; multiplicity_table in moduli.hpp does exactly
// that, and the two must agree.
inline Int multiplicity(const FusionElement& a, unsigned l) {
  return a.coeff(l);
}

// Product in the level-k fusion ring under the chosen backend.
//   Fold:       lift to the representation ring, Clebsch-Gordan, fold back.
//   Polytope:   bilinear sum over the closed-form structure constants.
//   Evaluation: multiply the value vectors pointwise and invert through the
//               orthogonality relations (integrality certified).
inline FusionElement fusion_mul(const FusionElement& a, const FusionElement& b,
                                Backend backend = Backend::Fold) {
  if (a.level() != b.level())
    throw std::invalid_argument("fusion_mul: mixed levels");
  const unsigned k = a.level();
  switch (backend) {
    case Backend::Fold:
      return reduce(cg_product(lift(a), lift(b)), k);
    case Backend::Polytope: {
      const auto tensor = detail::polytope_tensor(k);
      const std::size_t n = k + 1;
      FusionElement out(k);
      for (unsigned l1 = 0; l1 <= k; ++l1) {
        if (a.coeff(l1) == 0) continue;
        for (unsigned l2 = 0; l2 <= k; ++l2) {
          if (b.coeff(l2) == 0) continue;
          const Int c = a.coeff(l1) * b.coeff(l2);
          for (unsigned l3 = 0; l3 <= k; ++l3)
            if ((*tensor)[(l1 * n + l2) * n + l3]) out.add_coeff(l3, c);
        }
      }
      return out;
    }
    case Backend::Evaluation: {
      std::vector<Cyclotomic> values;
      values.reserve(k + 1);
      for (unsigned s = 1; s <= k + 1; ++s)
        values.push_back(evaluate(a, EvalPoint(k, s)) * evaluate(b, EvalPoint(k, s)));
      return from_values(k, values);
    }
  }
  throw std::logic_error("fusion_mul: unknown backend");
}

inline FusionElement operator*(const FusionElement& a, const FusionElement& b) {
  return fusion_mul(a, b);
}

}  // namespace verlinde
