#pragma once
// The Euler ring U(T^r): integer combinations of generators χ(T^r/H⁺).

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eqbif/intlat.hpp"
#include "eqbif/torusrep.hpp"

namespace eqbif {

/// Multiplication rule for generators; kFlippedDimension swaps the two
/// branches of the dimension condition (mutation self-checks only).
enum class StarRule { kStandard, kFlippedDimension };

class EulerElement {
 public:
  using Terms = std::map<TorusSubgroup, Integer>;

  /// Θ of U(T^r).
  explicit EulerElement(std::size_t ambient_rank);

  static EulerElement zero(std::size_t r) { return EulerElement(r); }
  static EulerElement unit(std::size_t r);
  /// c · χ(T^r/H⁺).
  static EulerElement generator(const TorusSubgroup& h, const Integer& c = 1);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const TorusSubgroup& h) const;
  /// Coefficient of 𝕀.
  Integer unit_coefficient() const;

  /// Adds c·χ(T^r/H⁺); zero results are erased.
  void add_term(const TorusSubgroup& h, const Integer& c);

  EulerElement& operator+=(const EulerElement& other);
  EulerElement& operator-=(const EulerElement& other);
  EulerElement operator-() const;
  friend EulerElement operator+(EulerElement a, const EulerElement& b) {
    return a += b;
  }
  friend EulerElement operator-(EulerElement a, const EulerElement& b) {
    return a -= b;
  }
  friend EulerElement operator*(const Integer& c, const EulerElement& x);

  std::string to_string() const;

  friend bool operator==(const EulerElement&, const EulerElement&) = default;

 private:
  void check_rank(const EulerElement& other) const;

  std::size_t ambient_rank_;
  Terms terms_;
};

EulerElement linear_combine(std::span<const Integer> scalars,
                            std::span<const EulerElement> elements);

EulerElement star(const EulerElement& a, const EulerElement& b,
                  StarRule rule = StarRule::kStandard);

/// deg∇(−Id, B(V)) = (−𝕀)^{k0} ⋆ ∏_m (𝕀 − χ(T^r/H_m⁺))^{mult(m)}.
EulerElement deg_minus_id(const TorusRep& v, StarRule rule = StarRule::kStandard);

/// Terms with codim(H) = c.
EulerElement codim_part(const EulerElement& x, std::size_t c);

/// χ(T^r/H⁺) ↦ χ(T^{r+l}/(H×T^l)⁺).
EulerElement lift(const EulerElement& x, std::size_t l);

}  // namespace eqbif
