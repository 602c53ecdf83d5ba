#pragma once
// Orthogonal torus representations R[k0,0] ⊕ R[k1,m1] ⊕ ... stored as a
// trivial multiplicity plus a map of sign-canonical weights.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eqbif/intlat.hpp"

namespace eqbif {

using Weight = std::vector<std::int64_t>;

/// Flips `w` so its first nonzero coordinate is positive (R[1,m] ≈ R[1,-m]).
Weight sign_canonical(Weight w);
bool is_zero_weight(std::span<const std::int64_t> w);

/// Selects the tensor decomposition rule; kSignCollapsed is a deliberately
/// broken variant used by mutation self-checks.
enum class TensorRule { kStandard, kSignCollapsed };

class TorusRep {
 public:
  explicit TorusRep(std::size_t ambient_rank, std::int64_t trivial_mult = 0);

  /// R[k, m]; m = 0 adds k trivial copies.
  static TorusRep irreducible(Weight m, std::int64_t k = 1);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::int64_t trivial_mult() const noexcept { return trivial_mult_; }
  const std::map<Weight, std::int64_t>& weights() const noexcept {
    return weights_;
  }
  std::int64_t dim() const;
  std::int64_t multiplicity(const Weight& m) const;
  bool is_zero() const { return trivial_mult_ == 0 && weights_.empty(); }

  /// Adds k copies of R[1,m] (k >= 0).
  void add(Weight m, std::int64_t k = 1);

  std::string to_string() const;

  friend bool operator==(const TorusRep&, const TorusRep&) = default;

 private:
  std::size_t ambient_rank_;
  std::int64_t trivial_mult_;
  std::map<Weight, std::int64_t> weights_;
};

TorusRep direct_sum(const TorusRep& v, const TorusRep& w);

/// External tensor W ⊗ V of a T^r- and a T^l-representation over T^{r+l}.
TorusRep tensor(const TorusRep& w, const TorusRep& v,
                TensorRule rule = TensorRule::kStandard);

/// Character at e^{2πiq}: k0 + Σ 2·mult(m)·cos(2π⟨m,q⟩).
double character(const TorusRep& v, std::span<const Rational> q);

}  // namespace eqbif
