#pragma once
// Exact integer linear algebra: Hermite/Smith normal forms, lattices and
// closed subgroups of tori encoded by their annihilator lattices.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace eqbif {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Builds from rows; every row must have the same length.
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> to_rows() const;
  const std::vector<Integer>& entries() const noexcept { return data_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  /// Exact determinant (Bareiss); square matrices only.
  Integer determinant() const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix& a,
                                          const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithDecomposition {
  IntMatrix P;  // rows x rows, unimodular
  IntMatrix Q;  // cols x cols, unimodular
  IntMatrix Q_inverse;
  IntMatrix D;  // P * R * Q
  std::vector<Integer> invariant_factors;  // d_1 | d_2 | ... , all > 0
};

/// Smith normal form with transforms: P·R·Q = D.
SmithDecomposition snf(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice of `m`: positive pivots,
/// entries above each pivot reduced into [0, pivot), zero rows removed.
IntMatrix hermite_form(const IntMatrix& m);

/// A sublattice of Z^r, stored by its canonical Hermite basis.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank);
  /// Lattice spanned by `generators` (each of length ambient_rank).
  Lattice(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  Lattice sum(const Lattice& other) const;
  bool contains(std::span<const Integer> v) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend std::strong_ordering operator<=>(const Lattice& a, const Lattice& b);

 private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

/// Closed subgroup H of T^r = {e^{2πiq}}: the common kernel of the characters
/// in its annihilator lattice. Two subgroups are equal iff encodings are.
class TorusSubgroup {
 public:
  /// The full torus T^r.
  explicit TorusSubgroup(std::size_t ambient_rank);
  explicit TorusSubgroup(Lattice annihilator);

  std::size_t ambient_rank() const noexcept {
    return annihilator_.ambient_rank();
  }
  const Lattice& annihilator() const noexcept { return annihilator_; }
  std::size_t dim() const noexcept {
    return ambient_rank() - annihilator_.rank();
  }
  std::size_t codim() const noexcept { return annihilator_.rank(); }
  bool is_full() const noexcept { return annihilator_.rank() == 0; }

  /// Annihilator basis rows (empty for the full torus).
  std::vector<IntVector> characters() const {
    return annihilator_.basis().to_rows();
  }
  std::string to_string() const;

  friend bool operator==(const TorusSubgroup&, const TorusSubgroup&) = default;
  friend std::strong_ordering operator<=>(const TorusSubgroup& a,
                                          const TorusSubgroup& b) {
    return a.annihilator_ <=> b.annihilator_;
  }

 private:
  Lattice annihilator_;
};

/// Subgroup cut out by the given characters (H_k for a single character k).
TorusSubgroup subgroup_canonical(std::size_t r,
                                 const std::vector<IntVector>& characters);
TorusSubgroup subgroup_canonical(std::size_t r,
                                 const std::vector<std::vector<std::int64_t>>& characters);

TorusSubgroup subgroup_intersect(const TorusSubgroup& a,
                                 const TorusSubgroup& b);

/// Exactly codim(H) characters k_j = d_j (Q^{-1})^T e_j whose kernels
/// intersect to H. Empty for the full torus.
std::vector<IntVector> codim_generators(const TorusSubgroup& h);

/// Membership of e^{2πiq}.
bool contains(const TorusSubgroup& h, std::span<const Rational> q);

/// H × T^l inside T^{r+l}.
TorusSubgroup extend_by_full_torus(const TorusSubgroup& h, std::size_t l);

IntVector to_int_vector(std::span<const std::int64_t> v);

}  // namespace eqbif
