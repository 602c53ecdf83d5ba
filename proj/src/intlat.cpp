#include "eqbif/intlat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "eqbif/errors.hpp"

namespace eqbif {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MALFORMED_INPUT";
    case ErrorCode::kRankMismatch: return "RANK_MISMATCH";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kDimMismatch: return "DIM_MISMATCH";
    case ErrorCode::kB6Trivial: return "B6_TRIVIAL";
    case ErrorCode::kUnvalidatedSpec: return "UNVALIDATED_SPEC";
    case ErrorCode::kCutoffInsufficient: return "CUTOFF_INSUFFICIENT";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kRouteMismatch: return "ROUTE_MISMATCH";
    case ErrorCode::kDivergence: return "DIVERGENCE";
  }
  return "UNKNOWN";
}

namespace {

std::strong_ordering compare_int(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Floor division quotient.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

class RowOps {
 public:
  explicit RowOps(IntMatrix& m) : m_(m) {}
  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m_.cols(); ++c) std::swap(m_(i, c), m_(j, c));
  }
  // row i -= q * row j
  void axpy(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m_.cols(); ++c) m_(i, c) -= q * m_(j, c);
  }
  void negate(std::size_t i) {
    for (std::size_t c = 0; c < m_.cols(); ++c) m_(i, c) = -m_(i, c);
  }

 private:
  IntMatrix& m_;
};

class ColOps {
 public:
  explicit ColOps(IntMatrix& m) : m_(m) {}
  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m_.rows(); ++r) std::swap(m_(r, i), m_(r, j));
  }
  // col i -= q * col j
  void axpy(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m_.rows(); ++r) m_(r, i) -= q * m_(r, j);
  }

 private:
  IntMatrix& m_;
};

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw InputError(ErrorCode::kLengthMismatch,
                       "row " + std::to_string(i) + " has length " +
                           std::to_string(rows[i].size()) + ", expected " +
                           std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw InputError(ErrorCode::kLengthMismatch, "matrix product shape mismatch");
  }
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) {
    throw InputError(ErrorCode::kLengthMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      RowOps(a).swap(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (auto c = compare_int(a.data_[i], b.data_[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

IntMatrix hermite_form(const IntMatrix& m) {
  IntMatrix a = m;
  RowOps ops(a);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    // Euclid on the column below pivot_row.
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = pivot_row; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        if (best == a.rows() || abs(a(i, col)) < abs(a(best, col))) best = i;
      }
      if (best == a.rows()) break;
      ops.swap(pivot_row, best);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        ops.axpy(i, pivot_row, trunc_div(a(i, col), a(pivot_row, col)));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(pivot_row, col) == 0) continue;
    if (a(pivot_row, col) < 0) ops.negate(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i)
      ops.axpy(i, pivot_row, floor_div(a(i, col), a(pivot_row, col)));
    ++pivot_row;
  }
  IntMatrix out(pivot_row, a.cols());
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

SmithDecomposition snf(const IntMatrix& m) {
  const std::size_t p = m.rows();
  const std::size_t r = m.cols();
  SmithDecomposition s{IntMatrix::identity(p), IntMatrix::identity(r),
                       IntMatrix::identity(r), m, {}};
  IntMatrix& d = s.D;
  RowOps drow(d), prow(s.P);
  ColOps dcol(d), qcol(s.Q);
  RowOps qinv_row(s.Q_inverse);

  // Column op col_i -= q col_j applied to D and Q; Q^{-1} gets row_j += q row_i.
  auto col_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {
    dcol.axpy(i, j, q);
    qcol.axpy(i, j, q);
    qinv_row.axpy(j, i, -q);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    dcol.swap(i, j);
    qcol.swap(i, j);
    qinv_row.swap(i, j);
  };
  auto row_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {
    drow.axpy(i, j, q);
    prow.axpy(i, j, q);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    drow.swap(i, j);
    prow.swap(i, j);
  };

  const std::size_t n = std::min(p, r);
  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t bi = p, bj = r;
    for (std::size_t i = t; i < p; ++i)
      for (std::size_t j = t; j < r; ++j)
        if (d(i, j) != 0 && (bi == p || abs(d(i, j)) < abs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == p) break;
    row_swap(t, bi);
    col_swap(t, bj);

    for (;;) {
      for (std::size_t i = t + 1; i < p; ++i)
        if (d(i, t) != 0) row_axpy(i, t, trunc_div(d(i, t), d(t, t)));
      for (std::size_t j = t + 1; j < r; ++j)
        if (d(t, j) != 0) col_axpy(j, t, trunc_div(d(t, j), d(t, t)));

      // Remainders left in the pivot row/column: move the smallest in.
      std::size_t ri = p, cj = r;
      for (std::size_t i = t + 1; i < p; ++i)
        if (d(i, t) != 0 && (ri == p || abs(d(i, t)) < abs(d(ri, t)))) ri = i;
      for (std::size_t j = t + 1; j < r; ++j)
        if (d(t, j) != 0 && (cj == r || abs(d(t, j)) < abs(d(t, cj)))) cj = j;
      if (ri != p || cj != r) {
        if (ri != p && (cj == r || abs(d(ri, t)) <= abs(d(t, cj))))
          row_swap(t, ri);
        else
          col_swap(t, cj);
        continue;
      }

      // Divisibility of the trailing block by the pivot.
      std::size_t bad = p;
      for (std::size_t i = t + 1; i < p && bad == p; ++i)
        for (std::size_t j = t + 1; j < r; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == p) break;
      row_axpy(t, bad, Integer(-1));
    }
    if (d(t, t) < 0) {
      drow.negate(t);
      prow.negate(t);
    }
    s.invariant_factors.push_back(d(t, t));
  }
  return s;
}

Lattice::Lattice(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

Lattice::Lattice(std::size_t ambient_rank,
                 const std::vector<IntVector>& generators)
    : ambient_rank_(ambient_rank),
      basis_(hermite_form(IntMatrix::from_rows(generators, ambient_rank))) {}

Lattice Lattice::sum(const Lattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) {
    throw InputError(ErrorCode::kRankMismatch,
                     "lattice ambient ranks differ: " +
                         std::to_string(ambient_rank_) + " vs " +
                         std::to_string(other.ambient_rank_));
  }
  std::vector<IntVector> rows = basis_.to_rows();
  for (auto& row : other.basis_.to_rows()) rows.push_back(std::move(row));
  return Lattice(ambient_rank_, rows);
}

bool Lattice::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_) {
    throw InputError(ErrorCode::kLengthMismatch, "vector length mismatch");
  }
  // Walk the echelon basis, clearing pivots.
  IntVector rest(v.begin(), v.end());
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    while (basis_(i, col) == 0) {
      if (rest[col] != 0) return false;
      ++col;
    }
    if (!mpz_divisible_p(rest[col].get_mpz_t(), basis_(i, col).get_mpz_t()))
      return false;
    Integer q = rest[col] / basis_(i, col);
    for (std::size_t j = col; j < ambient_rank_; ++j) rest[j] -= q * basis_(i, j);
    ++col;
  }
  return std::all_of(rest.begin(), rest.end(),
                     [](const Integer& x) { return x == 0; });
}

std::strong_ordering operator<=>(const Lattice& a, const Lattice& b) {
  if (auto c = a.ambient_rank_ <=> b.ambient_rank_; c != 0) return c;
  return a.basis_ <=> b.basis_;
}

TorusSubgroup::TorusSubgroup(std::size_t ambient_rank)
    : annihilator_(ambient_rank) {}

TorusSubgroup::TorusSubgroup(Lattice annihilator)
    : annihilator_(std::move(annihilator)) {}

std::string TorusSubgroup::to_string() const {
  if (is_full()) return "T^" + std::to_string(ambient_rank());
  return "H" + annihilator_.basis().to_string();
}

TorusSubgroup subgroup_canonical(std::size_t r,
                                 const std::vector<IntVector>& characters) {
  for (const auto& k : characters) {
    if (k.size() != r) {
      throw InputError(ErrorCode::kLengthMismatch,
                       "character of length " + std::to_string(k.size()) +
                           " in T^" + std::to_string(r));
    }
  }
  return TorusSubgroup(Lattice(r, characters));
}

TorusSubgroup subgroup_canonical(
    std::size_t r, const std::vector<std::vector<std::int64_t>>& characters) {
  std::vector<IntVector> big;
  big.reserve(characters.size());
  for (const auto& k : characters) big.push_back(to_int_vector(k));
  return subgroup_canonical(r, big);
}

TorusSubgroup subgroup_intersect(const TorusSubgroup& a,
                                 const TorusSubgroup& b) {
  return TorusSubgroup(a.annihilator().sum(b.annihilator()));
}

std::vector<IntVector> codim_generators(const TorusSubgroup& h) {
  if (h.is_full()) return {};
  const SmithDecomposition s = snf(h.annihilator().basis());
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < s.invariant_factors.size(); ++j) {
    IntVector k = s.Q_inverse.row(j);
    for (auto& x : k) x *= s.invariant_factors[j];
    out.push_back(std::move(k));
  }
  return out;
}

bool contains(const TorusSubgroup& h, std::span<const Rational> q) {
  if (q.size() != h.ambient_rank()) {
    throw InputError(ErrorCode::kLengthMismatch,
                     "angle vector of length " + std::to_string(q.size()) +
                         " for T^" + std::to_string(h.ambient_rank()));
  }
  const IntMatrix& basis = h.annihilator().basis();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Rational pairing = 0;
    for (std::size_t j = 0; j < q.size(); ++j)
      pairing += Rational(basis(i, j)) * q[j];
    pairing.canonicalize();
    if (pairing.get_den() != 1) return false;
  }
  return true;
}

TorusSubgroup extend_by_full_torus(const TorusSubgroup& h, std::size_t l) {
  const std::size_t r = h.ambient_rank();
  std::vector<IntVector> rows = h.characters();
  for (auto& row : rows) row.resize(r + l, Integer(0));
  return TorusSubgroup(Lattice(r + l, rows));
}

IntVector to_int_vector(std::span<const std::int64_t> v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace eqbif
