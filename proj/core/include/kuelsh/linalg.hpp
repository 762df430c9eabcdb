#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kuelsh/field.hpp"

namespace kuelsh {

/// Dense row-major matrix over a fixed field.  Entries are packed element
/// codes; immutability is by convention (operations return new matrices,
/// except the explicit *_in_place ones).
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const noexcept { return *f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { a_[r * cols_ + c] = v; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }
  std::span<std::uint64_t> row(std::size_t r) {
    return {a_.data() + r * cols_, cols_};
  }

  Matrix transposed() const;
  Matrix times(const Matrix& rhs) const;

  /// Gauss-Jordan to the canonical reduced row echelon form.
  /// Returns the pivot column of each nonzero row, in order.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  const Field* f_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

/// A subspace of F^d held as its canonical RREF basis, so equality of
/// subspaces is equality of the basis matrices.
class Subspace {
 public:
  /// Row space of `rows` (the rows need not be independent).
  static Subspace row_space(Matrix rows);
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  /// Canonical RREF basis; dim() rows, no zero rows, pivots ascending.
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(std::span<const std::uint64_t> v) const;
  bool contains(const Subspace& other) const;
  /// Canonical representative of v modulo this subspace.
  std::vector<std::uint64_t> reduce(std::span<const std::uint64_t> v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Matrix rref(const Matrix& m);
/// Right null space {x : m x^T = 0} as a subspace of F^cols.
Subspace kernel(const Matrix& m);
/// Row space of m as a subspace of F^cols.
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: one RREF of the stacked block matrix yields the intersection.
Subspace intersect(const Subspace& a, const Subspace& b);
/// dim a - dim(a cap b); requires b to be contained in a (NotASubspace).
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Symmetric bilinear form given by its Gram matrix on the ambient basis.
struct BilinearForm {
  Matrix gram;
  bool nondegenerate() const { return rrefed_rank() == gram.rows(); }
  std::size_t rrefed_rank() const { return gram.rank(); }
};

/// {x : (x, m_i) = 0 for all rows m_i of m} w.r.t. (a,b) = a G b^T.
/// Requires an invertible Gram matrix (DegenerateForm).
Subspace orthogonal_complement(const Subspace& m, const BilinearForm& form);

/// Solutions {c : sum_i c_i^twist phi_i = 0} where the rows of `vectors` are
/// the phi_i and twist = p^n.  Solved by substituting d_i = c_i^(p^n),
/// taking the ordinary left kernel, and applying the inverse Frobenius
/// coordinatewise; the result is again a subspace because x -> x^(p^n) is an
/// additive bijection.
Subspace semilinear_kernel(const Matrix& vectors, std::uint64_t twist);
/// Same with the twist given as the Frobenius iterate n (twist = p^n).
Subspace semilinear_kernel_iter(const Matrix& vectors, std::uint64_t n);

/// Rank of a dense uint8-coded matrix over a field with size() <= 256,
/// destroying `data` (rows * cols, row-major).  Used for the large bar
/// complex ranks where byte storage matters.
std::size_t rank_u8(const Field& f, std::size_t rows, std::size_t cols,
                    std::vector<std::uint8_t>& data);

}  // namespace kuelsh
